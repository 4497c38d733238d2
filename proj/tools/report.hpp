// JSON and plain-text rendering shared by the czcp subcommands.
#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "czcp/catalog.hpp"
#include "czcp/correlation.hpp"
#include "czcp/search.hpp"
#include "czcp/turyn.hpp"
#include "czcp/verify.hpp"

namespace czcp::cli {

using nlohmann::json;

json verdict_json(const PairVerdict& v);

// label, both sequences, aacs/accs profiles and the verdict
json pair_json(std::string_view label, const SequencePair& p);

json construction_json(std::string_view mode, const ConstructionReport& r);

json search_json(const SearchSpec& spec, const SearchResult& r);

// "(12,5)-CZCP, optimal" and similar
std::string verdict_summary(const PairVerdict& v);

void print_pair(std::ostream& os, std::string_view label, const SequencePair& p);

}  // namespace czcp::cli
