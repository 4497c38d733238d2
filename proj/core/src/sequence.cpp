#include "czcp/sequence.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace czcp {

BinarySequence::BinarySequence(std::vector<value_type> elements) : elements_(std::move(elements)) {
    if (elements_.empty()) {
        throw ContractError("binary sequence must have length >= 1");
    }
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (elements_[i] != 1 && elements_[i] != -1) {
            throw ContractError("binary sequence element " + std::to_string(i) + " is not +1 or -1");
        }
    }
}

BinarySequence::BinarySequence(std::initializer_list<int> elements)
    : BinarySequence(std::vector<value_type>(elements.begin(), elements.end())) {}

std::strong_ordering BinarySequence::operator<=>(const BinarySequence& other) const noexcept {
    // +1 before -1, i.e. reversed numeric order per element.
    const std::size_t n = std::min(size(), other.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (elements_[i] != other.elements_[i]) {
            return elements_[i] > other.elements_[i] ? std::strong_ordering::less
                                                     : std::strong_ordering::greater;
        }
    }
    return size() <=> other.size();
}

SequencePair::SequencePair(BinarySequence first, BinarySequence second)
    : first_(std::move(first)), second_(std::move(second)) {
    if (first_.size() != second_.size()) {
        throw ContractError("sequence pair members differ in length (" + std::to_string(first_.size()) +
                            " vs " + std::to_string(second_.size()) + ")");
    }
}

std::strong_ordering SequencePair::operator<=>(const SequencePair& other) const noexcept {
    if (auto c = first_ <=> other.first_; c != 0) {
        return c;
    }
    return second_ <=> other.second_;
}

namespace {

BinarySequence parse_line(std::string_view text, std::size_t line) {
    if (text.empty()) {
        throw FormatError(line == 0 ? "empty sequence" : "line " + std::to_string(line + 1) + ": empty sequence",
                          line, 0);
    }
    std::vector<BinarySequence::value_type> elements;
    elements.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (ch == '+') {
            elements.push_back(1);
        } else if (ch == '-') {
            elements.push_back(-1);
        } else {
            std::ostringstream msg;
            if (line > 0) {
                msg << "line " << line + 1 << ", ";
            }
            msg << "position " << i << ": invalid character ";
            if (ch >= 0x20 && ch < 0x7f) {
                msg << '\'' << ch << '\'';
            } else {
                msg << "0x" << std::hex << (static_cast<unsigned>(ch) & 0xffu);
            }
            msg << " (expected '+' or '-')";
            throw FormatError(msg.str(), line, i);
        }
    }
    return BinarySequence(std::move(elements));
}

std::string_view strip_cr(std::string_view s) {
    if (!s.empty() && s.back() == '\r') {
        s.remove_suffix(1);
    }
    return s;
}

}  // namespace

BinarySequence parse_sequence(std::string_view text) {
    if (!text.empty() && text.back() == '\n') {
        text.remove_suffix(1);
    }
    return parse_line(strip_cr(text), 0);
}

std::string format_sequence(const BinarySequence& s) {
    std::string out;
    out.reserve(s.size());
    for (int v : s) {
        out.push_back(v > 0 ? '+' : '-');
    }
    return out;
}

SequencePair parse_pair(std::string_view first, std::string_view second) {
    BinarySequence a = parse_line(first, 0);
    BinarySequence b = parse_line(second, 1);
    if (a.size() != b.size()) {
        throw FormatError("pair lines differ in length (" + std::to_string(a.size()) + " vs " +
                              std::to_string(b.size()) + ")",
                          1, std::min(a.size(), b.size()));
    }
    return SequencePair(std::move(a), std::move(b));
}

SequencePair parse_pair_text(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            if (start < text.size()) {
                lines.push_back(strip_cr(text.substr(start)));
            }
            break;
        }
        lines.push_back(strip_cr(text.substr(start, nl - start)));
        start = nl + 1;
    }
    if (lines.size() != 2) {
        throw FormatError("pair file must contain exactly two lines, found " + std::to_string(lines.size()),
                          std::min<std::size_t>(lines.size(), 2), 0);
    }
    return parse_pair(lines[0], lines[1]);
}

SequencePair read_pair_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FormatError("cannot open pair file '" + path + "'", 0, 0);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_pair_text(buf.str());
}

std::string format_pair(const SequencePair& p) {
    return format_sequence(p.first()) + '\n' + format_sequence(p.second()) + '\n';
}

BinarySequence reverse(const BinarySequence& s) {
    std::vector<BinarySequence::value_type> out(s.elements().rbegin(), s.elements().rend());
    return BinarySequence(std::move(out));
}

BinarySequence negate(const BinarySequence& s) {
    std::vector<BinarySequence::value_type> out(s.begin(), s.end());
    for (auto& v : out) {
        v = static_cast<BinarySequence::value_type>(-v);
    }
    return BinarySequence(std::move(out));
}

std::vector<int> kronecker(const BinarySequence& c, std::span<const int> x) {
    std::vector<int> out;
    out.reserve(c.size() * x.size());
    for (int ci : c) {
        for (int xj : x) {
            out.push_back(ci * xj);
        }
    }
    return out;
}

std::vector<int> to_ints(const BinarySequence& s) {
    return std::vector<int>(s.begin(), s.end());
}

}  // namespace czcp
