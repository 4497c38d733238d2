// Binary (+1/-1) sequences and sequence pairs.
//
// Text form follows the usual display convention: '+' for +1, '-' for -1.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace czcp {

// Raised for malformed sequence or pair text. `line` and `column` are
// zero-based; `line` is 0 for single-sequence input.
class FormatError : public std::runtime_error {
public:
    FormatError(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error(what), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// Violated precondition on an otherwise well-formed call (length mismatch,
// odd length where even is required, and so on).
class ContractError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Fixed-length sequence over {+1, -1}. Never empty.
class BinarySequence {
public:
    using value_type = std::int8_t;

    // Throws ContractError if `elements` is empty or holds anything but +1/-1.
    explicit BinarySequence(std::vector<value_type> elements);
    BinarySequence(std::initializer_list<int> elements);

    std::size_t size() const noexcept { return elements_.size(); }
    int operator[](std::size_t i) const noexcept { return elements_[i]; }
    std::span<const value_type> elements() const noexcept { return elements_; }

    auto begin() const noexcept { return elements_.begin(); }
    auto end() const noexcept { return elements_.end(); }

    bool operator==(const BinarySequence&) const = default;

    // Lexicographic order of the text form ('+' sorts before '-').
    std::strong_ordering operator<=>(const BinarySequence& other) const noexcept;

private:
    std::vector<value_type> elements_;
};

// Ordered pair of equal-length binary sequences.
class SequencePair {
public:
    // Throws ContractError on length mismatch.
    SequencePair(BinarySequence first, BinarySequence second);

    const BinarySequence& first() const noexcept { return first_; }
    const BinarySequence& second() const noexcept { return second_; }
    std::size_t size() const noexcept { return first_.size(); }

    bool operator==(const SequencePair&) const = default;
    std::strong_ordering operator<=>(const SequencePair& other) const noexcept;

private:
    BinarySequence first_;
    BinarySequence second_;
};

BinarySequence parse_sequence(std::string_view text);
std::string format_sequence(const BinarySequence& s);

SequencePair parse_pair(std::string_view first, std::string_view second);

// Pair file: exactly two '+/-' lines, optional trailing newline. Errors carry
// the offending line and column.
SequencePair parse_pair_text(std::string_view text);
SequencePair read_pair_file(const std::string& path);
std::string format_pair(const SequencePair& p);

BinarySequence reverse(const BinarySequence& s);
BinarySequence negate(const BinarySequence& s);

// Blocks c[0]*x, c[1]*x, ..., c[M-1]*x concatenated: the left operand indexes
// blocks, the right operand fills them. `x` may hold 0 entries.
std::vector<int> kronecker(const BinarySequence& c, std::span<const int> x);

std::vector<int> to_ints(const BinarySequence& s);

}  // namespace czcp
