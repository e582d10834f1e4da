#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lsb {

// Run counts must cover the conjecture seed (a run of 33333333333 twos) and
// anything a user writes in d^n notation, so they are arbitrary precision.
using Count = boost::multiprecision::cpp_int;

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class WordTooLongError : public std::runtime_error {
public:
    explicit WordTooLongError(Count total_length)
        : std::runtime_error("word too long to render: " + total_length.str() + " digits"),
          total_length_(std::move(total_length)) {}
    const Count& total_length() const { return total_length_; }

private:
    Count total_length_;
};

class Digit {
public:
    explicit Digit(int value) : value_(value) {
        if (value < 0 || value > 9)
            throw std::invalid_argument("digit out of range: " + std::to_string(value));
    }
    static Digit from_char(char c) {
        if (c < '0' || c > '9')
            throw std::invalid_argument(std::string("not a digit: '") + c + "'");
        return Digit(c - '0');
    }
    int value() const { return value_; }
    char to_char() const { return static_cast<char>('0' + value_); }
    auto operator<=>(const Digit&) const = default;

private:
    int value_;
};

struct Run {
    Digit digit;
    Count count;

    bool operator==(const Run&) const = default;
};

// A digit string in run-length form. Always normalized: nonempty, all counts
// >= 1, adjacent runs carry distinct digits. Immutable after construction.
class RunWord {
public:
    // Normalizes: merges adjacent equal-digit runs. Throws on empty input or
    // a count < 1.
    explicit RunWord(std::vector<Run> runs);

    const std::vector<Run>& runs() const { return runs_; }
    std::size_t run_count() const { return runs_.size(); }
    const Run& front() const { return runs_.front(); }
    const Run& back() const { return runs_.back(); }

    Count total_length() const;

    bool operator==(const RunWord&) const = default;

private:
    std::vector<Run> runs_;
};

RunWord normalize(std::vector<Run> runs);

// Plain digit string, e.g. "11193222".
RunWord parse_digits(std::string_view s);

// Compressed notation: term+ where term := digit | digit '^' count, optional
// whitespace between terms. Equal-digit neighbours merge.
RunWord parse_compressed(std::string_view expr);

// Full digit expansion; throws WordTooLongError instead of truncating.
std::string render_digits(const RunWord& w, const Count& max_len);

// Re-parseable by parse_compressed. Runs of count <= 3 print as repeated
// digits, longer runs as d^n.
std::string render_compressed(const RunWord& w);

// Total order: shorter total_length first, then lexicographic on the digit
// expansion, computed run-by-run without materializing.
std::strong_ordering word_compare(const RunWord& a, const RunWord& b);

struct WordLess {
    bool operator()(const RunWord& a, const RunWord& b) const {
        return word_compare(a, b) < 0;
    }
};

}  // namespace lsb
