#include "lsb/runword.hpp"

#include <algorithm>
#include <cctype>

namespace lsb {

RunWord::RunWord(std::vector<Run> runs) {
    if (runs.empty())
        throw std::invalid_argument("RunWord: empty run sequence");
    runs_.reserve(runs.size());
    for (auto& r : runs) {
        if (r.count < 1)
            throw std::invalid_argument("RunWord: run count < 1");
        if (!runs_.empty() && runs_.back().digit == r.digit)
            runs_.back().count += r.count;
        else
            runs_.push_back(std::move(r));
    }
}

Count RunWord::total_length() const {
    Count total = 0;
    for (const auto& r : runs_) total += r.count;
    return total;
}

RunWord normalize(std::vector<Run> runs) { return RunWord(std::move(runs)); }

RunWord parse_digits(std::string_view s) {
    if (s.empty())
        throw ParseError("empty input", 0);
    std::vector<Run> runs;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c < '0' || c > '9')
            throw ParseError(std::string("non-digit character '") + c + "'", i);
        Digit d = Digit::from_char(c);
        if (!runs.empty() && runs.back().digit == d)
            runs.back().count += 1;
        else
            runs.push_back({d, 1});
    }
    return RunWord(std::move(runs));
}

RunWord parse_compressed(std::string_view expr) {
    std::vector<Run> runs;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < expr.size() && std::isspace(static_cast<unsigned char>(expr[i]))) ++i;
    };
    skip_ws();
    while (i < expr.size()) {
        char c = expr[i];
        if (c < '0' || c > '9')
            throw ParseError(std::string("expected digit, got '") + c + "'", i);
        Digit d = Digit::from_char(c);
        ++i;
        Count count = 1;
        if (i < expr.size() && expr[i] == '^') {
            ++i;
            std::size_t count_start = i;
            std::string digits;
            while (i < expr.size() && expr[i] >= '0' && expr[i] <= '9') digits += expr[i++];
            if (digits.empty())
                throw ParseError("expected count after '^'", i);
            count = Count(digits);
            if (count == 0)
                throw ParseError("count must be nonzero", count_start);
        }
        if (!runs.empty() && runs.back().digit == d)
            runs.back().count += count;
        else
            runs.push_back({d, std::move(count)});
        skip_ws();
    }
    if (runs.empty())
        throw ParseError("empty word", expr.size());
    return RunWord(std::move(runs));
}

std::string render_digits(const RunWord& w, const Count& max_len) {
    Count total = w.total_length();
    if (total > max_len)
        throw WordTooLongError(std::move(total));
    std::string out;
    out.reserve(static_cast<std::size_t>(total));
    for (const auto& r : w.runs())
        out.append(static_cast<std::size_t>(r.count), r.digit.to_char());
    return out;
}

std::string render_compressed(const RunWord& w) {
    std::string out;
    bool prev_caret = false;
    for (const auto& r : w.runs()) {
        if (prev_caret) out += ' ';  // d^n followed by a digit would extend the count
        if (r.count <= 3) {
            out.append(static_cast<std::size_t>(r.count), r.digit.to_char());
            prev_caret = false;
        } else {
            out += r.digit.to_char();
            out += '^';
            out += r.count.str();
            prev_caret = true;
        }
    }
    return out;
}

std::strong_ordering word_compare(const RunWord& a, const RunWord& b) {
    Count la = a.total_length();
    Count lb = b.total_length();
    if (la != lb) return la < lb ? std::strong_ordering::less : std::strong_ordering::greater;
    // Equal length: lexicographic, run by run.
    std::size_t i = 0, j = 0;
    Count ra = a.runs()[0].count;
    Count rb = b.runs()[0].count;
    while (i < a.run_count() && j < b.run_count()) {
        const Digit da = a.runs()[i].digit;
        const Digit db = b.runs()[j].digit;
        if (da != db) return da < db ? std::strong_ordering::less : std::strong_ordering::greater;
        Count take = std::min(ra, rb);
        ra -= take;
        rb -= take;
        if (ra == 0 && ++i < a.run_count()) ra = a.runs()[i].count;
        if (rb == 0 && ++j < b.run_count()) rb = b.runs()[j].count;
    }
    return std::strong_ordering::equal;
}

}  // namespace lsb
