#include "lsb/maxmap.hpp"

namespace lsb {

namespace {

void append_run(std::vector<Run>& out, Digit d, Count count) {
    if (!out.empty() && out.back().digit == d)
        out.back().count += count;
    else
        out.push_back({d, std::move(count)});
}

// Decimal digits of n, most significant first, merged into `out`.
void append_decimal(std::vector<Run>& out, const Count& n) {
    if (n <= 9) {
        append_run(out, Digit(static_cast<int>(n)), 1);
        return;
    }
    for (char c : n.str()) append_run(out, Digit::from_char(c), 1);
}

}  // namespace

const char* word_type_name(WordType t) {
    switch (t) {
        case WordType::Kid: return "kid";
        case WordType::Adult: return "adult";
        case WordType::Mixed: return "mixed";
    }
    return "?";
}

std::vector<Run> z_piece(const Run& r) {
    std::vector<Run> out;
    Count m = std::max(r.count, Count(r.digit.value()));
    append_decimal(out, m);
    append_run(out, r.digit, 1);
    return out;
}

RunWord lsb_step(const RunWord& w) {
    std::vector<Run> out;
    out.reserve(w.run_count() * 2);
    for (const auto& r : w.runs()) {
        Count m = std::max(r.count, Count(r.digit.value()));
        append_decimal(out, m);
        append_run(out, r.digit, 1);
    }
    return RunWord(std::move(out));
}

RunWord ls_step(const RunWord& w) {
    std::vector<Run> out;
    out.reserve(w.run_count() * 2);
    for (const auto& r : w.runs()) {
        if (r.count > 9) throw RunCountOverflow(r.count);
        append_run(out, Digit(static_cast<int>(r.count)), 1);
        append_run(out, r.digit, 1);
    }
    return RunWord(std::move(out));
}

RunWord lsa_step(const RunWord& w) {
    std::vector<Run> out;
    out.reserve(w.run_count() * 2);
    for (const auto& r : w.runs()) {
        if (r.count > 9) throw RunCountOverflow(r.count);
        append_run(out, Digit(static_cast<int>(r.count)), 2);
        append_run(out, r.digit, 2);
    }
    return RunWord(std::move(out));
}

WordType classify(const RunWord& w) {
    bool any_kid = false, any_adult = false;
    for (const auto& r : w.runs())
        (r.digit.value() <= 3 ? any_kid : any_adult) = true;
    if (!any_adult) return WordType::Kid;
    if (!any_kid) return WordType::Adult;
    return WordType::Mixed;
}

Digit last_digit(const RunWord& w) { return w.back().digit; }

Count max_run(const RunWord& w) {
    Count m = 0;
    for (const auto& r : w.runs())
        if (r.count > m) m = r.count;
    return m;
}

}  // namespace lsb
