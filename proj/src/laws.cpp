#include "lsb/laws.hpp"

#include "lsb/census.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace lsb {

namespace {

std::string show(const RunWord& w) { return render_compressed(w); }

SeedSpace space_over(std::string digits, int max_len) {
    SeedSpace s;
    s.min_len = 1;
    s.max_len = max_len;
    for (char c : digits) s.alphabet.push_back(Digit::from_char(c));
    return s;
}

void note_max(LawReport& report, const std::string& key, std::uint64_t value) {
    auto it = report.observations.find(key);
    if (it == report.observations.end() || std::stoull(it->second) < value)
        report.observations[key] = std::to_string(value);
}

}  // namespace

void LawReport::record(Violation v) {
    ++total_violations;
    if (violations.size() < kMaxStoredViolations) violations.push_back(std::move(v));
}

bool check_fixed_point(const RunWord& w) {
    for (const auto& r : w.runs())
        if (r.count != 2 || r.digit.value() < 2) return false;
    return true;
}

void check_fixed_point_law(const RunWord& w, LawReport& report) {
    ++report.seeds_checked;
    if (!check_fixed_point(w)) return;
    RunWord next = lsb_step(w);
    if (!(next == w)) report.record({show(w), show(w), show(next)});
}

void check_adult_stabilization(const RunWord& w, LawReport& report) {
    if (classify(w) != WordType::Adult)
        throw PreconditionError("adult stabilization: seed is not adult: " + show(w));
    if (max_run(w) > 9)
        throw PreconditionError("adult stabilization: run exceeds 9: " + show(w));
    ++report.seeds_checked;
    RunWord z2 = iterate_n(w, 2);
    RunWord z3 = lsb_step(z2);
    if (!(z3 == z2)) report.record({show(w), show(z2), show(z3)});
}

void check_kid_closure(const RunWord& w, LawReport& report) {
    if (classify(w) != WordType::Kid)
        throw PreconditionError("kid closure: seed is not kid: " + show(w));
    if (max_run(w) > 3)
        throw PreconditionError("kid closure: run exceeds 3: " + show(w));
    ++report.seeds_checked;
    RunWord next = lsb_step(w);
    if (classify(next) != WordType::Kid || max_run(next) > 3)
        report.record({show(w), "kid word with runs <= 3", show(next)});
}

void check_small_kid_loop(const RunWord& w, std::uint64_t bound, LawReport& report) {
    if (classify(w) != WordType::Kid || max_run(w) > 3)
        throw PreconditionError("small kid loop: seed not kid with runs <= 3: " + show(w));
    ++report.seeds_checked;
    Orbit orbit = detect_orbit(w);
    note_max(report, "max_mu", orbit.transient);
    note_max(report, "max_first_repeat", orbit.first_repeat);
    note_max(report, "max_period", orbit.period);
    if (orbit.first_repeat > bound)
        report.record({show(w), "first_repeat <= " + std::to_string(bound),
                       "first_repeat = " + std::to_string(orbit.first_repeat)});
}

void check_last_digit_law(const RunWord& w, LawReport& report) {
    ++report.seeds_checked;
    Digit before = last_digit(w);
    Digit after = last_digit(lsb_step(w));
    if (before != after)
        report.record({show(w), std::string(1, before.to_char()),
                       std::string(1, after.to_char())});
}

void check_type_preservation(const RunWord& w, LawReport& report) {
    if (classify(w) != WordType::Adult)
        throw PreconditionError("type preservation: seed is not adult: " + show(w));
    ++report.seeds_checked;
    RunWord next = lsb_step(w);
    if (classify(next) != WordType::Adult)
        report.record({show(w), "adult", word_type_name(classify(next))});
}

LawReport sweep_fixed_point(int max_len) {
    LawReport report{.law_id = "fixedpoint",
                     .domain_description = "all words of length <= " + std::to_string(max_len)};
    for_each_seed(space_over("0123456789", max_len),
                  [&](const RunWord& w) { check_fixed_point_law(w, report); });
    return report;
}

LawReport sweep_last_digit(int max_len) {
    LawReport report{.law_id = "lastdigit",
                     .domain_description = "all words of length <= " + std::to_string(max_len)};
    for_each_seed(space_over("0123456789", max_len),
                  [&](const RunWord& w) { check_last_digit_law(w, report); });
    return report;
}

LawReport sweep_adult_stabilization(int max_len) {
    LawReport report{.law_id = "adult",
                     .domain_description = "adult words of length <= " + std::to_string(max_len) +
                                           " plus single runs a^n, n <= 9"};
    for_each_seed(space_over("456789", max_len),
                  [&](const RunWord& w) { check_adult_stabilization(w, report); });
    for (int d = 4; d <= 9; ++d)
        for (int n = max_len + 1; n <= 9; ++n)
            check_adult_stabilization(RunWord({{Digit(d), Count(n)}}), report);
    return report;
}

LawReport sweep_type_preservation(int max_len) {
    LawReport report{.law_id = "typepreserve",
                     .domain_description =
                         "adult words of length <= " + std::to_string(max_len)};
    for_each_seed(space_over("456789", max_len),
                  [&](const RunWord& w) { check_type_preservation(w, report); });
    return report;
}

LawReport sweep_kid_closure(int max_len) {
    LawReport report{.law_id = "kid",
                     .domain_description = "kid words with runs <= 3, length <= " +
                                           std::to_string(max_len)};
    for_each_seed(space_over("0123", max_len), [&](const RunWord& w) {
        if (max_run(w) <= 3) check_kid_closure(w, report);
    });
    return report;
}

LawReport sweep_small_kid_loop(int max_len, std::uint64_t bound) {
    LawReport report{.law_id = "smallkid",
                     .domain_description = "kid words with runs <= 3, length <= " +
                                           std::to_string(max_len)};
    for_each_seed(space_over("0123", max_len), [&](const RunWord& w) {
        if (max_run(w) <= 3) check_small_kid_loop(w, bound, report);
    });
    return report;
}

LawReport reproduce_figure1() {
    LawReport report{.law_id = "figure1", .domain_description = "small kid integer map"};
    static const std::pair<const char*, const char*> edges[] = {
        {"0", "10"},    {"00", "20"},  {"000", "30"}, {"1", "11"},
        {"11", "21"},   {"111", "31"}, {"222", "32"}, {"2", "22"},
        {"22", "22"},   {"3", "33"},   {"33", "33"},  {"333", "33"},
    };
    for (const auto& [from, to] : edges) {
        ++report.seeds_checked;
        RunWord got = lsb_step(parse_digits(from));
        RunWord want = parse_digits(to);
        if (!(got == want)) report.record({from, to, show(got)});
    }
    return report;
}

namespace {

struct FossilRow {
    const char* seed;
    std::vector<const char*> chain;   // intermediate words printed in the table
    std::vector<const char*> cycle;   // limit cycle set
    std::uint64_t period;
    std::uint64_t table_steps;        // printed value; reported, never asserted
};

const std::vector<FossilRow>& fossil_rows() {
    static const std::vector<FossilRow> rows = {
        {"32", {"3322"}, {"3322"}, 1, 1},
        {"31", {"3311", "3321", "332211"}, {"332221", "333211"}, 2, 5},
        {"21", {"2211", "2221", "3211"}, {"332221", "333211"}, 2, 5},
        {"00",
         {"20", "2210", "221110", "223110", "22332110", "2233222110"},
         {"2233222110", "2233322110"},
         2,
         7},
        {"20",
         {"2210", "221110", "223110", "22332110", "2233222110"},
         {"2233222110", "2233322110"},
         2,
         7},
        {"0", {"10", "1110", "3110", "332110", "33222110"}, {"33222110", "33322110"}, 2, 6},
        {"10", {"1110", "3110", "332110", "33222110"}, {"33222110", "33322110"}, 2, 6},
        {"000",
         {"30", "3310", "331110", "333110", "332110", "33222110"},
         {"33222110", "33322110"},
         2,
         7},
        {"30", {"3310", "331110", "333110", "332110"}, {"33222110", "33322110"}, 2, 7},
    };
    return rows;
}

}  // namespace

LawReport reproduce_fossils() {
    LawReport report{.law_id = "fossils", .domain_description = "small kid seed cycle table"};
    for (const auto& row : fossil_rows()) {
        ++report.seeds_checked;
        RunWord seed = parse_digits(row.seed);
        Orbit orbit = detect_orbit(seed);

        std::vector<RunWord> expected;
        for (const char* c : row.cycle) expected.push_back(parse_digits(c));
        std::sort(expected.begin(), expected.end(), WordLess{});
        std::vector<RunWord> got = orbit.cycle;
        std::sort(got.begin(), got.end(), WordLess{});
        if (orbit.period != row.period || got != expected) {
            std::string actual;
            for (const auto& w : orbit.cycle) actual += show(w) + " ";
            report.record({row.seed, "period " + std::to_string(row.period), actual});
        }

        std::vector<RunWord> traj = trajectory(seed, orbit.first_repeat);
        for (const char* c : row.chain) {
            RunWord want = parse_digits(c);
            if (std::find(traj.begin(), traj.end(), want) == traj.end())
                report.record({row.seed, std::string(c) + " in trajectory", "absent"});
        }

        report.observations[std::string("mu(") + row.seed + ")"] =
            std::to_string(orbit.transient) + " (table steps " +
            std::to_string(row.table_steps) + ")";
    }
    return report;
}

nlohmann::json law_report_to_json(const LawReport& report) {
    nlohmann::json j;
    j["law_id"] = report.law_id;
    j["domain"] = report.domain_description;
    j["seeds_checked"] = report.seeds_checked;
    j["passed"] = report.passed();
    j["total_violations"] = report.total_violations;
    auto& v = j["violations"] = nlohmann::json::array();
    for (const auto& viol : report.violations)
        v.push_back({{"seed", viol.seed}, {"expected", viol.expected}, {"actual", viol.actual}});
    if (!report.observations.empty()) j["observations"] = report.observations;
    return j;
}

}  // namespace lsb
