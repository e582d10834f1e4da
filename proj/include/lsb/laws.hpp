#pragma once

#include "lsb/dynamics.hpp"
#include "lsb/runword.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace lsb {

class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Violation {
    std::string seed;
    std::string expected;
    std::string actual;
};

// Result of checking one law over a seed domain. Violations are capped at
// kMaxStoredViolations; total_violations keeps the true count.
struct LawReport {
    static constexpr std::size_t kMaxStoredViolations = 100;

    std::string law_id;
    std::string domain_description;
    std::uint64_t seeds_checked = 0;
    std::vector<Violation> violations;
    std::uint64_t total_violations = 0;
    // Observed extremes (max mu, max period, ...), reported but not asserted.
    std::map<std::string, std::string> observations;

    bool passed() const { return total_violations == 0; }
    void record(Violation v);
};

// Sufficient fixed-point condition: every run has count 2 and digit >= 2.
bool check_fixed_point(const RunWord& w);

// Per-word law checks. Each throws PreconditionError outside the law's
// domain and records into the report otherwise.
void check_fixed_point_law(const RunWord& w, LawReport& report);
void check_adult_stabilization(const RunWord& w, LawReport& report);
void check_kid_closure(const RunWord& w, LawReport& report);
void check_small_kid_loop(const RunWord& w, std::uint64_t bound, LawReport& report);
void check_last_digit_law(const RunWord& w, LawReport& report);
void check_type_preservation(const RunWord& w, LawReport& report);

// Exhaustive sweeps over bounded seed spaces.
LawReport sweep_fixed_point(int max_len);
LawReport sweep_last_digit(int max_len);
LawReport sweep_adult_stabilization(int max_len);
LawReport sweep_type_preservation(int max_len);
LawReport sweep_kid_closure(int max_len);
LawReport sweep_small_kid_loop(int max_len, std::uint64_t bound = 9);

// Byte-exact reproduction of the paper's small-kid-seed figure and fossil
// table (cycle sets and periods asserted; the table's Steps column is only
// reported, its counting convention does not match any single definition).
LawReport reproduce_figure1();
LawReport reproduce_fossils();

nlohmann::json law_report_to_json(const LawReport& report);

}  // namespace lsb
