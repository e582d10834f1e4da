#pragma once

#include "lsb/dynamics.hpp"
#include "lsb/runword.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace lsb {

struct SeedSpace {
    int min_len = 1;
    int max_len = 1;
    std::vector<Digit> alphabet;  // sorted ascending, unique
    bool leading_zeros = true;

    static SeedSpace full(int min_len, int max_len, bool leading_zeros = true);
    std::string describe() const;
};

// Number of words in the space (fits in u64 for any desk-scale sweep).
std::uint64_t seed_space_size(const SeedSpace& space);

// The word at a given index, in word_compare order (length ascending, then
// lexicographic over the sorted alphabet).
RunWord seed_at(const SeedSpace& space, std::uint64_t index);

// Visit indices [begin, end) of the space in order.
void for_each_seed(const SeedSpace& space, std::uint64_t begin, std::uint64_t end,
                   const std::function<void(const RunWord&)>& fn);
void for_each_seed(const SeedSpace& space, const std::function<void(const RunWord&)>& fn);

struct CycleClass {
    RunWord canonical;
    std::uint64_t period;
    std::vector<RunWord> members;  // canonical first, following Z
    std::uint64_t basin_count;
    std::uint64_t max_transient;
    RunWord witness_max_transient;  // word_compare-smallest seed attaining it
};

struct CensusReport {
    std::string space_description;
    std::uint64_t total_seeds = 0;
    std::vector<CycleClass> classes;  // sorted by canonical, word_compare order
    std::map<std::uint64_t, std::uint64_t> period_histogram;
    std::uint64_t global_max_transient = 0;
    std::optional<RunWord> witness_max_transient;
    std::uint64_t global_max_first_repeat = 0;
    std::optional<RunWord> witness_max_first_repeat;
    // Shard tag: which index range of the space this report covers. Used to
    // reject overlapping merges.
    std::uint64_t shard_begin = 0;
    std::uint64_t shard_end = 0;
};

class OverlappingSpaceError : public std::invalid_argument {
public:
    OverlappingSpaceError()
        : std::invalid_argument("merge_reports: reports cover overlapping seed ranges") {}
};

// Orbit census over a full space. Deterministic: output is identical for any
// jobs value. Propagates StepBudgetExceeded naming the offending seed.
CensusReport run_census(const SeedSpace& space, std::uint64_t max_steps = 10000,
                        unsigned jobs = 1);

// Census over one contiguous shard [begin, end) of the space (checkpointing).
CensusReport run_census_shard(const SeedSpace& space, std::uint64_t begin, std::uint64_t end,
                              std::uint64_t max_steps = 10000);

CensusReport merge_reports(const CensusReport& a, const CensusReport& b);

struct SigmaResult {
    std::uint64_t n;
    int bound;
    // Smallest positive integer (no leading zeros) with mu == n, if any seed
    // of total length <= bound qualifies.
    std::optional<RunWord> mu_witness;
    // Same search under the first-repeat convention (mu + tau == n).
    std::optional<RunWord> first_repeat_witness;
};

SigmaResult find_sigma(std::uint64_t n, int bound, std::uint64_t max_steps = 10000);

struct ConjectureTerm {
    std::string engine;  // compressed notation
    std::string paper;   // empty when the paper's chain has no term here
    bool match;
};

struct ConjectureReport {
    std::uint64_t mu;
    std::uint64_t period;
    std::uint64_t first_repeat;
    std::vector<std::string> chain;  // seed through first repeat, compressed
    std::vector<ConjectureTerm> comparison;
    bool chain_matches_paper;  // every printed paper term agrees
};

// Orbit of y = 2 repeated 33333333333 times, computed entirely in compressed
// space, compared term by term against the chain printed in the source paper.
ConjectureReport probe_conjecture(std::uint64_t max_steps = 10000);

nlohmann::json census_summary_to_json(const CensusReport& report);
nlohmann::json cycle_class_to_json(const CycleClass& cls);
CensusReport census_report_from_json(const nlohmann::json& j);
nlohmann::json census_report_to_json(const CensusReport& report);
std::string census_to_csv(const CensusReport& report);
nlohmann::json conjecture_report_to_json(const ConjectureReport& report);

}  // namespace lsb
