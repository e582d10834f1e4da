#pragma once

#include "lsb/maxmap.hpp"
#include "lsb/runword.hpp"

#include <cstdint>
#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace lsb {

class StepBudgetExceeded : public std::runtime_error {
public:
    StepBudgetExceeded(std::string seed, std::uint64_t max_steps)
        : std::runtime_error("no repeat within " + std::to_string(max_steps) +
                             " steps for seed " + seed),
          seed_(std::move(seed)),
          max_steps_(max_steps) {}
    const std::string& seed() const { return seed_; }
    std::uint64_t max_steps() const { return max_steps_; }

private:
    std::string seed_;
    std::uint64_t max_steps_;
};

// Orbit of a seed under iterated lsb_step. transient (mu) is the least m with
// Z^m(seed) on the cycle, period (tau) the cycle length, first_repeat = mu +
// tau. The cycle is stored starting at its word_compare-smallest element.
struct Orbit {
    RunWord seed;
    std::uint64_t transient;
    std::uint64_t period;
    std::uint64_t first_repeat;
    std::vector<RunWord> cycle;
};

RunWord iterate_n(RunWord w, std::uint64_t n);

// [w, Z(w), ..., Z^n(w)], length n+1.
std::vector<RunWord> trajectory(RunWord w, std::uint64_t n);

// Memoization-based detector. Throws StepBudgetExceeded past max_steps.
Orbit detect_orbit(const RunWord& w, std::uint64_t max_steps = 10000);

// Brent's cycle-finding, same Orbit contract as detect_orbit.
Orbit detect_orbit_brent(const RunWord& w, std::uint64_t max_steps = 10000);

const RunWord& canonical_cycle(const Orbit& orbit);

nlohmann::json orbit_to_json(const Orbit& orbit,
                             const std::optional<std::vector<RunWord>>& trajectory_prefix = {});

}  // namespace lsb
