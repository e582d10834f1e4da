#include "lsb/dynamics.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace lsb {

namespace {

// Rotate so the word_compare-smallest element comes first.
void canonicalize_cycle(std::vector<RunWord>& cycle) {
    auto it = std::min_element(cycle.begin(), cycle.end(), WordLess{});
    std::rotate(cycle.begin(), it, cycle.end());
}

std::vector<RunWord> collect_cycle(const RunWord& seed, std::uint64_t mu, std::uint64_t period) {
    std::vector<RunWord> cycle;
    cycle.reserve(period);
    RunWord cur = iterate_n(seed, mu);
    for (std::uint64_t i = 0; i < period; ++i) {
        cycle.push_back(cur);
        cur = lsb_step(cur);
    }
    canonicalize_cycle(cycle);
    return cycle;
}

}  // namespace

RunWord iterate_n(RunWord w, std::uint64_t n) {
    for (std::uint64_t i = 0; i < n; ++i) w = lsb_step(w);
    return w;
}

std::vector<RunWord> trajectory(RunWord w, std::uint64_t n) {
    std::vector<RunWord> out;
    out.reserve(n + 1);
    out.push_back(std::move(w));
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(lsb_step(out.back()));
    return out;
}

Orbit detect_orbit(const RunWord& w, std::uint64_t max_steps) {
    // Memoize on the normalized run sequences; never on rendered digits.
    // Trajectories are short (period <= 9 and small transients), so a linear
    // scan beats an ordered map here.
    std::vector<RunWord> traj{w};
    for (std::uint64_t step = 1; step <= max_steps; ++step) {
        RunWord next = lsb_step(traj.back());
        auto it = std::find(traj.begin(), traj.end(), next);
        if (it != traj.end()) {
            std::uint64_t mu = static_cast<std::uint64_t>(it - traj.begin());
            std::uint64_t period = step - mu;
            std::vector<RunWord> cycle(traj.begin() + static_cast<std::ptrdiff_t>(mu),
                                       traj.end());
            canonicalize_cycle(cycle);
            return Orbit{w, mu, period, step, std::move(cycle)};
        }
        traj.push_back(std::move(next));
    }
    throw StepBudgetExceeded(render_compressed(w), max_steps);
}

Orbit detect_orbit_brent(const RunWord& w, std::uint64_t max_steps) {
    std::uint64_t power = 1, period = 1;
    RunWord tortoise = w;
    RunWord hare = lsb_step(w);
    while (!(tortoise == hare)) {
        if (power == period) {
            tortoise = hare;
            power *= 2;
            period = 0;
        }
        hare = lsb_step(hare);
        ++period;
        if (power > 2 * max_steps)
            throw StepBudgetExceeded(render_compressed(w), max_steps);
    }
    // Find mu: two pointers, the front one `period` steps ahead.
    tortoise = w;
    hare = iterate_n(w, period);
    std::uint64_t mu = 0;
    while (!(tortoise == hare)) {
        tortoise = lsb_step(tortoise);
        hare = lsb_step(hare);
        ++mu;
        if (mu > max_steps)
            throw StepBudgetExceeded(render_compressed(w), max_steps);
    }
    if (mu + period > max_steps)
        throw StepBudgetExceeded(render_compressed(w), max_steps);
    return Orbit{w, mu, period, mu + period, collect_cycle(w, mu, period)};
}

const RunWord& canonical_cycle(const Orbit& orbit) { return orbit.cycle.front(); }

nlohmann::json orbit_to_json(const Orbit& orbit,
                             const std::optional<std::vector<RunWord>>& trajectory_prefix) {
    nlohmann::json j;
    j["seed"] = render_compressed(orbit.seed);
    j["mu"] = orbit.transient;
    j["period"] = orbit.period;
    j["first_repeat"] = orbit.first_repeat;
    auto& cyc = j["cycle"] = nlohmann::json::array();
    for (const auto& wrd : orbit.cycle) cyc.push_back(render_compressed(wrd));
    if (trajectory_prefix) {
        auto& pre = j["trajectory_prefix"] = nlohmann::json::array();
        for (const auto& wrd : *trajectory_prefix) pre.push_back(render_compressed(wrd));
    }
    return j;
}

}  // namespace lsb
