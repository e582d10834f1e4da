// lsb: look-and-say-the-biggest sequence toolkit.
//
// Subcommands: iterate, orbit, verify, census, sigma, conjecture.
// Exit codes: 0 ok, 1 law violations found, 2 parse/usage error,
// 3 rule precondition violation, 4 step budget exceeded, 5 I/O error.

#include "lsb/census.hpp"
#include "lsb/dynamics.hpp"
#include "lsb/laws.hpp"
#include "lsb/maxmap.hpp"
#include "lsb/runword.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <thread>

namespace {

using nlohmann::json;

constexpr int kExitViolations = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitStepBudget = 4;
constexpr int kExitIo = 5;

std::string render_term(const lsb::RunWord& w, const lsb::Count& max_render) {
    if (w.total_length() <= max_render) return lsb::render_digits(w, max_render);
    return lsb::render_compressed(w) + "  # compressed, length " + w.total_length().str();
}

struct IterateOpts {
    std::string seed;
    std::uint64_t steps = 10;
    std::string rule = "lsb";
    std::uint64_t max_render = 100000;
    std::string format = "plain";
};

int cmd_iterate(const IterateOpts& opt) {
    lsb::RunWord w = lsb::parse_compressed(opt.seed);
    auto step = [&](const lsb::RunWord& x) {
        if (opt.rule == "ls") return lsb::ls_step(x);
        if (opt.rule == "lsa") return lsb::lsa_step(x);
        return lsb::lsb_step(x);
    };
    std::vector<lsb::RunWord> terms{w};
    for (std::uint64_t i = 0; i < opt.steps; ++i) terms.push_back(step(terms.back()));

    lsb::Count cap(opt.max_render);
    if (opt.format == "json") {
        json j = json::array();
        for (const auto& t : terms) j.push_back(lsb::render_compressed(t));
        std::cout << j.dump() << "\n";
    } else {
        for (const auto& t : terms) std::cout << render_term(t, cap) << "\n";
    }
    return 0;
}

struct OrbitOpts {
    std::string seed;
    std::uint64_t max_steps = 10000;
    bool as_json = false;
    bool with_trajectory = false;
};

int cmd_orbit(const OrbitOpts& opt) {
    lsb::RunWord w = lsb::parse_compressed(opt.seed);
    lsb::Orbit orbit = lsb::detect_orbit(w, opt.max_steps);
    std::optional<std::vector<lsb::RunWord>> prefix;
    if (opt.with_trajectory) prefix = lsb::trajectory(w, orbit.transient);
    if (opt.as_json) {
        std::cout << lsb::orbit_to_json(orbit, prefix).dump() << "\n";
        return 0;
    }
    std::cout << "seed         " << lsb::render_compressed(orbit.seed) << "\n"
              << "mu           " << orbit.transient << "\n"
              << "period       " << orbit.period << "\n"
              << "first_repeat " << orbit.first_repeat << "\n"
              << "cycle       ";
    for (const auto& c : orbit.cycle) std::cout << " " << lsb::render_compressed(c);
    std::cout << "\n";
    if (prefix) {
        std::cout << "trajectory  ";
        for (const auto& t : *prefix) std::cout << " " << lsb::render_compressed(t);
        std::cout << "\n";
    }
    return 0;
}

struct VerifyOpts {
    std::string suite = "all";
    int max_len = 6;
    std::uint64_t bound = 9;
    bool as_json = false;
};

int cmd_verify(const VerifyOpts& opt) {
    std::vector<lsb::LawReport> reports;
    auto want = [&](const std::string& name) { return opt.suite == "all" || opt.suite == name; };
    if (want("fixedpoint")) reports.push_back(lsb::sweep_fixed_point(opt.max_len));
    if (want("lastdigit")) reports.push_back(lsb::sweep_last_digit(opt.max_len));
    if (want("adult")) reports.push_back(lsb::sweep_adult_stabilization(std::min(opt.max_len, 5)));
    if (want("typepreserve")) reports.push_back(lsb::sweep_type_preservation(std::min(opt.max_len, 5)));
    if (want("kid")) reports.push_back(lsb::sweep_kid_closure(opt.max_len));
    if (want("smallkid")) reports.push_back(lsb::sweep_small_kid_loop(opt.max_len, opt.bound));
    if (want("figure1")) reports.push_back(lsb::reproduce_figure1());
    if (want("fossils")) reports.push_back(lsb::reproduce_fossils());
    if (reports.empty()) {
        std::cerr << "unknown suite: " << opt.suite << "\n";
        return kExitParse;
    }

    bool all_passed = true;
    for (const auto& r : reports) {
        all_passed = all_passed && r.passed();
        if (opt.as_json) {
            std::cout << lsb::law_report_to_json(r).dump() << "\n";
        } else {
            std::cout << (r.passed() ? "PASS" : "FAIL") << " " << r.law_id << "  ("
                      << r.seeds_checked << " seeds";
            if (!r.passed()) std::cout << ", " << r.total_violations << " violations";
            std::cout << ")";
            for (const auto& [k, v] : r.observations) std::cout << "  " << k << "=" << v;
            std::cout << "\n";
            for (const auto& v : r.violations)
                std::cout << "  violation: seed " << v.seed << " expected " << v.expected
                          << " got " << v.actual << "\n";
        }
    }
    return all_passed ? 0 : kExitViolations;
}

struct CensusOpts {
    int min_len = 1;
    int max_len = 4;
    std::string alphabet = "0123456789";
    bool no_leading_zeros = false;
    unsigned jobs = std::thread::hardware_concurrency();
    std::uint64_t max_steps = 10000;
    std::string csv_path;
    std::string checkpoint_path;
    std::vector<std::string> merge_paths;
    std::uint64_t shard_index = 0;
    std::uint64_t shard_count = 1;
    std::string format = "plain";
};

void print_census(const lsb::CensusReport& report, const std::string& format) {
    if (format == "jsonl") {
        std::cout << lsb::census_summary_to_json(report).dump() << "\n";
        for (const auto& cls : report.classes)
            std::cout << lsb::cycle_class_to_json(cls).dump() << "\n";
        return;
    }
    if (format == "csv") {
        std::cout << lsb::census_to_csv(report);
        return;
    }
    std::cout << "space             " << report.space_description << "\n"
              << "total seeds       " << report.total_seeds << "\n"
              << "cycle classes     " << report.classes.size() << "\n";
    std::cout << "period histogram ";
    for (const auto& [period, count] : report.period_histogram)
        std::cout << "  " << period << ":" << count;
    std::cout << "\n";
    std::cout << "max mu            " << report.global_max_transient;
    if (report.witness_max_transient)
        std::cout << "  (seed " << lsb::render_compressed(*report.witness_max_transient) << ")";
    std::cout << "\nmax first_repeat  " << report.global_max_first_repeat;
    if (report.witness_max_first_repeat)
        std::cout << "  (seed " << lsb::render_compressed(*report.witness_max_first_repeat)
                  << ")";
    std::cout << "\n";
    for (const auto& cls : report.classes)
        std::cout << "class " << lsb::render_compressed(cls.canonical) << "  period "
                  << cls.period << "  basin " << cls.basin_count << "  max_mu "
                  << cls.max_transient << "  witness "
                  << lsb::render_compressed(cls.witness_max_transient) << "\n";
}

int cmd_census(const CensusOpts& opt) {
    lsb::CensusReport report;
    if (!opt.merge_paths.empty()) {
        bool first = true;
        for (const auto& path : opt.merge_paths) {
            std::ifstream in(path);
            if (!in) {
                std::cerr << "cannot open checkpoint: " << path << "\n";
                return kExitIo;
            }
            json j = json::parse(in);
            lsb::CensusReport part = lsb::census_report_from_json(j);
            report = first ? std::move(part) : lsb::merge_reports(report, part);
            first = false;
        }
    } else {
        lsb::SeedSpace space;
        space.min_len = opt.min_len;
        space.max_len = opt.max_len;
        std::string sorted = opt.alphabet;
        std::sort(sorted.begin(), sorted.end());
        for (char c : sorted) space.alphabet.push_back(lsb::Digit::from_char(c));
        space.leading_zeros = !opt.no_leading_zeros;
        if (opt.shard_count > 1) {
            std::uint64_t total = lsb::seed_space_size(space);
            std::uint64_t lo = total * opt.shard_index / opt.shard_count;
            std::uint64_t hi = total * (opt.shard_index + 1) / opt.shard_count;
            report = lsb::run_census_shard(space, lo, hi, opt.max_steps);
        } else {
            report = lsb::run_census(space, opt.max_steps, std::max(1u, opt.jobs));
        }
    }

    if (!opt.checkpoint_path.empty()) {
        std::ofstream out(opt.checkpoint_path);
        if (!out || !(out << lsb::census_report_to_json(report).dump() << "\n")) {
            std::cerr << "cannot write checkpoint: " << opt.checkpoint_path << "\n";
            return kExitIo;
        }
    }
    if (!opt.csv_path.empty()) {
        std::ofstream out(opt.csv_path);
        if (!out || !(out << lsb::census_to_csv(report))) {
            std::cerr << "cannot write csv: " << opt.csv_path << "\n";
            return kExitIo;
        }
    }
    print_census(report, opt.format);
    return 0;
}

struct SigmaOpts {
    std::uint64_t n = 0;
    int bound = 4;
    std::uint64_t max_steps = 10000;
    bool as_json = false;
};

int cmd_sigma(const SigmaOpts& opt) {
    lsb::SigmaResult result = lsb::find_sigma(opt.n, opt.bound, opt.max_steps);
    if (opt.as_json) {
        json j;
        j["n"] = result.n;
        j["bound"] = result.bound;
        j["sigma_mu"] =
            result.mu_witness ? json(lsb::render_compressed(*result.mu_witness)) : json();
        j["sigma_first_repeat"] = result.first_repeat_witness
                                      ? json(lsb::render_compressed(*result.first_repeat_witness))
                                      : json();
        std::cout << j.dump() << "\n";
        return 0;
    }
    if (result.mu_witness)
        std::cout << "sigma_" << opt.n << " = " << lsb::render_compressed(*result.mu_witness)
                  << "  (mu convention)\n";
    else
        std::cout << "sigma_" << opt.n << ": exhausted length bound " << opt.bound
                  << " (mu convention)\n";
    if (result.first_repeat_witness)
        std::cout << "sigma_" << opt.n << " = "
                  << lsb::render_compressed(*result.first_repeat_witness)
                  << "  (first-repeat convention)\n";
    else
        std::cout << "sigma_" << opt.n << ": exhausted length bound " << opt.bound
                  << " (first-repeat convention)\n";
    return 0;
}

int cmd_conjecture(bool as_json) {
    lsb::ConjectureReport report = lsb::probe_conjecture();
    if (as_json) {
        std::cout << lsb::conjecture_report_to_json(report).dump() << "\n";
        return 0;
    }
    std::cout << "seed y = 2^33333333333\n"
              << "mu " << report.mu << "  period " << report.period << "  first_repeat "
              << report.first_repeat << "\n"
              << "term  match  engine / paper\n";
    for (std::size_t i = 0; i < report.comparison.size(); ++i) {
        const auto& t = report.comparison[i];
        std::cout << i << "  " << (t.match ? "ok  " : "DIFF") << "  " << t.engine << "  /  "
                  << (t.paper.empty() ? "-" : t.paper) << "\n";
    }
    std::cout << (report.chain_matches_paper ? "chain matches the published table\n"
                                             : "chain DIVERGES from the published table\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"look-and-say-the-biggest sequence toolkit"};
    app.require_subcommand(1);

    IterateOpts it;
    auto* iterate = app.add_subcommand("iterate", "print the trajectory of a seed");
    iterate->add_option("seed", it.seed, "seed in compressed notation")->required();
    iterate->add_option("-n,--steps", it.steps, "number of steps");
    iterate->add_option("--rule", it.rule, "rewriting rule")
        ->check(CLI::IsMember({"lsb", "ls", "lsa"}));
    iterate->add_option("--max-render", it.max_render, "longest word printed as plain digits");
    iterate->add_option("--format", it.format, "plain|json")
        ->check(CLI::IsMember({"plain", "json"}));

    OrbitOpts ob;
    auto* orbit = app.add_subcommand("orbit", "transient, period and cycle of a seed");
    orbit->add_option("seed", ob.seed)->required();
    orbit->add_option("--max-steps", ob.max_steps);
    orbit->add_flag("--json", ob.as_json, "emit a JSON record");
    orbit->add_flag("--trajectory", ob.with_trajectory, "include the transient prefix");

    VerifyOpts vf;
    auto* verify = app.add_subcommand("verify", "machine-check the cycle laws");
    verify->add_option("--suite", vf.suite,
                       "fixedpoint|adult|kid|lastdigit|smallkid|typepreserve|figure1|fossils|all");
    verify->add_option("--max-len", vf.max_len, "exhaustive sweep length bound");
    verify->add_option("--bound", vf.bound, "small-kid loop bound");
    verify->add_flag("--json", vf.as_json);

    CensusOpts cs;
    auto* census = app.add_subcommand("census", "classify limit cycles over a seed space");
    census->add_option("--min-len", cs.min_len);
    census->add_option("--max-len", cs.max_len);
    census->add_option("--alphabet", cs.alphabet);
    census->add_flag("--no-leading-zeros", cs.no_leading_zeros);
    census->add_option("--jobs", cs.jobs);
    census->add_option("--max-steps", cs.max_steps);
    census->add_option("--csv", cs.csv_path, "write the class table as CSV");
    census->add_option("--checkpoint", cs.checkpoint_path, "write the full report as JSON");
    census->add_option("--merge", cs.merge_paths, "merge checkpoint files instead of sweeping");
    census->add_option("--shard-index", cs.shard_index);
    census->add_option("--shard-count", cs.shard_count);
    census->add_option("--format", cs.format, "plain|jsonl|csv")
        ->check(CLI::IsMember({"plain", "jsonl", "csv"}));

    SigmaOpts sg;
    auto* sigma = app.add_subcommand("sigma", "smallest seed reaching a cycle in n iterations");
    sigma->add_option("--n", sg.n)->required();
    sigma->add_option("--bound", sg.bound, "seed length bound");
    sigma->add_option("--max-steps", sg.max_steps);
    sigma->add_flag("--json", sg.as_json);

    bool conj_json = false;
    auto* conjecture =
        app.add_subcommand("conjecture", "orbit of the giant seed 2^33333333333");
    conjecture->add_flag("--json", conj_json);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*iterate) return cmd_iterate(it);
        if (*orbit) return cmd_orbit(ob);
        if (*verify) return cmd_verify(vf);
        if (*census) return cmd_census(cs);
        if (*sigma) return cmd_sigma(sg);
        if (*conjecture) return cmd_conjecture(conj_json);
    } catch (const lsb::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const lsb::RunCountOverflow& e) {
        std::cerr << "rule precondition: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const lsb::PreconditionError& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const lsb::StepBudgetExceeded& e) {
        std::cerr << "step budget: " << e.what() << "\n";
        return kExitStepBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return 0;
}
