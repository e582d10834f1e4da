#include "lsb/census.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

namespace lsb {

namespace {

void validate(const SeedSpace& space) {
    if (space.min_len < 1 || space.min_len > space.max_len)
        throw std::invalid_argument("seed space: invalid length range");
    if (space.alphabet.empty())
        throw std::invalid_argument("seed space: empty alphabet");
}

// Words of one given length.
std::uint64_t count_for_length(const SeedSpace& space, int len) {
    std::uint64_t base = space.alphabet.size();
    std::uint64_t first = base;
    if (!space.leading_zeros && space.alphabet.front().value() == 0) first = base - 1;
    unsigned __int128 total = first;
    for (int i = 1; i < len; ++i) {
        total *= base;
        if (total > std::numeric_limits<std::uint64_t>::max())
            throw std::invalid_argument("seed space too large to enumerate");
    }
    return first == 0 ? 0 : static_cast<std::uint64_t>(total);
}

struct ClassAccum {
    std::uint64_t period = 0;
    std::vector<RunWord> members;
    std::uint64_t basin_count = 0;
    std::uint64_t max_transient = 0;
    std::optional<RunWord> witness;
};

void rebuild_histogram(CensusReport& report) {
    report.period_histogram.clear();
    for (const auto& cls : report.classes)
        report.period_histogram[cls.period] += cls.basin_count;
}

// Prefer the word_compare-smaller witness on ties.
void take_max_witness(std::uint64_t value, const RunWord& seed, std::uint64_t& best,
                      std::optional<RunWord>& witness) {
    if (!witness || value > best) {
        best = value;
        witness = seed;
    } else if (value == best && word_compare(seed, *witness) < 0) {
        witness = seed;
    }
}

}  // namespace

SeedSpace SeedSpace::full(int min_len, int max_len, bool leading_zeros) {
    SeedSpace s;
    s.min_len = min_len;
    s.max_len = max_len;
    for (int d = 0; d <= 9; ++d) s.alphabet.push_back(Digit(d));
    s.leading_zeros = leading_zeros;
    return s;
}

std::string SeedSpace::describe() const {
    std::string a;
    for (const auto& d : alphabet) a += d.to_char();
    return "len " + std::to_string(min_len) + ".." + std::to_string(max_len) + " alphabet " +
           a + (leading_zeros ? "" : " no-leading-zeros");
}

std::uint64_t seed_space_size(const SeedSpace& space) {
    validate(space);
    std::uint64_t total = 0;
    for (int len = space.min_len; len <= space.max_len; ++len)
        total += count_for_length(space, len);
    return total;
}

namespace {

std::string word_at(const SeedSpace& space, int len, std::uint64_t offset) {
    std::uint64_t base = space.alphabet.size();
    std::string out(static_cast<std::size_t>(len), '0');
    bool skip_zero_first = !space.leading_zeros && space.alphabet.front().value() == 0;
    for (int pos = len - 1; pos >= 1; --pos) {
        out[static_cast<std::size_t>(pos)] = space.alphabet[offset % base].to_char();
        offset /= base;
    }
    std::uint64_t first = skip_zero_first ? offset + 1 : offset;
    out[0] = space.alphabet[first].to_char();
    return out;
}

}  // namespace

RunWord seed_at(const SeedSpace& space, std::uint64_t index) {
    validate(space);
    for (int len = space.min_len; len <= space.max_len; ++len) {
        std::uint64_t n = count_for_length(space, len);
        if (index < n) return parse_digits(word_at(space, len, index));
        index -= n;
    }
    throw std::out_of_range("seed index out of range");
}

void for_each_seed(const SeedSpace& space, std::uint64_t begin, std::uint64_t end,
                   const std::function<void(const RunWord&)>& fn) {
    validate(space);
    std::uint64_t skipped = 0;
    for (int len = space.min_len; len <= space.max_len && begin < end; ++len) {
        std::uint64_t n = count_for_length(space, len);
        if (begin >= skipped + n) {
            skipped += n;
            continue;
        }
        std::uint64_t lo = begin - skipped;
        std::uint64_t hi = std::min(end - skipped, n);
        // Odometer over the digit string; cheaper than re-decoding per index.
        std::string word = word_at(space, len, lo);
        std::uint64_t base = space.alphabet.size();
        for (std::uint64_t i = lo; i < hi; ++i) {
            fn(parse_digits(word));
            if (i + 1 == hi) break;
            int pos = len - 1;
            while (true) {
                std::uint64_t v = 0;
                while (space.alphabet[v].to_char() != word[static_cast<std::size_t>(pos)]) ++v;
                if (v + 1 < base) {
                    word[static_cast<std::size_t>(pos)] = space.alphabet[v + 1].to_char();
                    break;
                }
                word[static_cast<std::size_t>(pos)] = space.alphabet[0].to_char();
                --pos;
            }
        }
        skipped += n;
        begin = skipped;
    }
}

void for_each_seed(const SeedSpace& space, const std::function<void(const RunWord&)>& fn) {
    for_each_seed(space, 0, seed_space_size(space), fn);
}

CensusReport run_census_shard(const SeedSpace& space, std::uint64_t begin, std::uint64_t end,
                              std::uint64_t max_steps) {
    CensusReport report;
    report.space_description = space.describe();
    report.shard_begin = begin;
    report.shard_end = end;

    // Keyed by the rendered canonical word: hashed lookups are much cheaper
    // than ordered big-int comparisons at census scale. Sorted afterwards.
    std::unordered_map<std::string, ClassAccum> classes;
    for_each_seed(space, begin, end, [&](const RunWord& seed) {
        Orbit orbit = detect_orbit(seed, max_steps);
        auto& acc = classes[render_compressed(orbit.cycle.front())];
        if (acc.basin_count == 0) {
            acc.period = orbit.period;
            acc.members = orbit.cycle;
        }
        ++acc.basin_count;
        std::optional<RunWord> w = acc.witness;
        std::uint64_t best = acc.max_transient;
        take_max_witness(orbit.transient, seed, best, w);
        acc.max_transient = best;
        acc.witness = std::move(w);
        take_max_witness(orbit.transient, seed, report.global_max_transient,
                         report.witness_max_transient);
        take_max_witness(orbit.first_repeat, seed, report.global_max_first_repeat,
                         report.witness_max_first_repeat);
        ++report.total_seeds;
    });

    report.classes.reserve(classes.size());
    for (auto& [key, acc] : classes)
        report.classes.push_back(CycleClass{acc.members.front(), acc.period,
                                            std::move(acc.members), acc.basin_count,
                                            acc.max_transient, std::move(*acc.witness)});
    std::sort(report.classes.begin(), report.classes.end(),
              [](const CycleClass& x, const CycleClass& y) {
                  return word_compare(x.canonical, y.canonical) < 0;
              });
    rebuild_histogram(report);
    return report;
}

CensusReport run_census(const SeedSpace& space, std::uint64_t max_steps, unsigned jobs) {
    std::uint64_t total = seed_space_size(space);
    if (jobs <= 1 || total < 2 * jobs) return run_census_shard(space, 0, total, max_steps);

    std::vector<CensusReport> partials(jobs);
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) {
        std::uint64_t lo = total * t / jobs;
        std::uint64_t hi = total * (t + 1) / jobs;
        threads.emplace_back([&, t, lo, hi] {
            try {
                partials[t] = run_census_shard(space, lo, hi, max_steps);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : threads) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    CensusReport merged = std::move(partials[0]);
    for (unsigned t = 1; t < jobs; ++t) merged = merge_reports(merged, partials[t]);
    return merged;
}

CensusReport merge_reports(const CensusReport& a, const CensusReport& b) {
    if (a.total_seeds == 0) return b;
    if (b.total_seeds == 0) return a;
    if (a.space_description == b.space_description && a.shard_begin < b.shard_end &&
        b.shard_begin < a.shard_end)
        throw OverlappingSpaceError();

    CensusReport out;
    out.space_description = a.space_description;
    out.total_seeds = a.total_seeds + b.total_seeds;
    out.shard_begin = std::min(a.shard_begin, b.shard_begin);
    out.shard_end = std::max(a.shard_end, b.shard_end);

    std::map<RunWord, CycleClass, WordLess> merged;
    for (const auto* src : {&a, &b}) {
        for (const auto& cls : src->classes) {
            auto it = merged.find(cls.canonical);
            if (it == merged.end()) {
                merged.emplace(cls.canonical, cls);
                continue;
            }
            CycleClass& dst = it->second;
            dst.basin_count += cls.basin_count;
            if (cls.max_transient > dst.max_transient ||
                (cls.max_transient == dst.max_transient &&
                 word_compare(cls.witness_max_transient, dst.witness_max_transient) < 0)) {
                dst.max_transient = cls.max_transient;
                dst.witness_max_transient = cls.witness_max_transient;
            }
        }
    }
    for (auto& [canonical, cls] : merged) out.classes.push_back(std::move(cls));

    for (const auto* src : {&a, &b}) {
        if (src->witness_max_transient)
            take_max_witness(src->global_max_transient, *src->witness_max_transient,
                             out.global_max_transient, out.witness_max_transient);
        if (src->witness_max_first_repeat)
            take_max_witness(src->global_max_first_repeat, *src->witness_max_first_repeat,
                             out.global_max_first_repeat, out.witness_max_first_repeat);
    }
    rebuild_histogram(out);
    return out;
}

SigmaResult find_sigma(std::uint64_t n, int bound, std::uint64_t max_steps) {
    SeedSpace space = SeedSpace::full(1, bound, /*leading_zeros=*/false);
    SigmaResult result{n, bound, std::nullopt, std::nullopt};
    std::uint64_t total = seed_space_size(space);
    for (std::uint64_t i = 0; i < total; ++i) {
        RunWord seed = seed_at(space, i);
        Orbit orbit = detect_orbit(seed, max_steps);
        if (!result.mu_witness && orbit.transient == n) result.mu_witness = seed;
        if (!result.first_repeat_witness && orbit.first_repeat == n)
            result.first_repeat_witness = seed;
        if (result.mu_witness && result.first_repeat_witness) break;
    }
    return result;
}

namespace {

// Report terms as plain digits when short enough to read, compressed otherwise.
std::string render_term(const RunWord& w) {
    if (w.total_length() <= 64) return render_digits(w, Count(64));
    return render_compressed(w);
}

// The convergence chain printed with Conjecture 1 in the source paper.
const std::vector<std::string>& paper_chain() {
    static const std::vector<std::string> chain = {
        "2^33333333333", "333333333332",  "11312",          "21331122",       "2211332122",
        "222133221122",  "321133222122",  "33222133321122", "33321133222122",
    };
    return chain;
}

}  // namespace

ConjectureReport probe_conjecture(std::uint64_t max_steps) {
    RunWord y(std::vector<Run>{{Digit(2), Count("33333333333")}});
    Orbit orbit = detect_orbit(y, max_steps);
    std::vector<RunWord> chain = trajectory(y, orbit.first_repeat);

    ConjectureReport report;
    report.mu = orbit.transient;
    report.period = orbit.period;
    report.first_repeat = orbit.first_repeat;
    for (const auto& w : chain) report.chain.push_back(render_term(w));

    const auto& paper = paper_chain();
    report.chain_matches_paper = true;
    std::size_t terms = std::max(chain.size(), paper.size());
    for (std::size_t i = 0; i < terms; ++i) {
        ConjectureTerm term;
        term.engine = i < chain.size() ? report.chain[i] : "";
        term.paper = i < paper.size() ? paper[i] : "";
        term.match = !term.engine.empty() && !term.paper.empty() &&
                     chain[i] == parse_compressed(paper[i]);
        if (i < paper.size() && !term.match) report.chain_matches_paper = false;
        report.comparison.push_back(std::move(term));
    }
    return report;
}

nlohmann::json census_summary_to_json(const CensusReport& report) {
    nlohmann::json j;
    j["space"] = report.space_description;
    j["total_seeds"] = report.total_seeds;
    j["class_count"] = report.classes.size();
    auto& hist = j["period_histogram"] = nlohmann::json::object();
    for (const auto& [period, count] : report.period_histogram)
        hist[std::to_string(period)] = count;
    j["global_max_transient"] = report.global_max_transient;
    if (report.witness_max_transient)
        j["witness_max_transient"] = render_compressed(*report.witness_max_transient);
    j["global_max_first_repeat"] = report.global_max_first_repeat;
    if (report.witness_max_first_repeat)
        j["witness_max_first_repeat"] = render_compressed(*report.witness_max_first_repeat);
    j["shard_begin"] = report.shard_begin;
    j["shard_end"] = report.shard_end;
    return j;
}

nlohmann::json cycle_class_to_json(const CycleClass& cls) {
    nlohmann::json j;
    j["canonical"] = render_compressed(cls.canonical);
    j["period"] = cls.period;
    auto& members = j["members"] = nlohmann::json::array();
    for (const auto& m : cls.members) members.push_back(render_compressed(m));
    j["basin_count"] = cls.basin_count;
    j["max_transient"] = cls.max_transient;
    j["witness_max_transient"] = render_compressed(cls.witness_max_transient);
    return j;
}

nlohmann::json census_report_to_json(const CensusReport& report) {
    nlohmann::json j = census_summary_to_json(report);
    auto& classes = j["classes"] = nlohmann::json::array();
    for (const auto& cls : report.classes) classes.push_back(cycle_class_to_json(cls));
    return j;
}

CensusReport census_report_from_json(const nlohmann::json& j) {
    CensusReport report;
    report.space_description = j.at("space").get<std::string>();
    report.total_seeds = j.at("total_seeds").get<std::uint64_t>();
    report.global_max_transient = j.at("global_max_transient").get<std::uint64_t>();
    if (j.contains("witness_max_transient"))
        report.witness_max_transient =
            parse_compressed(j["witness_max_transient"].get<std::string>());
    report.global_max_first_repeat = j.at("global_max_first_repeat").get<std::uint64_t>();
    if (j.contains("witness_max_first_repeat"))
        report.witness_max_first_repeat =
            parse_compressed(j["witness_max_first_repeat"].get<std::string>());
    report.shard_begin = j.at("shard_begin").get<std::uint64_t>();
    report.shard_end = j.at("shard_end").get<std::uint64_t>();
    for (const auto& c : j.at("classes")) {
        std::vector<RunWord> members;
        for (const auto& m : c.at("members"))
            members.push_back(parse_compressed(m.get<std::string>()));
        report.classes.push_back(CycleClass{
            parse_compressed(c.at("canonical").get<std::string>()),
            c.at("period").get<std::uint64_t>(), std::move(members),
            c.at("basin_count").get<std::uint64_t>(),
            c.at("max_transient").get<std::uint64_t>(),
            parse_compressed(c.at("witness_max_transient").get<std::string>())});
    }
    std::sort(report.classes.begin(), report.classes.end(),
              [](const CycleClass& x, const CycleClass& y) {
                  return word_compare(x.canonical, y.canonical) < 0;
              });
    CensusReport rebuilt = std::move(report);
    rebuild_histogram(rebuilt);
    return rebuilt;
}

std::string census_to_csv(const CensusReport& report) {
    std::string out = "canonical,period,basin_count,max_transient,witness\n";
    for (const auto& cls : report.classes) {
        out += render_compressed(cls.canonical);
        out += ',' + std::to_string(cls.period);
        out += ',' + std::to_string(cls.basin_count);
        out += ',' + std::to_string(cls.max_transient);
        out += ',' + render_compressed(cls.witness_max_transient);
        out += '\n';
    }
    return out;
}

nlohmann::json conjecture_report_to_json(const ConjectureReport& report) {
    nlohmann::json j;
    j["seed"] = "2^33333333333";
    j["mu"] = report.mu;
    j["period"] = report.period;
    j["first_repeat"] = report.first_repeat;
    j["chain"] = report.chain;
    auto& cmp = j["comparison"] = nlohmann::json::array();
    for (const auto& term : report.comparison)
        cmp.push_back({{"engine", term.engine}, {"paper", term.paper}, {"match", term.match}});
    j["chain_matches_paper"] = report.chain_matches_paper;
    return j;
}

}  // namespace lsb
