#include "pfactor/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <mutex>
#include <thread>

#include "pfactor/families.hpp"
#include "pfactor/graph_io.hpp"
#include "pfactor/parity_factor.hpp"
#include "pfactor/random.hpp"
#include "pfactor/spectral.hpp"

namespace pfactor {

std::uint64_t checked_binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > std::numeric_limits<std::uint64_t>::max() / 2) throw CapacityError("binomial coefficient overflows");
    }
    return static_cast<std::uint64_t>(acc);
}

CosparseEnumerator::CosparseEnumerator(std::size_t n, std::size_t k_max) : n_(n), k_max_(k_max) {
    check_capacity(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) slots_.emplace_back(u, v);
    if (k_max > slots_.size()) throw std::invalid_argument("k_max exceeds the number of vertex pairs");
    for (std::size_t j = 0; j <= k_max; ++j) {
        block_start_.push_back(total_);
        const std::uint64_t block = checked_binomial(slots_.size(), j);
        if (total_ > std::numeric_limits<std::uint64_t>::max() / 2 - block)
            throw CapacityError("co-sparse enumeration count overflows");
        total_ += block;
    }
    block_start_.push_back(total_);
}

namespace {

// Lexicographic combination of size k at index `rank` among C(pool, k).
std::vector<std::size_t> unrank_combination(std::size_t pool, std::size_t k, std::uint64_t rank) {
    std::vector<std::size_t> combo;
    combo.reserve(k);
    std::size_t next = 0;
    for (std::size_t i = 0; i < k; ++i) {
        while (true) {
            const std::uint64_t with = checked_binomial(pool - next - 1, k - i - 1);
            if (rank < with) break;
            rank -= with;
            ++next;
        }
        combo.push_back(next++);
    }
    return combo;
}

// Advances to the lexicographic successor; false after the last combination.
bool next_combination(std::vector<std::size_t>& combo, std::size_t pool) {
    const std::size_t k = combo.size();
    std::size_t i = k;
    while (i > 0 && combo[i - 1] == pool - k + i - 1) --i;
    if (i == 0) return false;
    ++combo[i - 1];
    for (std::size_t j = i; j < k; ++j) combo[j] = combo[j - 1] + 1;
    return true;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

void CosparseEnumerator::for_each(std::uint64_t begin, std::uint64_t end,
                                  const std::function<void(std::uint64_t, const Graph&)>& visit) const {
    end = std::min(end, total_);
    if (begin >= end) return;
    const Graph full = complete(n_);
    std::size_t block = static_cast<std::size_t>(
        std::upper_bound(block_start_.begin(), block_start_.end(), begin) - block_start_.begin() - 1);
    std::vector<std::size_t> combo = unrank_combination(slots_.size(), block, begin - block_start_[block]);
    for (std::uint64_t rank = begin; rank < end; ++rank) {
        Graph::Builder builder(full);
        for (std::size_t idx : combo) builder.remove_edge(slots_[idx].u, slots_[idx].v);
        visit(rank, builder.build());
        if (!next_combination(combo, slots_.size())) {
            ++block;
            combo.resize(block);
            for (std::size_t i = 0; i < block; ++i) combo[i] = i;
        }
    }
}

Graph CosparseEnumerator::at(std::uint64_t rank) const {
    Graph out;
    for_each(rank, rank + 1, [&out](std::uint64_t, const Graph& g) { out = g; });
    if (rank >= total_) throw std::out_of_range("rank beyond the enumeration");
    return out;
}

std::string_view to_string(ScanMode m) { return m == ScanMode::Exhaustive ? "exhaustive" : "sample"; }

ScanMode parse_scan_mode(std::string_view text) {
    if (text == "exhaustive") return ScanMode::Exhaustive;
    if (text == "sample") return ScanMode::Sample;
    throw std::invalid_argument("unknown scan mode '" + std::string(text) + "'");
}

namespace {

struct ChunkResult {
    ScanCounts counts;
    std::vector<std::string> violations;
    std::uint64_t float_decisions = 0;
    std::uint64_t exact_decisions = 0;
};

class TheoremChecker {
public:
    TheoremChecker(const FactorSpec& spec, std::size_t n)
        : spec_(spec), reference_(h_extremal(n, static_cast<std::size_t>(spec.a))) {}

    const RadiusReference& reference() const { return reference_; }

    void check(const Graph& g, ChunkResult& out) const {
        ++out.counts.scanned;
        const RadiusComparison cmp = reference_.compare(g);
        (cmp.method == DecisionMethod::Float ? out.float_decisions : out.exact_decisions)++;
        if (cmp.order == Ordering::Less) {
            ++out.counts.below_threshold;
            return;
        }
        ++out.counts.spectral_candidates;
        if (recognize_h_extremal(g, static_cast<std::size_t>(spec_.a))) {
            ++out.counts.recognized_extremal;
            return;
        }
        if (decide_matching(g, spec_).exists) {
            ++out.counts.factor_yes;
        } else {
            ++out.counts.violations;
            out.violations.push_back(write_graph6(g));
        }
    }

private:
    FactorSpec spec_;
    RadiusReference reference_;
};

// Runs `work(chunk_index, result)` for every chunk on a pool of `jobs`
// threads and concatenates the results in chunk order.
template <class Work>
ChunkResult run_chunks(std::uint64_t chunk_count, std::size_t jobs, Work&& work) {
    std::vector<ChunkResult> results(chunk_count);
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        while (true) {
            const std::uint64_t chunk = next.fetch_add(1);
            if (chunk >= chunk_count) return;
            try {
                work(chunk, results[chunk]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = chunk_count;
            }
        }
    };
    jobs = std::max<std::size_t>(1, jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    ChunkResult merged;
    for (ChunkResult& r : results) {
        merged.counts.scanned += r.counts.scanned;
        merged.counts.below_threshold += r.counts.below_threshold;
        merged.counts.spectral_candidates += r.counts.spectral_candidates;
        merged.counts.recognized_extremal += r.counts.recognized_extremal;
        merged.counts.factor_yes += r.counts.factor_yes;
        merged.counts.violations += r.counts.violations;
        merged.float_decisions += r.float_decisions;
        merged.exact_decisions += r.exact_decisions;
        for (std::string& v : r.violations) merged.violations.push_back(std::move(v));
    }
    return merged;
}

// Item 0 is H_{n,a}; then its one- and two-pair toggles, then random graphs.
class SampleStream {
public:
    SampleStream(const Graph& extremal, std::uint64_t seed, std::uint64_t samples)
        : extremal_(extremal), n_(extremal.order()), seed_(seed), samples_(samples) {
        for (std::size_t u = 0; u < n_; ++u)
            for (std::size_t v = u + 1; v < n_; ++v) slots_.emplace_back(u, v);
        const std::uint64_t p = slots_.size();
        toggles_ = 1 + p + p * (p - 1) / 2;
    }

    std::uint64_t size() const { return toggles_ + samples_; }

    Graph at(std::uint64_t index) const {
        if (index < toggles_) return toggled(index);
        return random_cosparse(index - toggles_);
    }

private:
    Graph toggled(std::uint64_t index) const {
        if (index == 0) return extremal_;
        --index;
        Graph::Builder b(extremal_);
        auto flip = [&b](const Edge& e) {
            if (b.has_edge(e.u, e.v))
                b.remove_edge(e.u, e.v);
            else
                b.add_edge(e.u, e.v);
        };
        const std::uint64_t p = slots_.size();
        if (index < p) {
            flip(slots_[index]);
            return b.build();
        }
        const std::vector<std::size_t> pair = unrank_combination(p, 2, index - p);
        flip(slots_[pair[0]]);
        flip(slots_[pair[1]]);
        return b.build();
    }

    Graph random_cosparse(std::uint64_t i) const {
        SplitMix64 rng(derive_seed(seed_, i));
        const std::size_t missing = n_ >= 2 ? static_cast<std::size_t>(rng.below(n_ - 1)) : 0;
        std::vector<Edge> pool = slots_;
        Graph::Builder b(complete(n_));
        for (std::size_t k = 0; k < missing && k < pool.size(); ++k) {
            const std::size_t j = k + static_cast<std::size_t>(rng.below(pool.size() - k));
            std::swap(pool[k], pool[j]);
            b.remove_edge(pool[k].u, pool[k].v);
        }
        return b.build();
    }

    const Graph& extremal_;
    std::size_t n_;
    std::uint64_t seed_;
    std::uint64_t samples_;
    std::vector<Edge> slots_;
    std::uint64_t toggles_ = 0;
};

}  // namespace

ScanReport verify_main_theorem(int a, int b, std::size_t n, const ScanOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    const FactorSpec spec = FactorSpec::make(a, b);
    if (spec.parity_obstructed(n)) throw std::invalid_argument("n * a must be even");
    if (n < static_cast<std::size_t>(a) + 1) throw std::invalid_argument("n must exceed a");
    check_capacity(n);
    if (options.chunk_size == 0) throw std::invalid_argument("chunk size must be positive");

    ScanReport report;
    report.a = a;
    report.b = b;
    report.n = n;
    report.requested_mode = options.mode;
    report.mode = options.mode;
    report.seed = options.seed;
    report.samples = options.samples;

    const long long bound = theorem_n_bound(a, b);
    if (static_cast<long long>(n) < bound)
        report.notes.push_back("n = " + std::to_string(n) + " is below the order bound " + std::to_string(bound) +
                               "; the statement is not claimed there");

    std::uint64_t exhaustive_total = 0;
    bool exhaustive_feasible = n < 18;
    if (exhaustive_feasible && report.mode == ScanMode::Exhaustive) {
        try {
            exhaustive_total = CosparseEnumerator(n, n >= 2 ? n - 2 : 0).total();
            exhaustive_feasible = exhaustive_total <= options.exhaustive_limit;
        } catch (const CapacityError&) {
            exhaustive_feasible = false;
        }
    }
    if (report.mode == ScanMode::Exhaustive && !exhaustive_feasible) {
        report.mode = ScanMode::Sample;
        report.notes.push_back("exhaustive scan infeasible at n = " + std::to_string(n) +
                               "; fell back to sample mode");
    }

    const TheoremChecker checker(spec, n);
    report.threshold_lo = checker.reference().enclosure().lo;
    report.threshold_hi = checker.reference().enclosure().hi;

    ChunkResult merged;
    if (report.mode == ScanMode::Exhaustive) {
        const CosparseEnumerator enumerator(n, n >= 2 ? n - 2 : 0);
        const std::uint64_t total = enumerator.total();
        const std::uint64_t chunks = (total + options.chunk_size - 1) / options.chunk_size;
        merged = run_chunks(chunks, options.jobs, [&](std::uint64_t chunk, ChunkResult& out) {
            const std::uint64_t begin = chunk * options.chunk_size;
            enumerator.for_each(begin, begin + options.chunk_size,
                                [&](std::uint64_t, const Graph& g) { checker.check(g, out); });
        });
    } else {
        const SampleStream stream(checker.reference().graph(), options.seed, options.samples);
        const std::uint64_t total = stream.size();
        const std::uint64_t chunks = (total + options.chunk_size - 1) / options.chunk_size;
        merged = run_chunks(chunks, options.jobs, [&](std::uint64_t chunk, ChunkResult& out) {
            const std::uint64_t begin = chunk * options.chunk_size;
            const std::uint64_t end = std::min(total, begin + options.chunk_size);
            for (std::uint64_t i = begin; i < end; ++i) checker.check(stream.at(i), out);
        });
    }
    report.counts = merged.counts;
    report.violations = std::move(merged.violations);
    report.float_decisions = merged.float_decisions;
    report.exact_decisions = merged.exact_decisions;
    report.runtime_ms = elapsed_ms(start);
    return report;
}

ordered_json ScanReport::to_json(bool include_runtime) const {
    ordered_json j;
    j["kind"] = "theorem";
    j["params"] = {{"a", a},
                   {"b", b},
                   {"n", n},
                   {"mode", std::string(to_string(mode))},
                   {"requested_mode", std::string(to_string(requested_mode))},
                   {"seed", seed},
                   {"samples", samples}};
    j["counts"] = {{"scanned", counts.scanned},
                   {"below_threshold", counts.below_threshold},
                   {"spectral_candidates", counts.spectral_candidates},
                   {"recognized_extremal", counts.recognized_extremal},
                   {"factor_yes", counts.factor_yes},
                   {"violations", counts.violations}};
    j["violations"] = violations;
    j["threshold"] = {{"lo", threshold_lo}, {"hi", threshold_hi}};
    j["decisions"] = {{"float", float_decisions}, {"exact", exact_decisions}};
    j["notes"] = notes;
    if (include_runtime) j["runtime_ms"] = static_cast<std::uint64_t>(std::llround(runtime_ms));
    return j;
}

std::string ScanReport::to_csv() const {
    std::ostringstream out;
    out << "a,b,n,mode,seed,samples,scanned,below_threshold,spectral_candidates,recognized_extremal,factor_yes,"
           "violations,float_decisions,exact_decisions,runtime_ms\n";
    out << a << ',' << b << ',' << n << ',' << to_string(mode) << ',' << seed << ',' << samples << ','
        << counts.scanned << ',' << counts.below_threshold << ',' << counts.spectral_candidates << ','
        << counts.recognized_extremal << ',' << counts.factor_yes << ',' << counts.violations << ','
        << float_decisions << ',' << exact_decisions << ',' << std::llround(runtime_ms) << '\n';
    return out.str();
}

std::size_t LemmaReport::failures() const {
    return static_cast<std::size_t>(std::count_if(points.begin(), points.end(), [](const LemmaPoint& p) { return !p.pass; }));
}

double LemmaReport::min_slack() const {
    double best = std::numeric_limits<double>::infinity();
    for (const LemmaPoint& p : points)
        if (!std::isnan(p.slack)) best = std::min(best, p.slack);
    return best;
}

double LemmaReport::max_slack() const {
    double best = -std::numeric_limits<double>::infinity();
    for (const LemmaPoint& p : points)
        if (!std::isnan(p.slack)) best = std::max(best, p.slack);
    return best;
}

ordered_json LemmaReport::to_json(bool include_runtime) const {
    ordered_json j;
    j["kind"] = "lemma";
    j["lemma"] = lemma;
    j["params"] = params;
    const std::size_t failed = failures();
    j["counts"] = {{"points", points.size()}, {"passed", points.size() - failed}, {"failed", failed}};
    ordered_json failing = ordered_json::array();
    for (const LemmaPoint& p : points)
        if (!p.pass) failing.push_back(p.params);
    j["violations"] = failing;
    ordered_json slack = ordered_json::object();
    if (std::isfinite(min_slack())) {
        slack["min"] = min_slack();
        slack["max"] = max_slack();
    }
    j["slack"] = slack;
    j["decisions"] = {{"float", float_decisions}, {"exact", exact_decisions}};
    ordered_json rows = ordered_json::array();
    for (const LemmaPoint& p : points) {
        ordered_json row = {{"params", p.params}, {"pass", p.pass}};
        if (!std::isnan(p.slack)) row["slack"] = p.slack;
        if (!p.detail.empty()) row["detail"] = p.detail;
        rows.push_back(std::move(row));
    }
    j["points"] = rows;
    if (include_runtime) j["runtime_ms"] = static_cast<std::uint64_t>(std::llround(runtime_ms));
    return j;
}

std::string LemmaReport::to_csv() const {
    std::ostringstream out;
    out << "lemma,params,pass,slack,detail\n";
    for (const LemmaPoint& p : points) {
        std::string params = p.params.dump();
        std::string quoted;
        for (char c : params) {
            if (c == '"') quoted += '"';
            quoted += c;
        }
        out << lemma << ",\"" << quoted << "\"," << (p.pass ? "true" : "false") << ',';
        if (!std::isnan(p.slack)) out << p.slack;
        out << ',' << p.detail << '\n';
    }
    return out.str();
}

LemmaReport verify_lemma_no_factor(int a, int b, const std::vector<std::size_t>& n_list) {
    const auto start = std::chrono::steady_clock::now();
    const FactorSpec spec = FactorSpec::make(a, b);
    LemmaReport report;
    report.lemma = "nofactor";
    report.params = {{"a", a}, {"b", b}, {"n", n_list}};
    for (std::size_t n : n_list) {
        if (spec.parity_obstructed(n)) throw std::invalid_argument("n * a must be even");
        const Graph h = h_extremal(n, static_cast<std::size_t>(a));
        LemmaPoint point;
        point.params = {{"a", a}, {"b", b}, {"n", n}};
        point.slack = std::numeric_limits<double>::quiet_NaN();

        const bool matching_no = !decide_matching(h, spec).exists;
        bool lovasz_no = true;
        std::string lovasz_note = "criterion skipped (n above cap)";
        if (n <= kDefaultLovaszCap) {
            lovasz_no = !decide_lovasz(h, spec).exists;
            lovasz_note = lovasz_no ? "criterion no" : "criterion yes";
        }
        const DeficiencyCertificate cert = make_certificate(h, {}, VertexSet{h_extremal_pendant(a)}, spec);
        point.pass = matching_no && lovasz_no && cert.eta == -2 && cert.q == 1;
        point.detail = std::string(matching_no ? "matching no" : "matching yes") + "; " + lovasz_note +
                       "; eta=" + std::to_string(cert.eta) + " q=" + std::to_string(cert.q);
        report.points.push_back(std::move(point));
    }
    report.runtime_ms = elapsed_ms(start);
    return report;
}

namespace {

void partitions_into(std::size_t total, std::size_t parts, std::size_t max_part, std::vector<std::size_t>& prefix,
                     std::vector<std::vector<std::size_t>>& out) {
    if (parts == 0) {
        if (total == 0) out.push_back(prefix);
        return;
    }
    if (total < parts) return;
    for (std::size_t first = std::min(max_part, total - (parts - 1)); first >= 1; --first) {
        if (first * parts < total) break;
        prefix.push_back(first);
        partitions_into(total - first, parts - 1, first, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

LemmaReport verify_zhw(std::size_t s, std::size_t n, std::size_t q_max) {
    const auto start = std::chrono::steady_clock::now();
    if (s < 1 || n <= s || q_max < 1) throw std::invalid_argument("verify_zhw requires s >= 1, n > s, q_max >= 1");
    check_capacity(n);
    LemmaReport report;
    report.lemma = "zhw";
    report.params = {{"s", s}, {"n", n}, {"q_max", q_max}};
    const std::size_t rest = n - s;
    for (std::size_t q = 1; q <= std::min(q_max, rest); ++q) {
        std::vector<std::size_t> extremal(q, 1);
        extremal[0] = rest - q + 1;
        const RadiusReference reference(clique_join(s, extremal));
        std::vector<std::vector<std::size_t>> tuples;
        std::vector<std::size_t> prefix;
        partitions_into(rest, q, rest, prefix, tuples);
        for (const auto& tuple : tuples) {
            const Graph g = clique_join(s, tuple);
            const RadiusComparison cmp = reference.compare(g);
            (cmp.method == DecisionMethod::Float ? report.float_decisions : report.exact_decisions)++;
            const bool is_extremal = tuple == extremal;
            LemmaPoint point;
            point.params = {{"s", s}, {"n", n}, {"q", q}, {"parts", tuple}};
            point.pass = is_extremal ? cmp.order == Ordering::Equal : cmp.order == Ordering::Less;
            point.slack = reference.enclosure().midpoint() - spectral_radius(g).midpoint();
            point.detail = std::string(to_string(cmp.order)) + " by " + std::string(to_string(cmp.method));
            report.points.push_back(std::move(point));
        }
    }
    report.runtime_ms = elapsed_ms(start);
    return report;
}

LemmaReport verify_spectral_lemmas(const SpectralLemmaGrid& grid) {
    const auto start = std::chrono::steady_clock::now();
    if (grid.s_min < 1 || grid.s_max < grid.s_min || grid.n_span < 1 || grid.star_n_min < 4)
        throw std::invalid_argument("invalid spectral lemma grid");
    LemmaReport report;
    report.lemma = "spectral";
    report.params = {{"s_min", grid.s_min},
                     {"s_max", grid.s_max},
                     {"n_span", grid.n_span},
                     {"star_n_min", grid.star_n_min},
                     {"star_n_max", grid.star_n_max}};
    constexpr double kAgreement = 1e-8;

    // Dense radius, through the bit-set graph when it fits, else adjacency lists.
    auto dense_radius = [](std::size_t s, const std::vector<std::size_t>& parts) {
        std::size_t n = s;
        for (std::size_t p : parts) n += p;
        if (n <= kMaxVertices) return spectral_radius(clique_join(s, parts));
        return spectral_radius(clique_join_adjacency(s, parts));
    };

    for (long long s = grid.s_min; s <= grid.s_max; ++s) {
        for (long long n = 4 * s + 1; n <= 4 * s + grid.n_span; ++n) {
            LemmaPoint point;
            point.params = {{"family", "L"}, {"n", n}, {"s", s}};
            const std::vector<std::size_t> parts{static_cast<std::size_t>(n - s - 3), 1, 1, 1};
            const SpectralEnclosure dense = dense_radius(static_cast<std::size_t>(s), parts);

            QuotientMatrix q;
            q.k = 3;
            q.equitable = true;
            for (const auto& row : l_family_quotient(n, s))
                for (long long v : row) q.entries.push_back(static_cast<double>(v));
            bool quotient_matches_graph = true;
            if (n <= static_cast<long long>(kMaxVertices)) {
                const Graph g = l_family(static_cast<std::size_t>(n), static_cast<std::size_t>(s));
                PartitionClasses classes(3);
                for (long long v = 0; v < s; ++v) classes[0].insert(static_cast<std::size_t>(v));
                for (long long v = n - 3; v < n; ++v) classes[1].insert(static_cast<std::size_t>(v));
                for (long long v = s; v < n - 3; ++v) classes[2].insert(static_cast<std::size_t>(v));
                const QuotientMatrix from_graph = quotient_matrix(g, classes);
                quotient_matches_graph = from_graph.equitable && from_graph.entries == q.entries;
            }
            const SpectralEnclosure quotient = quotient_radius(q);
            const LFamilyPolyCheck poly = lemma6_poly_values(n, s);
            const double agreement = std::abs(quotient.midpoint() - dense.midpoint());
            const double target = static_cast<double>(n - 2);
            point.slack = target - dense.hi;
            point.pass = dense.hi < target && quotient.hi < target && agreement <= kAgreement && poly.holds() &&
                         quotient_matches_graph;
            std::ostringstream detail;
            detail << "rho<=" << dense.hi << " agreement=" << agreement << " f(n-2)=" << poly.f_at_n_minus_2
                   << " f(n-4)=" << poly.f_at_n_minus_4 << " trace=" << poly.trace
                   << (quotient_matches_graph ? "" : " quotient-mismatch");
            point.detail = detail.str();
            report.points.push_back(std::move(point));
        }
    }
    for (long long n = grid.star_n_min; n <= grid.star_n_max; ++n) {
        LemmaPoint point;
        point.params = {{"family", "K1+(K_{n-3}u2K1)"}, {"n", n}};
        const SpectralEnclosure dense = dense_radius(1, {static_cast<std::size_t>(n - 3), 1, 1});
        const double target = static_cast<double>(n - 2);
        point.slack = target - dense.hi;
        point.pass = dense.hi < target;
        std::ostringstream detail;
        detail << "rho<=" << dense.hi;
        point.detail = detail.str();
        report.points.push_back(std::move(point));
    }
    report.runtime_ms = elapsed_ms(start);
    return report;
}

}  // namespace pfactor
