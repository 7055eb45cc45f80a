#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pfactor/graph.hpp"

namespace pfactor {

using ordered_json = nlohmann::ordered_json;

/// Complements of every labeled edge set of size 0..k_max over the C(n,2)
/// vertex pairs. Pairs are ordered lexicographically; sets are ordered by size,
/// then as lexicographic combinations. rank() positions are stable, so any
/// contiguous rank range can be visited on its own.
class CosparseEnumerator {
public:
    /// Throws CapacityError if n exceeds the vertex cap or the total overflows 2^63.
    CosparseEnumerator(std::size_t n, std::size_t k_max);

    std::size_t order() const { return n_; }
    std::size_t max_missing() const { return k_max_; }
    std::uint64_t total() const { return total_; }

    /// Calls visit(rank, graph) for every rank in [begin, end).
    void for_each(std::uint64_t begin, std::uint64_t end,
                  const std::function<void(std::uint64_t, const Graph&)>& visit) const;
    /// The graph at a single rank.
    Graph at(std::uint64_t rank) const;

private:
    std::size_t n_;
    std::size_t k_max_;
    std::vector<Edge> slots_;
    std::vector<std::uint64_t> block_start_;  // first rank of each missing-edge count
    std::uint64_t total_ = 0;
};

/// Binomial coefficient; throws CapacityError on 64-bit overflow.
std::uint64_t checked_binomial(std::uint64_t n, std::uint64_t k);

enum class ScanMode { Exhaustive, Sample };
std::string_view to_string(ScanMode m);
ScanMode parse_scan_mode(std::string_view text);

struct ScanOptions {
    ScanMode mode = ScanMode::Exhaustive;
    std::uint64_t seed = 1;
    std::uint64_t samples = 10000;
    std::size_t jobs = 1;
    /// Work unit for the worker pool; reports do not depend on it.
    std::uint64_t chunk_size = 2048;
    /// Exhaustive requests above this many graphs fall back to sampling.
    std::uint64_t exhaustive_limit = 100'000'000;
};

struct ScanCounts {
    std::uint64_t scanned = 0;
    std::uint64_t below_threshold = 0;
    std::uint64_t spectral_candidates = 0;
    std::uint64_t recognized_extremal = 0;
    std::uint64_t factor_yes = 0;
    std::uint64_t violations = 0;
};

/// Outcome of checking the spectral condition on a family of order-n graphs.
/// Every scanned graph ends in exactly one of: below_threshold,
/// recognized_extremal, factor_yes, violations.
struct ScanReport {
    int a = 1;
    int b = 1;
    std::size_t n = 0;
    ScanMode requested_mode = ScanMode::Exhaustive;
    ScanMode mode = ScanMode::Exhaustive;
    std::uint64_t seed = 0;
    std::uint64_t samples = 0;
    ScanCounts counts;
    std::vector<std::string> violations;  // graph6, in scan order
    double threshold_lo = 0.0;
    double threshold_hi = 0.0;
    std::uint64_t float_decisions = 0;
    std::uint64_t exact_decisions = 0;
    std::vector<std::string> notes;
    double runtime_ms = 0.0;

    bool confirmed() const { return violations.empty(); }
    ordered_json to_json(bool include_runtime = true) const;
    std::string to_csv() const;
};

/// For every scanned G with rho(G) >= rho(H_{n,a}) that is not H_{n,a}
/// itself, requires an (a,b)-parity factor (blossom decider). Exhaustive mode
/// walks CosparseEnumerator(n, n-2); sample mode visits H_{n,a}, all one- and two-pair
/// toggles of it, followed by `samples` seeded graphs whose complement has
/// at most n-2 edges. Throws std::invalid_argument on an invalid (a,b,n).
ScanReport verify_main_theorem(int a, int b, std::size_t n, const ScanOptions& options);

struct LemmaPoint {
    ordered_json params;
    bool pass = false;
    /// Margin by which the inequality holds; NaN when not applicable.
    double slack = 0.0;
    std::string detail;
};

struct LemmaReport {
    std::string lemma;
    ordered_json params;
    std::vector<LemmaPoint> points;
    std::uint64_t float_decisions = 0;
    std::uint64_t exact_decisions = 0;
    double runtime_ms = 0.0;

    std::size_t failures() const;
    bool passed() const { return failures() == 0; }
    double min_slack() const;
    double max_slack() const;
    ordered_json to_json(bool include_runtime = true) const;
    std::string to_csv() const;
};

/// H_{n,a} has no (a,b)-parity factor: the blossom decider says no, the
/// criterion search says no (when n is within its cap), and S = {}, T = {the
/// K_1 vertex} gives eta = -2 with q = 1.
LemmaReport verify_lemma_no_factor(int a, int b, const std::vector<std::size_t>& n_list);

/// For each q <= q_max and each partition n_1 >= ... >= n_q of n - s:
/// rho(K_s join (K_{n_1} u ... u K_{n_q})) <= rho(K_s join (K_{n-s-q+1} u (q-1)K_1)),
/// with equality exactly on that tuple. Ties are settled by the exact comparator.
LemmaReport verify_zhw(std::size_t s, std::size_t n, std::size_t q_max);

struct SpectralLemmaGrid {
    long long s_min = 1;
    long long s_max = 8;
    /// L_{n,s} is checked for n in [4s+1, 4s+n_span].
    long long n_span = 40;
    long long star_n_min = 4;
    long long star_n_max = 60;
};

/// rho(L_{n,s}) < n-2 with quotient/dense agreement <= 1e-8 and the exact
/// quotient polynomial values, plus rho(K_1 join (K_{n-3} u 2K_1)) < n-2.
LemmaReport verify_spectral_lemmas(const SpectralLemmaGrid& grid);

}  // namespace pfactor
