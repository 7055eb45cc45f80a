#include "pfactor/matching.hpp"

#include <algorithm>

namespace pfactor {

namespace {

// Augmenting-path search with blossom contraction through a base[] array:
// vertices of a shrunken odd cycle share the base of its stem.
class BlossomMatcher {
public:
    explicit BlossomMatcher(const AdjacencyList& g)
        : g_(g), n_(g.order()), mate_(n_, kUnmatched), parent_(n_), base_(n_), in_tree_(n_), in_blossom_(n_),
          lca_mark_(n_, 0) {
        queue_.reserve(n_);
    }

    void seed_greedy() {
        for (std::size_t v = 0; v < n_; ++v) {
            if (mate_[v] != kUnmatched) continue;
            for (std::uint32_t u : g_.neighbors(v)) {
                if (mate_[u] == kUnmatched) {
                    mate_[v] = u;
                    mate_[u] = v;
                    break;
                }
            }
        }
    }

    bool augment_from(std::size_t root) {
        std::size_t v = find_path(root);
        if (v == kUnmatched) return false;
        while (v != kUnmatched) {
            const std::size_t pv = parent_[v];
            const std::size_t next = mate_[pv];
            mate_[v] = pv;
            mate_[pv] = v;
            v = next;
        }
        return true;
    }

    std::size_t order() const { return n_; }
    const std::vector<std::size_t>& mates() const { return mate_; }
    std::vector<std::size_t> take_mates() { return std::move(mate_); }

private:
    std::size_t lca(std::size_t a, std::size_t b) {
        ++stamp_;
        while (true) {
            a = base_[a];
            lca_mark_[a] = stamp_;
            if (mate_[a] == kUnmatched) break;
            a = parent_[mate_[a]];
        }
        while (true) {
            b = base_[b];
            if (lca_mark_[b] == stamp_) return b;
            b = parent_[mate_[b]];
        }
    }

    void mark_path(std::size_t v, std::size_t b, std::size_t child) {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = true;
            in_blossom_[base_[mate_[v]]] = true;
            parent_[v] = child;
            child = mate_[v];
            v = parent_[mate_[v]];
        }
    }

    std::size_t find_path(std::size_t root) {
        std::fill(in_tree_.begin(), in_tree_.end(), false);
        std::fill(parent_.begin(), parent_.end(), kUnmatched);
        for (std::size_t i = 0; i < n_; ++i) base_[i] = i;
        queue_.clear();
        in_tree_[root] = true;
        queue_.push_back(root);
        for (std::size_t head = 0; head < queue_.size(); ++head) {
            const std::size_t v = queue_[head];
            for (std::uint32_t to : g_.neighbors(v)) {
                if (base_[v] == base_[to] || mate_[v] == to) continue;
                if (to == root || (mate_[to] != kUnmatched && parent_[mate_[to]] != kUnmatched)) {
                    // Odd cycle: contract it onto its stem.
                    const std::size_t stem = lca(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), false);
                    mark_path(v, stem, to);
                    mark_path(to, stem, v);
                    for (std::size_t i = 0; i < n_; ++i) {
                        if (!in_blossom_[base_[i]]) continue;
                        base_[i] = stem;
                        if (!in_tree_[i]) {
                            in_tree_[i] = true;
                            queue_.push_back(i);
                        }
                    }
                } else if (parent_[to] == kUnmatched) {
                    parent_[to] = v;
                    if (mate_[to] == kUnmatched) return to;
                    in_tree_[mate_[to]] = true;
                    queue_.push_back(mate_[to]);
                }
            }
        }
        return kUnmatched;
    }

    const AdjacencyList& g_;
    std::size_t n_;
    std::vector<std::size_t> mate_;
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> base_;
    std::vector<bool> in_tree_;
    std::vector<bool> in_blossom_;
    std::vector<std::uint64_t> lca_mark_;
    std::uint64_t stamp_ = 0;
    std::vector<std::size_t> queue_;
};

EdgeSet mates_to_edges(const std::vector<std::size_t>& mate) {
    EdgeSet out;
    for (std::size_t v = 0; v < mate.size(); ++v)
        if (mate[v] != kUnmatched && v < mate[v]) out.emplace_back(v, mate[v]);
    return out;
}

}  // namespace

std::vector<std::size_t> maximum_matching_mates(const AdjacencyList& g) {
    BlossomMatcher matcher(g);
    matcher.seed_greedy();
    // A vertex with no augmenting path now never gains one later.
    for (std::size_t v = 0; v < matcher.order(); ++v)
        if (matcher.mates()[v] == kUnmatched) matcher.augment_from(v);
    return matcher.take_mates();
}

std::optional<std::vector<std::size_t>> perfect_matching_mates(const AdjacencyList& g) {
    if (g.order() % 2 != 0) return std::nullopt;
    BlossomMatcher matcher(g);
    matcher.seed_greedy();
    for (std::size_t v = 0; v < matcher.order(); ++v)
        if (matcher.mates()[v] == kUnmatched && !matcher.augment_from(v)) return std::nullopt;
    return matcher.take_mates();
}

EdgeSet max_matching(const AdjacencyList& g) { return mates_to_edges(maximum_matching_mates(g)); }

EdgeSet max_matching(const Graph& g) { return max_matching(AdjacencyList(g)); }

}  // namespace pfactor
