#include "qshuffle/combinatorics.hpp"

#include <algorithm>
#include <map>

namespace qshuffle {

int tree_size(const TreePtr& t) {
    if (!t) return 0;
    return 1 + tree_size(t->left) + tree_size(t->right);
}

std::vector<TreePtr> enumerate_trees(int n, int bound) {
    if (n > bound)
        throw Error("enumerate_trees: n exceeds the configured bound of " +
                    std::to_string(bound));
    // trees[k] = all shapes with k nodes; subtrees are shared.
    std::vector<std::vector<TreePtr>> trees(std::max(n + 1, 1));
    trees[0] = {nullptr};
    for (int k = 1; k <= n; ++k) {
        for (int l = 0; l < k; ++l) {
            int r = k - 1 - l;
            for (const auto& lt : trees[l])
                for (const auto& rt : trees[r])
                    trees[k].push_back(std::make_shared<const BinaryTree>(BinaryTree{lt, rt}));
        }
    }
    return trees[n];
}

namespace {

void collect_placement(const TreePtr& t, GridVertex at, std::vector<GridVertex>& out) {
    if (!t) return;
    out.push_back(at);
    collect_placement(t->left, at.left_child(), out);
    collect_placement(t->right, at.right_child(), out);
}

}  // namespace

std::vector<GridVertex> tree_placement(const TreePtr& t) {
    std::vector<GridVertex> out;
    collect_placement(t, {0, 0}, out);
    return out;
}

bool has_placement_collision(const TreePtr& t) {
    auto cells = tree_placement(t);
    std::sort(cells.begin(), cells.end(), GridVertexOrder{});
    return std::adjacent_find(cells.begin(), cells.end()) != cells.end();
}

std::vector<TreePtr> forbidden_trees(int n) {
    std::vector<TreePtr> out;
    for (const auto& t : enumerate_trees(n))
        if (has_placement_collision(t)) out.push_back(t);
    return out;
}

Integer count_trees(const GridSubset& s) {
    if (!s.contains_root()) return 0;
    if (!s.is_admissible()) return 0;
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2,
                  static_cast<unsigned long>(s.both_parent_vertices().size()));
    return r;
}

Integer count_trees_brute_force(const GridSubset& s) {
    // Counts from the tree side: enumerate every binary tree of the right
    // size and keep those whose placement covers the subset exactly, with
    // no repeated coordinate. Independent of the 2^k parent formula.
    const int n = s.size();
    if (n == 0 || !s.contains_root()) return 0;
    Integer total = 0;
    for (const auto& t : enumerate_trees(n)) {
        auto cells = tree_placement(t);
        std::sort(cells.begin(), cells.end(), GridVertexOrder{});
        if (std::adjacent_find(cells.begin(), cells.end()) != cells.end()) continue;
        if (GridSubset(cells) == s) ++total;
    }
    return total;
}

void enumerate_admissible(int n, const std::optional<ForbiddenRegion>& region,
                          const std::function<void(const GridSubset&, const Integer&)>& yield) {
    if (n <= 0) return;
    GridVertex root{0, 0};
    if (region && region->contains(root)) return;

    // Candidate-list recursion: grow parented sets by taking candidates in
    // order; a candidate skipped at one level stays banned below it, so each
    // admissible subset is produced exactly once.
    GridSubset current;
    current.insert(root);

    auto allowed = [&](const GridVertex& v) { return !region || !region->contains(v); };

    std::function<void(std::vector<GridVertex>)> recurse =
        [&](std::vector<GridVertex> candidates) {
            if (current.size() == n) {
                yield(current, count_trees(current));
                return;
            }
            while (!candidates.empty()) {
                GridVertex c = candidates.front();
                candidates.erase(candidates.begin());
                current.insert(c);
                std::vector<GridVertex> next = candidates;
                for (GridVertex child : {c.left_child(), c.right_child()}) {
                    if (!allowed(child) || current.contains(child)) continue;
                    // Already a candidate through its other parent?
                    if (std::find(next.begin(), next.end(), child) == next.end())
                        next.push_back(child);
                }
                recurse(std::move(next));
                current.erase(c);
            }
        };

    std::vector<GridVertex> initial;
    for (GridVertex child : {root.left_child(), root.right_child()})
        if (allowed(child)) initial.push_back(child);
    recurse(std::move(initial));
}

std::vector<std::pair<GridSubset, Integer>> admissible_subsets(
    int n, const std::optional<ForbiddenRegion>& region) {
    std::vector<std::pair<GridSubset, Integer>> out;
    enumerate_admissible(n, region,
                         [&](const GridSubset& s, const Integer& m) { out.emplace_back(s, m); });
    return out;
}

Integer hilbert_dim(int n, const std::optional<ForbiddenRegion>& region) {
    if (n == 0) return 1;
    Integer total = 0;
    enumerate_admissible(n, region,
                         [&](const GridSubset&, const Integer& m) { total += m; });
    return total;
}

HilbertTable hilbert_table(int n_max, const std::optional<ForbiddenRegion>& region) {
    HilbertTable t;
    if (region) {
        t.torsion = true;
        t.region_a = region->a;
        t.region_b = region->b;
    }
    for (int n = 0; n <= n_max; ++n) t.dims.push_back(hilbert_dim(n, region));
    return t;
}

Integer catalan(int n) {
    Integer binom;
    mpz_bin_uiui(binom.get_mpz_t(), 2UL * static_cast<unsigned long>(n),
                 static_cast<unsigned long>(n));
    return binom / (n + 1);
}

}  // namespace qshuffle
