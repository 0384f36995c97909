#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "qshuffle/grid.hpp"

namespace qshuffle {

// Rooted binary tree, immutable and structurally shared (enumeration builds
// all shapes of a given size from shared subtrees). Grid placement is
// implicit: the root sits at (0, 0), the left child of a node at (a, b)
// at (a+1, b), the right child at (a, b+1).
struct BinaryTree;
using TreePtr = std::shared_ptr<const BinaryTree>;

struct BinaryTree {
    TreePtr left;
    TreePtr right;
};

int tree_size(const TreePtr& t);

// All rooted binary trees with n nodes; count = Catalan(n). n = 0 yields
// the single empty tree (nullptr). The bound caps the Catalan blowup.
std::vector<TreePtr> enumerate_trees(int n, int bound = 10);

// Multiset of grid coordinates covered by the implicit placement.
std::vector<GridVertex> tree_placement(const TreePtr& t);

// Whether the placement assigns the same coordinate to two nodes.
bool has_placement_collision(const TreePtr& t);

// Trees of size n whose placement collides; excluded from dimension counts.
std::vector<TreePtr> forbidden_trees(int n);

// Number of rooted binary trees supported on exactly the subset's vertices:
// 0 if some non-root vertex is orphaned, else 2^k with k = |X|.
Integer count_trees(const GridSubset& s);

// Independent oracle: enumerates parent-choice assignments directly.
// Intended for |s| <= 7.
Integer count_trees_brute_force(const GridSubset& s);

// Excluded region in torsion mode: all (x, y) with x >= a and y >= b.
struct ForbiddenRegion {
    int a = 0;
    int b = 0;
    bool contains(const GridVertex& v) const { return v.a >= a && v.b >= b; }
};

// Streams every admissible subset of size n (root present, every non-root
// vertex parented), with its multiplicity 2^k. With a region, subsets
// touching the region are excluded. Enumeration grows parented sets only,
// so no post-filtering happens.
void enumerate_admissible(int n, const std::optional<ForbiddenRegion>& region,
                          const std::function<void(const GridSubset&, const Integer&)>& yield);

// Convenience: collect the stream.
std::vector<std::pair<GridSubset, Integer>> admissible_subsets(
    int n, const std::optional<ForbiddenRegion>& region = std::nullopt);

// Sum of multiplicities over enumerate_admissible(n); dims[0] = 1.
Integer hilbert_dim(int n, const std::optional<ForbiddenRegion>& region = std::nullopt);

struct HilbertTable {
    bool torsion = false;
    int region_a = 0;  // meaningful only when torsion
    int region_b = 0;
    std::vector<Integer> dims;  // indexed by n, dims[0] = 1
};

HilbertTable hilbert_table(int n_max, const std::optional<ForbiddenRegion>& region = std::nullopt);

// Catalan number, binomial formula, exact.
Integer catalan(int n);

}  // namespace qshuffle
