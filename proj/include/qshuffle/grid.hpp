#pragma once

#include <optional>
#include <set>
#include <vector>

#include "qshuffle/laurent.hpp"

namespace qshuffle {

// Vertex of the triangular grid: a steps down-left, b steps down-right from
// the root (0, 0). It carries the coordinate lambda * q1^a * q2^b.
struct GridVertex {
    int a = 0;
    int b = 0;

    GridVertex() = default;
    GridVertex(int a_, int b_) : a(a_), b(b_) {}

    int depth() const { return a + b; }
    GridVertex left_child() const { return {a + 1, b}; }
    GridVertex right_child() const { return {a, b + 1}; }

    friend bool operator==(const GridVertex&, const GridVertex&) = default;
};

// Canonical vertex order: row by row, left to right as drawn (depth
// ascending, then b ascending). Fixes the coordinate order of points and
// the variable indices of relation vectors.
struct GridVertexOrder {
    bool operator()(const GridVertex& u, const GridVertex& v) const {
        if (u.depth() != v.depth()) return u.depth() < v.depth();
        return u.b < v.b;
    }
};

// Finite set of grid vertices. For Hilbert counting it must contain the
// root.
class GridSubset {
public:
    GridSubset() = default;
    explicit GridSubset(std::vector<GridVertex> vs) { vertices_.insert(vs.begin(), vs.end()); }

    const std::set<GridVertex, GridVertexOrder>& vertices() const { return vertices_; }
    int size() const { return static_cast<int>(vertices_.size()); }
    bool contains(const GridVertex& v) const { return vertices_.count(v) > 0; }
    bool contains_root() const { return contains({0, 0}); }
    void insert(const GridVertex& v) { vertices_.insert(v); }
    void erase(const GridVertex& v) { vertices_.erase(v); }

    // 0-based position of v in the canonical order; -1 if absent.
    int index_of(const GridVertex& v) const;
    // Vertices in canonical order.
    std::vector<GridVertex> ordered() const {
        return std::vector<GridVertex>(vertices_.begin(), vertices_.end());
    }

    // Parents present in the subset ((a-1, b) and/or (a, b-1)).
    int present_parent_count(const GridVertex& v) const;

    // Root present and every non-root vertex has a present parent.
    bool is_admissible() const;

    // X: vertices with both parents present. k = |X| drives the 2^k
    // multiplicity.
    std::vector<GridVertex> both_parent_vertices() const;

    friend bool operator==(const GridSubset& a, const GridSubset& b) {
        return a.vertices_ == b.vertices_;
    }
    friend bool operator<(const GridSubset& a, const GridSubset& b) {
        return std::lexicographical_compare(
            a.vertices_.begin(), a.vertices_.end(), b.vertices_.begin(), b.vertices_.end(),
            GridVertexOrder{});
    }

private:
    std::set<GridVertex, GridVertexOrder> vertices_;
};

// Coordinates lambda q1^a q2^b in the canonical vertex order. Throws
// CoordinateCollision if two vertices receive the same value.
Point subset_to_point(const GridSubset& s, const EvalContext& ctx);

}  // namespace qshuffle
