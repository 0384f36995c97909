#include "qshuffle/grid.hpp"

#include <algorithm>

namespace qshuffle {

int GridSubset::index_of(const GridVertex& v) const {
    auto it = vertices_.find(v);
    if (it == vertices_.end()) return -1;
    return static_cast<int>(std::distance(vertices_.begin(), it));
}

int GridSubset::present_parent_count(const GridVertex& v) const {
    int n = 0;
    if (v.a > 0 && contains({v.a - 1, v.b})) ++n;
    if (v.b > 0 && contains({v.a, v.b - 1})) ++n;
    return n;
}

bool GridSubset::is_admissible() const {
    if (!contains_root()) return false;
    for (const auto& v : vertices_) {
        if (v == GridVertex{0, 0}) continue;
        if (present_parent_count(v) == 0) return false;
    }
    return true;
}

std::vector<GridVertex> GridSubset::both_parent_vertices() const {
    std::vector<GridVertex> xs;
    for (const auto& v : vertices_)
        if (present_parent_count(v) == 2) xs.push_back(v);
    return xs;
}

Point subset_to_point(const GridSubset& s, const EvalContext& ctx) {
    std::vector<Rational> coords;
    coords.reserve(s.size());
    for (const auto& v : s.vertices())
        coords.push_back(ctx.lambda() * ctx.q1().pow(v.a) * ctx.q2().pow(v.b));
    for (size_t i = 0; i < coords.size(); ++i)
        for (size_t j = i + 1; j < coords.size(); ++j)
            if (coords[i] == coords[j])
                throw CoordinateCollision("subset_to_point: vertices share a coordinate");
    return Point(std::move(coords));
}

}  // namespace qshuffle
