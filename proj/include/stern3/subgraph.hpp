#pragma once

// Directed graph of the triangle subdivision. Each subdivision of a triangle
// adds one vertex with an edge from each of the triangle's three corners.
// Vertex identity follows construction history, never value.

#include <array>
#include <cstddef>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "stern3/index.hpp"
#include "stern3/types.hpp"

namespace stern3 {

class vertex_not_built : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

using VertexId = std::size_t;

struct SubdivisionVertex {
    int depth = 0;       // 0 for the three initial vertices
    Digits created_by;   // address of the triangle whose subdivision made it
    std::vector<VertexId> parents;  // in-neighbors; empty or exactly three
};

class SubdivisionGraph {
public:
    static SubdivisionGraph build(int depth) {
        if (depth < 0)
            throw std::invalid_argument("depth must be nonnegative");
        detail::check_level(depth);
        SubdivisionGraph g;
        g.depth_ = depth;
        g.vertices_.resize(3);
        g.triangles_.push_back({0, 1, 2});
        // triangles_ is in level order; level j starts at (3^j - 1)/2.
        std::size_t level_begin = 0;
        for (int j = 0; j < depth; ++j) {
            const std::size_t level_end = g.triangles_.size();
            for (std::size_t t = level_begin; t < level_end; ++t) {
                const auto corners = g.triangles_[t];
                const VertexId fresh = g.vertices_.size();
                g.vertices_.push_back({j + 1, g.triangle_address(t), {corners[0], corners[1], corners[2]}});
                g.triangles_.push_back({corners[0], corners[1], fresh});
                g.triangles_.push_back({corners[1], corners[2], fresh});
                g.triangles_.push_back({corners[2], corners[0], fresh});
            }
            level_begin = level_end;
        }
        return g;
    }

    int depth() const { return depth_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return 3 * (vertices_.size() - 3); }
    const SubdivisionVertex& vertex(VertexId v) const { return vertices_.at(v); }
    const std::vector<SubdivisionVertex>& vertices() const { return vertices_; }

    bool is_initial(VertexId v) const { return v < 3; }

    // Corners of triangle Delta(digits), in position order.
    const std::array<VertexId, 3>& triangle(const Digits& digits) const {
        if (static_cast<int>(digits.size()) > depth_)
            throw vertex_not_built("triangle at level " + std::to_string(digits.size()) + " not built (depth " +
                                   std::to_string(depth_) + ")");
        check_digits(digits);
        std::size_t within = 0;
        for (Trit d : digits)
            within = within * 3 + d;
        return triangles_[static_cast<std::size_t>((pow3(static_cast<int>(digits.size())) - 1) / 2) + within];
    }

    // The vertex that the sequence index N names: corner pos of Delta(digits).
    VertexId vertex_of(Index N) const {
        const IndexTuple t = decode(N);
        return triangle(t.digits)[static_cast<std::size_t>(t.pos - 1)];
    }

    // One "src -> dst" line per edge.
    std::string to_edge_list() const {
        std::ostringstream os;
        for (VertexId v = 3; v < vertices_.size(); ++v)
            for (VertexId p : vertices_[v].parents)
                os << p << " -> " << v << '\n';
        return os.str();
    }

private:
    Digits triangle_address(std::size_t t) const {
        int level = 0;
        while (static_cast<std::size_t>((pow3(level + 1) - 1) / 2) <= t)
            ++level;
        std::size_t within = t - static_cast<std::size_t>((pow3(level) - 1) / 2);
        Digits d(static_cast<std::size_t>(level), 0);
        for (int i = level - 1; i >= 0; --i) {
            d[static_cast<std::size_t>(i)] = static_cast<Trit>(within % 3);
            within /= 3;
        }
        return d;
    }

    int depth_ = 0;
    std::vector<SubdivisionVertex> vertices_;
    std::vector<std::array<VertexId, 3>> triangles_;
};

// Paths from the initial vertices to every vertex. Initial vertices count the
// empty path, so they carry 1. Creation order is a topological order.
template <class Int = BigInt>
std::vector<Int> path_counts(const SubdivisionGraph& g) {
    std::vector<Int> count(g.vertex_count(), Int(0));
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.is_initial(v)) {
            count[v] = 1;
            continue;
        }
        for (VertexId p : g.vertex(v).parents)
            count[v] += count[p];
    }
    return count;
}

template <class Int = BigInt>
Int path_count(const SubdivisionGraph& g, Index N) {
    const VertexId target = g.vertex_of(N);
    return path_counts<Int>(g)[target];
}

} // namespace stern3
