#ifndef SUBISO_GRAPH_HPP
#define SUBISO_GRAPH_HPP

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "subiso/common.hpp"

namespace subiso {

/// Simple undirected graph on dense vertex ids 0..vertex_count-1.
/// Immutable after construction; edge set deduplicated, no self-loops.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count,
                   std::vector<std::pair<Vertex, Vertex>> edges = {});

    int vertex_count() const { return n_; }
    const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool has_edge(Vertex u, Vertex v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
        return adj_[static_cast<std::size_t>(u) * n_ + v];
    }
    const std::vector<Vertex>& neighbors(Vertex u) const { return nbrs_[u]; }
    int degree(Vertex u) const { return static_cast<int>(nbrs_[u].size()); }

    bool operator==(const Graph& o) const {
        return n_ == o.n_ && edges_ == o.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<Vertex, Vertex>> edges_; // u < v, sorted
    std::vector<char> adj_;
    std::vector<std::vector<Vertex>> nbrs_;
};

/// h-uniform hypergraph, optionally vertex-colored. A colored hypergraph
/// never has a hyperedge with two same-colored vertices.
class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(int vertex_count, int uniformity,
               std::vector<std::vector<Vertex>> hyperedges,
               std::optional<std::vector<int>> color_map = std::nullopt);

    int vertex_count() const { return n_; }
    int uniformity() const { return h_; }
    const std::vector<std::vector<Vertex>>& hyperedges() const { return edges_; }
    bool has_hyperedge(std::vector<Vertex> e) const;

    bool is_colored() const { return colors_.has_value(); }
    int color_of(Vertex v) const { return (*colors_)[v]; }
    int color_count() const { return color_count_; }
    const std::vector<Vertex>& color_class(int c) const { return classes_[c]; }

private:
    int n_ = 0;
    int h_ = 2;
    std::vector<std::vector<Vertex>> edges_; // each sorted; list sorted, deduped
    std::optional<std::vector<int>> colors_;
    int color_count_ = 0;
    std::vector<std::vector<Vertex>> classes_;
};

} // namespace subiso

#endif
