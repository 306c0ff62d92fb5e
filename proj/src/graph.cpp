#include "subiso/graph.hpp"

#include <set>

namespace subiso {

Graph::Graph(int vertex_count, std::vector<std::pair<Vertex, Vertex>> edges)
    : n_(vertex_count) {
    if (vertex_count < 0) throw ContractError("graph: negative vertex count");
    std::set<std::pair<Vertex, Vertex>> dedup;
    for (auto [u, v] : edges) {
        if (u == v) throw ContractError("graph: self-loop");
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n_) throw ContractError("graph: edge endpoint out of range");
        dedup.insert({u, v});
    }
    edges_.assign(dedup.begin(), dedup.end());
    adj_.assign(static_cast<std::size_t>(n_) * n_, 0);
    nbrs_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adj_[static_cast<std::size_t>(u) * n_ + v] = 1;
        adj_[static_cast<std::size_t>(v) * n_ + u] = 1;
        nbrs_[u].push_back(v);
        nbrs_[v].push_back(u);
    }
}

Hypergraph::Hypergraph(int vertex_count, int uniformity,
                       std::vector<std::vector<Vertex>> hyperedges,
                       std::optional<std::vector<int>> color_map)
    : n_(vertex_count), h_(uniformity), colors_(std::move(color_map)) {
    if (n_ < 0) throw ContractError("hypergraph: negative vertex count");
    if (h_ < 2) throw ContractError("hypergraph: uniformity must be >= 2");
    if (colors_) {
        if (static_cast<int>(colors_->size()) != n_)
            throw ContractError("hypergraph: color map size mismatch");
        for (int c : *colors_) {
            if (c < 0) throw ContractError("hypergraph: negative color");
            color_count_ = std::max(color_count_, c + 1);
        }
        classes_.assign(color_count_, {});
        for (Vertex v = 0; v < n_; ++v) classes_[(*colors_)[v]].push_back(v);
    }
    std::set<std::vector<Vertex>> dedup;
    for (auto e : hyperedges) {
        std::sort(e.begin(), e.end());
        if (static_cast<int>(e.size()) != h_ ||
            std::adjacent_find(e.begin(), e.end()) != e.end())
            throw ContractError("hypergraph: hyperedge must have exactly h distinct vertices");
        if (e.front() < 0 || e.back() >= n_)
            throw ContractError("hypergraph: hyperedge vertex out of range");
        if (colors_) {
            std::set<int> cs;
            for (Vertex v : e) cs.insert((*colors_)[v]);
            if (static_cast<int>(cs.size()) != h_)
                throw ContractError("hypergraph: hyperedge repeats a color");
        }
        dedup.insert(std::move(e));
    }
    edges_.assign(dedup.begin(), dedup.end());
}

bool Hypergraph::has_hyperedge(std::vector<Vertex> e) const {
    std::sort(e.begin(), e.end());
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

} // namespace subiso
