#include "subiso/colored.hpp"

namespace subiso {

const BigInt WeightFn::zero_ = 0;

ColorMap::ColorMap(const Graph& pattern, const Graph& host,
                   std::vector<Vertex> host_to_pattern)
    : host_to_pattern_(std::move(host_to_pattern)) {
    if (static_cast<int>(host_to_pattern_.size()) != host.vertex_count())
        throw ContractError("color map: size must equal host vertex count");
    preimages_.assign(pattern.vertex_count(), {});
    slot_.assign(host.vertex_count(), -1);
    for (Vertex v = 0; v < host.vertex_count(); ++v) {
        Vertex p = host_to_pattern_[v];
        if (p < 0 || p >= pattern.vertex_count())
            throw ContractError("color map: image vertex not in pattern");
        slot_[v] = static_cast<int>(preimages_[p].size());
        preimages_[p].push_back(v);
    }
    for (auto [u, v] : host.edges()) {
        Vertex pu = host_to_pattern_[u], pv = host_to_pattern_[v];
        if (pu == pv)
            throw ContractError("color map: monochromatic host edge");
        if (!pattern.has_edge(pu, pv))
            throw ContractError("color map: host edge does not map to a pattern edge");
    }
    for (auto& pre : preimages_)
        max_preimage_ = std::max(max_preimage_, static_cast<int>(pre.size()));
}

WeightFn WeightFn::node_weights(std::vector<BigInt> values) {
    WeightFn w;
    w.kind_ = WeightKind::node;
    w.node_values_ = std::move(values);
    for (const auto& v : w.node_values_)
        w.max_abs_ = std::max(w.max_abs_, abs(v));
    return w;
}

WeightFn WeightFn::edge_weights(const Graph& host,
                                std::map<std::pair<Vertex, Vertex>, BigInt> values) {
    WeightFn w;
    w.kind_ = WeightKind::edge;
    for (auto& [e, val] : values) {
        auto [u, v] = e;
        if (u > v) std::swap(u, v);
        if (!host.has_edge(u, v))
            throw ContractError("edge weights: weight on a non-edge");
        w.edge_values_[{u, v}] = val;
        w.max_abs_ = std::max(w.max_abs_, abs(val));
    }
    return w;
}

const BigInt& WeightFn::node_weight(Vertex v) const {
    if (kind_ != WeightKind::node)
        throw UnsupportedError("node_weight on edge-weighted function");
    return node_values_[v];
}

const BigInt& WeightFn::edge_weight(Vertex u, Vertex v) const {
    if (kind_ != WeightKind::edge)
        throw UnsupportedError("edge_weight on node-weighted function");
    if (u > v) std::swap(u, v);
    auto it = edge_values_.find({u, v});
    return it == edge_values_.end() ? zero_ : it->second;
}

ColoredInstance ColoredInstance::make(Graph pattern, Graph host,
                                      std::vector<Vertex> host_to_pattern,
                                      std::optional<WeightFn> weights, BigInt target) {
    ColoredInstance inst;
    inst.colors = ColorMap(pattern, host, std::move(host_to_pattern));
    inst.pattern = std::move(pattern);
    inst.host = std::move(host);
    if (weights) {
        if (weights->kind() == WeightKind::node &&
            static_cast<int>(weights->node_values().size()) != inst.host.vertex_count())
            throw ContractError("instance: node weight vector size mismatch");
        inst.weights = std::move(weights);
    }
    inst.target = std::move(target);
    return inst;
}

bool is_valid_configuration(const ColoredInstance& inst, const Configuration& R) {
    if (static_cast<int>(R.assignment.size()) != inst.pattern_size())
        throw ContractError("configuration: domain vertex not in pattern");
    for (Vertex v = 0; v < inst.pattern_size(); ++v) {
        Vertex hv = R.assignment[v];
        if (hv < 0) continue;
        if (hv >= inst.host.vertex_count() || inst.colors.pattern_vertex_of(hv) != v)
            throw ContractError("configuration: vertex mapped outside its preimage");
    }
    for (auto [u, v] : inst.pattern.edges()) {
        if (!R.in_domain(u) || !R.in_domain(v)) continue;
        if (!inst.host.has_edge(R.at(u), R.at(v))) return false;
    }
    return true;
}

BigInt configuration_weight(const ColoredInstance& inst, const Configuration& R) {
    if (!inst.weights)
        throw UnsupportedError("configuration_weight: instance has no weights");
    BigInt total = 0;
    if (inst.weights->kind() == WeightKind::node) {
        for (Vertex v = 0; v < inst.pattern_size(); ++v)
            if (R.in_domain(v)) total += inst.weights->node_weight(R.at(v));
    } else {
        for (auto [u, v] : inst.pattern.edges())
            if (R.in_domain(u) && R.in_domain(v))
                total += inst.weights->edge_weight(R.at(u), R.at(v));
    }
    return total;
}

} // namespace subiso
