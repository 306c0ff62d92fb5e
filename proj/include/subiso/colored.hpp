#ifndef SUBISO_COLORED_HPP
#define SUBISO_COLORED_HPP

#include <map>
#include <optional>
#include <vector>

#include "subiso/common.hpp"
#include "subiso/graph.hpp"

namespace subiso {

/// Color homomorphism f: V(G) -> V(H). Preimages are the color classes,
/// stored as ordered lists so configurations map to tensor indices
/// deterministically. Construction rejects host edges that do not map to
/// pattern edges (monochromatic edges included) -- callers that simulate
/// color coding must delete those edges first.
class ColorMap {
public:
    ColorMap() = default;
    ColorMap(const Graph& pattern, const Graph& host, std::vector<Vertex> host_to_pattern);

    Vertex pattern_vertex_of(Vertex host_v) const { return host_to_pattern_[host_v]; }
    const std::vector<Vertex>& host_to_pattern() const { return host_to_pattern_; }
    const std::vector<Vertex>& preimage(Vertex pattern_v) const { return preimages_[pattern_v]; }
    int preimage_size(Vertex pattern_v) const {
        return static_cast<int>(preimages_[pattern_v].size());
    }
    /// Index of a host vertex within its preimage list.
    int slot_of(Vertex host_v) const { return slot_[host_v]; }
    int max_preimage_size() const { return max_preimage_; }

private:
    std::vector<Vertex> host_to_pattern_;
    std::vector<std::vector<Vertex>> preimages_;
    std::vector<int> slot_;
    int max_preimage_ = 0;
};

enum class WeightKind { node, edge };

/// Integer weights on host vertices or host edges, arbitrary precision.
class WeightFn {
public:
    static WeightFn node_weights(std::vector<BigInt> values);
    static WeightFn edge_weights(const Graph& host,
                                 std::map<std::pair<Vertex, Vertex>, BigInt> values);

    WeightKind kind() const { return kind_; }
    const BigInt& node_weight(Vertex v) const;
    const BigInt& edge_weight(Vertex u, Vertex v) const;
    const std::vector<BigInt>& node_values() const { return node_values_; }
    const std::map<std::pair<Vertex, Vertex>, BigInt>& edge_values() const {
        return edge_values_;
    }
    /// Maximum absolute weight, floored at 1 so runtimes never degenerate.
    const BigInt& max_abs() const { return max_abs_; }

private:
    WeightKind kind_ = WeightKind::node;
    std::vector<BigInt> node_values_;
    std::map<std::pair<Vertex, Vertex>, BigInt> edge_values_;
    BigInt max_abs_ = 1;
    static const BigInt zero_;
};

/// A mapping R: I -> V(G) for a domain I of pattern vertices. assignment[v]
/// is the chosen host vertex, or -1 for pattern vertices outside I.
struct Configuration {
    std::vector<Vertex> assignment;

    static Configuration empty(int pattern_size) {
        return Configuration{std::vector<Vertex>(pattern_size, -1)};
    }
    bool in_domain(Vertex pattern_v) const { return assignment[pattern_v] >= 0; }
    Vertex at(Vertex pattern_v) const { return assignment[pattern_v]; }
    std::vector<Vertex> domain() const {
        std::vector<Vertex> d;
        for (Vertex v = 0; v < static_cast<int>(assignment.size()); ++v)
            if (assignment[v] >= 0) d.push_back(v);
        return d;
    }
};

/// The central problem object: (H, G, f) or (H, G, f, w), plus a target
/// weight (zero unless a generator set one; solvers re-zero it on entry).
struct ColoredInstance {
    Graph pattern;
    Graph host;
    ColorMap colors;
    std::optional<WeightFn> weights;
    BigInt target = 0;

    int pattern_size() const { return pattern.vertex_count(); }
    int preimage_bound() const { return colors.max_preimage_size(); }

    static ColoredInstance make(Graph pattern, Graph host, std::vector<Vertex> host_to_pattern,
                                std::optional<WeightFn> weights = std::nullopt,
                                BigInt target = 0);
};

struct UncoloredInstance {
    Graph pattern;
    Graph host;
    std::optional<WeightFn> weights;
    BigInt target = 0;
};

/// True iff every pattern edge with both endpoints in R's domain is realized
/// by a host edge.
bool is_valid_configuration(const ColoredInstance& inst, const Configuration& R);

/// Node case: sum of node weights over R's image. Edge case: sum of edge
/// weights over pattern edges inside R's domain.
BigInt configuration_weight(const ColoredInstance& inst, const Configuration& R);

} // namespace subiso

#endif
