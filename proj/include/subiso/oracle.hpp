#ifndef SUBISO_ORACLE_HPP
#define SUBISO_ORACLE_HPP

#include <optional>

#include "subiso/colored.hpp"
#include "subiso/tensor.hpp"

namespace subiso {
namespace oracle {

// Definitional brute-force references. Each transcribes the problem
// statement directly; no shortcuts beyond early exit on success. These are
// the ground truth for every derived test value in the repo.

struct Guard {
    // Refuse instead of silently running forever.
    double max_evaluations = 1e7;
};

/// Enumerate all configurations of V(H), filter by validity.
bool brute_solve_colored(const ColoredInstance& inst, Guard guard = {});

/// As above with total weight == target required.
bool brute_solve_ew_colored(const ColoredInstance& inst, Guard guard = {});

/// Enumerate injective edge-preserving maps V(H) -> V(G) by backtracking.
bool brute_solve_uncolored(const UncoloredInstance& inst, Guard guard = {});

/// As above with exact total weight (node or edge) == target.
bool brute_solve_ew_uncolored(const UncoloredInstance& inst, Guard guard = {});

/// One vertex per color class such that every size-h subset is a hyperedge.
std::optional<std::vector<Vertex>> brute_hyperclique(const Hypergraph& hg, Guard guard = {});

/// Classic O(T*n) dynamic program over achievable sums; values non-negative.
bool brute_subset_sum(const std::vector<BigInt>& values, const BigInt& target,
                      Guard guard = {});

/// Direct nested-loop evaluation of the k-wise matrix product definition.
BoolTensor brute_kwise_product(const std::vector<BoolTensor>& tensors);

} // namespace oracle
} // namespace subiso

#endif
