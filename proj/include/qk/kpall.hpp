#ifndef QK_KPALL_HPP
#define QK_KPALL_HPP

#include <optional>
#include <vector>

#include <json.hpp>

#include "qk/digraph.hpp"
#include "qk/solvers.hpp"

namespace qk {

/// Grow a kernel-perfect set P by repeatedly adding the smallest vertex that
/// has no out-neighbour in the current set (it is a sink of the grown set, so
/// kernel-perfectness is kept). On return every vertex outside the result has
/// an out-neighbour in it. Throws InvalidInput if P is not kernel-perfect.
VertexSet extend_to_dominating_kp_set(const Digraph& d, VertexSet p);

/// Quasi-kernel Q with P inside N-[Q] and Q disjoint from N-(P): a kernel of
/// D[P'] where P' = extend_to_dominating_kp_set(D, P). False twins of D[P']
/// are collapsed before the kernel search, so large blowups stay tractable.
VertexSet quasi_kernel_covering(const Digraph& d, VertexSet p);

/// Pad to at least two parts, so k = max(#parts, 2).
Partition padded_partition(Partition partition);

/// Every intermediate set of the small quasi-kernel construction.
struct KpallTrace {
    int k = 0;
    /// V_1 after extension to a dominating kernel-perfect set.
    VertexSet first_part;
    /// Kernel of D[V_1].
    VertexSet kernel;
    /// Minimal subset of the kernel with the same N-.
    VertexSet kernel_core;
    /// V'_0, V'_1, ..., V'_k.
    std::vector<VertexSet> primed;
    VertexSet w;
    /// Index i >= 2 of the part used by the covering branch; empty for the
    /// "otherwise" branch.
    std::optional<int> covering_part;
    VertexSet result;
};

/// Small quasi-kernel from a kernel-perfect partition of a sink-free digraph:
/// |Q| <= (k-1)n/k with k = max(#parts, 2). Throws InvalidInput on sinks or a
/// part that is not kernel-perfect, PostconditionViolation if the result fails
/// its re-check.
KpallTrace small_qk_from_partition(const Digraph& d, const Partition& partition);

/// Quasi-kernel covering the largest part: k|N-[Q]| >= n. objective = |N-[Q]|.
SolveResult large_qk_from_partition(const Digraph& d, const Partition& partition);

/// Quasi-kernel with |Q| <= n - s/k (s = sources that are not sinks), via the
/// weighted-blowup reduction with large_qk_from_partition as the oracle.
/// objective = |Q|.
SolveResult small_qk_with_sources(const Digraph& d, const Partition& partition);

nlohmann::json trace_to_json(const KpallTrace& trace);

}  // namespace qk

#endif  // QK_KPALL_HPP
