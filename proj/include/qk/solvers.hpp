#ifndef QK_SOLVERS_HPP
#define QK_SOLVERS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qk/digraph.hpp"

namespace qk {

/// Largest vertex count handled by the exhaustive subset searches.
inline constexpr int kMaxExactOrder = 24;
/// Largest (twin-reduced) set handled by is_kernel_perfect.
inline constexpr int kMaxKernelPerfectSet = 20;
/// Largest digraph handled by the exact partition numbers.
inline constexpr int kMaxPartitionOrder = 16;

/// Outcome of an optimiser. The objective depends on the solver: a size,
/// |N-[Q]|, or the doubled sharp score |Q| + 2|N-(Q)|.
struct SolveResult {
    std::optional<VertexSet> witness;
    std::int64_t objective = 0;
    bool verified = false;
};

/// Visit every independent set of D contained in `within`, each exactly once.
void for_each_independent_set(const Digraph& d, VertexSet within,
                              const std::function<void(VertexSet)>& fn);

bool is_kernel(const Digraph& d, VertexSet k);
bool is_quasi_kernel(const Digraph& d, VertexSet q);

/// The first kernel by (size, bit order), if any.
SolveResult find_kernel(const Digraph& d);

/// Quasi-kernel of minimum size (ties by bit order).
SolveResult min_quasi_kernel(const Digraph& d);
/// Quasi-kernel maximising |N-[Q]| (ties: smaller set, then bit order).
SolveResult max_large_quasi_kernel(const Digraph& d);
/// Quasi-kernel maximising |Q| + 2|N-(Q)|, i.e. twice |Q|/2 + |N-(Q)|.
SolveResult max_sharp_quasi_kernel(const Digraph& d);

/// Sharp score of a set, doubled: |Q| + 2|N-(Q)|.
inline std::int64_t doubled_sharp_score(const Digraph& d, VertexSet q) {
    return q.size() + 2 * n_minus_set(d, q).size();
}

/// Polynomial quasi-kernel construction: take the smallest vertex v, solve
/// D - N-[v], then add v unless it has an out-neighbour in that solution.
VertexSet greedy_quasi_kernel(const Digraph& d);

/// Drop members of Q (largest first) while it stays a quasi-kernel.
/// Throws InvalidInput if Q is not a quasi-kernel.
VertexSet minimalize_quasi_kernel(const Digraph& d, VertexSet q);
bool is_minimal_quasi_kernel(const Digraph& d, VertexSet q);

/// Collapse false twins (non-adjacent vertices with identical in- and out-rows).
struct TwinQuotient {
    Digraph graph;
    /// classes[i] = vertices of the original digraph merged into quotient vertex i.
    std::vector<VertexSet> classes;

    VertexSet lift(VertexSet local) const;
};
TwinQuotient twin_quotient(const Digraph& d);

/// Every induced subdigraph of D[S] has a kernel. False twins are merged first,
/// which does not change the answer. Throws BudgetExceeded when the reduced set
/// exceeds kMaxKernelPerfectSet vertices.
bool is_kernel_perfect(const Digraph& d, VertexSet s);

enum class PartKind { kernel_perfect, acyclic, independent };
std::string to_string(PartKind kind);

struct Partition {
    std::vector<VertexSet> parts;
    PartKind kind = PartKind::kernel_perfect;

    int size() const { return static_cast<int>(parts.size()); }
    /// Pairwise disjoint and covering exactly `universe`.
    bool is_partition_of(VertexSet universe) const;
};

/// Exact minimum partition into parts satisfying a hereditary property.
/// Parts are listed in order of their smallest vertex.
struct PartitionNumber {
    int value = 0;
    Partition certificate;
};

/// kp(D): fewest kernel-perfect parts; kp(null) = 0.
PartitionNumber kp_number(const Digraph& d);
/// chi(D): fewest independent parts.
PartitionNumber chromatic_number(const Digraph& d);
/// Dichromatic number: fewest acyclic parts.
PartitionNumber dichromatic_number(const Digraph& d);

/// Maximal independent set from the in-degree recursion: pick the smallest
/// vertex v whose in-degree is at least its out-degree, recurse on
/// D - (N+[v] u N-(v)). Guarantees |I| + 2|N-(I)| >= n (re-checked).
VertexSet peeled_independent_set(const Digraph& d);
/// Maximal independent set I with |N-(I)| >= |N+(I)|. Returns the peeled set
/// when it qualifies; the recursion alone does not always achieve this (e.g.
/// 0->3, 3->1, 1->2), so otherwise the maximal independent set with the largest
/// |N-(I)| - |N+(I)| is found exhaustively (ties by size, then bit order).
/// Throws BudgetExceeded past kMaxExactOrder in that case and
/// PostconditionViolation if no maximal independent set qualifies.
VertexSet heavy_independent_set(const Digraph& d);
bool is_maximal_independent(const Digraph& d, VertexSet s);

}  // namespace qk

#endif  // QK_SOLVERS_HPP
