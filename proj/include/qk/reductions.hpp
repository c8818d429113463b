#ifndef QK_REDUCTIONS_HPP
#define QK_REDUCTIONS_HPP

#include <functional>
#include <span>
#include <vector>

#include <json.hpp>

#include "qk/digraph.hpp"
#include "qk/rational.hpp"
#include "qk/solvers.hpp"

namespace qk {

enum class BlowupKind { source_gadget, weighted, c3 };

/// blocks[v] = f(v), the vertices of the transformed digraph standing for base vertex v.
/// For source gadgets f(v) holds v itself plus the new sources pointing at it.
struct BlowupMap {
    BlowupKind kind = BlowupKind::weighted;
    int base_n = 0;
    std::vector<VertexSet> blocks;

    /// Union of the blocks of the base vertices in s.
    VertexSet lift(VertexSet base) const;
    /// Base vertex owning transformed vertex x.
    int owner(int x) const;
};

struct Blowup {
    Digraph graph;
    BlowupMap map;
};

/// D plus `copies` new sources per vertex v, each with the single arc into v.
/// Vertex v keeps its index; the gadget vertices of v are n + v*copies + j.
Blowup add_source_gadget(const Digraph& d, int copies);

/// Vertex a becomes multiplicities[a] pairwise non-adjacent copies (contiguous
/// indices); copies of a and b are joined exactly when a -> b.
Blowup weighted_blowup(const Digraph& d, std::span<const int> multiplicities);

/// Vertex v becomes the triangle 3v -> 3v+1 -> 3v+2 -> 3v; inter-block arcs follow D.
Blowup c3_blowup(const Digraph& d);

/// Quasi-kernel of the base digraph from one of the transformed digraph.
/// Weighted and C3: {v : f(v) meets Q'} (for C3 each such block must meet Q'
/// in exactly one vertex). Source gadget: Q' restricted to the original vertices.
/// Throws InvalidInput if Q' is not a quasi-kernel, PostconditionViolation if
/// the projection is not one.
VertexSet project_blowup_qk(const Digraph& base, const Blowup& blowup, VertexSet q_prime);

/// True when every block lies entirely inside or entirely outside s.
bool blocks_uniform(const BlowupMap& map, VertexSet s);

/// Returns a quasi-kernel of the digraph it is given.
using QuasiKernelOracle = std::function<VertexSet(const Digraph&)>;

enum class PeelObjective { large, sharp };

/// Extend a solver for sink-free digraphs to all digraphs: while a sink exists,
/// take the smallest sink v, solve D[V - N-[v]] recursively and add v.
/// objective = |N-[Q]| (large) or |Q| + 2|N-(Q)| (sharp).
SolveResult sink_peel(const QuasiKernelOracle& sink_free_solver, const Digraph& d, PeelObjective objective);

/// Decomposition around a minimal quasi-kernel Q of a sink-free digraph:
/// N = N-(Q), M = the rest, and a greedy maximal matching from N into Q.
struct MatchingSplit {
    VertexSet q, n, m, q1, q2;
    std::vector<Arc> matching;

    int r() const { return q1.size(); }
    int s() const { return q2.size(); }
    int p() const { return n.size(); }
    int m_size() const { return m.size(); }
};

/// Throws InvalidInput if D has sinks or Q is not a minimal quasi-kernel, and
/// PostconditionViolation if a structural fact of the split fails.
MatchingSplit matching_split(const Digraph& d, VertexSet q);

/// Brute-force optimum, used as the default oracle for statement II.
QuasiKernelOracle brute_force_min_oracle();
/// Brute-force optimum of |N-[Q]|, the default oracle for statement III.
QuasiKernelOracle brute_force_large_oracle();

/// Small quasi-kernel of a sink-free digraph from an oracle for "size at most
/// n - alpha*s": returns the smaller of a minimal quasi-kernel and the
/// candidate built on D[Q2 u M]. Checks (1 + alpha)|Q| <= n.
/// OracleViolation if the oracle breaks its bound, PostconditionViolation if
/// the final bound fails.
SolveResult qk_via_ii_oracle(const Digraph& d, RationalAlpha alpha, const QuasiKernelOracle& oracle);

/// The weighted blowup used to turn a large quasi-kernel oracle into a small
/// one in the presence of sources.
struct SourcesReduction {
    /// D with every source that is not a sink reduced to its smallest out-arc.
    Digraph pruned;
    VertexSet sources;
    /// D[A], A = V - sources.
    InducedSubgraph rest;
    int copies = 0;
    /// n_a = copies * |N-(a) n sources| + 1 over D[A] (indices local to rest).
    std::vector<int> multiplicities;
    Blowup blowup;
};

SourcesReduction build_sources_reduction(const Digraph& d, int copies);

/// Multiplicity C = q*t + 1 for alpha = p/q and t = |A|: keeps the slack
/// (1 - alpha)t/C below 1/q, so one finite blowup suffices.
int sources_gadget_copies(RationalAlpha alpha, int rest_size);

using BlowupLargeOracle = std::function<VertexSet(const SourcesReduction&)>;

/// Quasi-kernel with |Q| <= n - alpha*s from an oracle returning, on the
/// blowup B, a quasi-kernel with |N-[Q_B]| >= alpha|V(B)|.
SolveResult qk_via_iii_oracle(const Digraph& d, RationalAlpha alpha, const BlowupLargeOracle& oracle);

nlohmann::json blowup_map_to_json(const BlowupMap& map);

}  // namespace qk

#endif  // QK_REDUCTIONS_HPP
