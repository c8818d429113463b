#ifndef QK_DIGRAPH_HPP
#define QK_DIGRAPH_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qk/vertex_set.hpp"

namespace qk {

struct Arc {
    int from;
    int to;
    auto operator<=>(const Arc&) const = default;
};

/// Loop-free simple digraph on vertices 0..n-1 (n <= kMaxVertices).
/// Antiparallel pairs (2-cycles) are allowed. Values are immutable once built.
class Digraph {
public:
    /// The null digraph.
    Digraph() = default;

    /// Throws InvalidInput on out-of-range endpoints, self-loops or repeated arcs.
    static Digraph from_arcs(int n, std::span<const Arc> arcs);
    static Digraph from_arcs(int n, std::initializer_list<Arc> arcs) {
        return from_arcs(n, std::span<const Arc>(arcs.begin(), arcs.size()));
    }
    /// Row i is the out-neighbourhood of i. Throws InvalidInput on self-loops or bits >= n.
    static Digraph from_rows(int n, std::span<const std::uint64_t> out_rows);
    static Digraph edgeless(int n);

    int order() const { return n_; }
    VertexSet vertices() const { return VertexSet::full(n_); }
    bool has_arc(int u, int v) const { return (out_[u] >> v) & 1U; }
    int arc_count() const;
    std::vector<Arc> arcs() const;

    /// Unchecked row access; out_neighbors()/in_neighbors() validate the vertex.
    VertexSet out(int v) const { return VertexSet(out_[v]); }
    VertexSet in(int v) const { return VertexSet(in_[v]); }
    int out_degree(int v) const { return out(v).size(); }
    int in_degree(int v) const { return in(v).size(); }

    bool operator==(const Digraph& o) const;

private:
    void check_order(int n);

    int n_ = 0;
    std::array<std::uint64_t, kMaxVertices> out_{};
    std::array<std::uint64_t, kMaxVertices> in_{};
};

// Neighbourhoods -----------------------------------------------------------

/// N+(v); throws std::out_of_range on a bad vertex.
VertexSet out_neighbors(const Digraph& d, int v);
/// N-(v)
VertexSet in_neighbors(const Digraph& d, int v);
/// N+[v]
VertexSet out_neighbors_closed(const Digraph& d, int v);
/// N-[v]
VertexSet in_neighbors_closed(const Digraph& d, int v);

/// Union of the out-rows of S, without restricting to vertices outside S.
VertexSet out_union(const Digraph& d, VertexSet s);
/// Union of the in-rows of S, without restricting to vertices outside S.
VertexSet in_union(const Digraph& d, VertexSet s);

/// N-(S) = {u : dist(u, S) = 1}. Members of S are never included.
VertexSet n_minus_set(const Digraph& d, VertexSet s);
/// N+(S) = {v : dist(S, v) = 1}.
VertexSet n_plus_set(const Digraph& d, VertexSet s);
/// N-[S] = {u : dist(u, S) <= 1}.
VertexSet n_minus_closed(const Digraph& d, VertexSet s);
/// N+[S] = {v : dist(S, v) <= 1}.
VertexSet n_plus_closed(const Digraph& d, VertexSet s);
/// N--[S] = {u : dist(u, S) <= 2}.
VertexSet n_minus_minus_closed(const Digraph& d, VertexSet s);

// Distances ----------------------------------------------------------------

/// Length of a shortest directed path, or infinity.
class Distance {
public:
    enum class Kind { finite, infinite };

    static constexpr Distance infinite() { return Distance(Kind::infinite, 0); }
    static constexpr Distance of(int length) { return Distance(Kind::finite, length); }

    constexpr bool is_infinite() const { return kind_ == Kind::infinite; }
    constexpr Kind kind() const { return kind_; }
    /// Path length; meaningless when infinite.
    constexpr int length() const { return length_; }

    constexpr bool operator==(const Distance&) const = default;

private:
    constexpr Distance(Kind kind, int length) : kind_(kind), length_(length) {}
    Kind kind_;
    int length_;
};

Distance dist(const Digraph& d, int u, int v);

// Predicates ---------------------------------------------------------------

bool is_independent(const Digraph& d, VertexSet s);
/// D[S] has no directed cycle (2-cycles count as cycles).
bool is_acyclic_set(const Digraph& d, VertexSet s);
/// Sink: out-degree 0. Sink-free: every vertex has an out-neighbour. The null digraph is sink-free.
bool is_sink_free(const Digraph& d);
VertexSet sinks(const Digraph& d);
/// Sources (in-degree 0) that are not sinks (out-degree >= 1).
VertexSet sources_not_sinks(const Digraph& d);
/// True iff no directed cycle of odd length exists.
bool odd_dicycle_free(const Digraph& d);

// Constructions ------------------------------------------------------------

/// D[S] with S's vertices relabelled 0..|S|-1 in increasing order.
struct InducedSubgraph {
    Digraph graph;
    /// embedding[i] is the parent vertex of local vertex i.
    std::vector<int> embedding;

    /// Local set -> parent vertices.
    VertexSet lift(VertexSet local) const;
    /// Parent set -> local vertices (members outside the embedding are dropped).
    VertexSet restrict(VertexSet parent) const;
};

InducedSubgraph induced(const Digraph& d, VertexSet s);
/// Vertices of d2 are shifted by d1.order(). Throws InvalidInput past the vertex cap.
Digraph disjoint_union(const Digraph& d1, const Digraph& d2);
Digraph reverse(const Digraph& d);
/// Relabel so that vertex v becomes perm[v].
Digraph relabel(const Digraph& d, std::span<const int> perm);

}  // namespace qk

#endif  // QK_DIGRAPH_HPP
