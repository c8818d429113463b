#include "qk/digraph.hpp"

#include <stdexcept>
#include <string>

#include "qk/error.hpp"

namespace qk {

std::string VertexSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for (int v : *this) {
        if (!first) out += ',';
        out += std::to_string(v);
        first = false;
    }
    out += '}';
    return out;
}

void Digraph::check_order(int n) {
    if (n < 0 || n > kMaxVertices) {
        throw InvalidInput("vertex count " + std::to_string(n) + " outside [0, " +
                           std::to_string(kMaxVertices) + "]");
    }
    n_ = n;
}

Digraph Digraph::from_arcs(int n, std::span<const Arc> arcs) {
    Digraph d;
    d.check_order(n);
    for (const Arc& a : arcs) {
        if (a.from < 0 || a.from >= n || a.to < 0 || a.to >= n) {
            throw InvalidInput("arc " + std::to_string(a.from) + "->" + std::to_string(a.to) +
                               " out of range for n=" + std::to_string(n));
        }
        if (a.from == a.to) throw InvalidInput("self-loop at vertex " + std::to_string(a.from));
        if (d.has_arc(a.from, a.to)) {
            throw InvalidInput("duplicate arc " + std::to_string(a.from) + "->" + std::to_string(a.to));
        }
        d.out_[a.from] |= std::uint64_t{1} << a.to;
        d.in_[a.to] |= std::uint64_t{1} << a.from;
    }
    return d;
}

Digraph Digraph::from_rows(int n, std::span<const std::uint64_t> out_rows) {
    Digraph d;
    d.check_order(n);
    if (static_cast<int>(out_rows.size()) != n) throw InvalidInput("row count does not match n");
    const std::uint64_t mask = VertexSet::full(n).bits();
    for (int u = 0; u < n; ++u) {
        std::uint64_t row = out_rows[u];
        if (row & ~mask) throw InvalidInput("row " + std::to_string(u) + " has bits beyond n");
        if ((row >> u) & 1U) throw InvalidInput("self-loop at vertex " + std::to_string(u));
        d.out_[u] = row;
        for (int v : VertexSet(row)) d.in_[v] |= std::uint64_t{1} << u;
    }
    return d;
}

Digraph Digraph::edgeless(int n) {
    Digraph d;
    d.check_order(n);
    return d;
}

int Digraph::arc_count() const {
    int m = 0;
    for (int v = 0; v < n_; ++v) m += out(v).size();
    return m;
}

std::vector<Arc> Digraph::arcs() const {
    std::vector<Arc> result;
    for (int u = 0; u < n_; ++u)
        for (int v : out(u)) result.push_back({u, v});
    return result;
}

bool Digraph::operator==(const Digraph& o) const {
    if (n_ != o.n_) return false;
    for (int v = 0; v < n_; ++v)
        if (out_[v] != o.out_[v]) return false;
    return true;
}

namespace {

void check_vertex(const Digraph& d, int v) {
    if (v < 0 || v >= d.order()) {
        throw std::out_of_range("vertex " + std::to_string(v) + " not in digraph of order " +
                                std::to_string(d.order()));
    }
}

}  // namespace

VertexSet out_neighbors(const Digraph& d, int v) {
    check_vertex(d, v);
    return d.out(v);
}

VertexSet in_neighbors(const Digraph& d, int v) {
    check_vertex(d, v);
    return d.in(v);
}

VertexSet out_neighbors_closed(const Digraph& d, int v) { return out_neighbors(d, v).with(v); }

VertexSet in_neighbors_closed(const Digraph& d, int v) { return in_neighbors(d, v).with(v); }

VertexSet out_union(const Digraph& d, VertexSet s) {
    VertexSet r;
    for (int v : s) r |= d.out(v);
    return r;
}

VertexSet in_union(const Digraph& d, VertexSet s) {
    VertexSet r;
    for (int v : s) r |= d.in(v);
    return r;
}

VertexSet n_minus_set(const Digraph& d, VertexSet s) { return in_union(d, s) - s; }

VertexSet n_plus_set(const Digraph& d, VertexSet s) { return out_union(d, s) - s; }

VertexSet n_minus_closed(const Digraph& d, VertexSet s) { return in_union(d, s) | s; }

VertexSet n_plus_closed(const Digraph& d, VertexSet s) { return out_union(d, s) | s; }

VertexSet n_minus_minus_closed(const Digraph& d, VertexSet s) {
    return n_minus_closed(d, n_minus_closed(d, s));
}

Distance dist(const Digraph& d, int u, int v) {
    check_vertex(d, u);
    check_vertex(d, v);
    VertexSet seen = VertexSet::single(u);
    VertexSet frontier = seen;
    for (int length = 0; !frontier.empty(); ++length) {
        if (frontier.contains(v)) return Distance::of(length);
        frontier = out_union(d, frontier) - seen;
        seen |= frontier;
    }
    return Distance::infinite();
}

bool is_independent(const Digraph& d, VertexSet s) {
    for (int v : s)
        if (d.out(v).intersects(s)) return false;
    return true;
}

bool is_acyclic_set(const Digraph& d, VertexSet s) {
    // Repeatedly strip vertices with no out-neighbour left in the set.
    VertexSet rest = s;
    for (bool changed = true; changed && !rest.empty();) {
        changed = false;
        for (int v : rest) {
            if (!d.out(v).intersects(rest)) {
                rest.erase(v);
                changed = true;
            }
        }
    }
    return rest.empty();
}

bool is_sink_free(const Digraph& d) { return sinks(d).empty(); }

VertexSet sinks(const Digraph& d) {
    VertexSet r;
    for (int v = 0; v < d.order(); ++v)
        if (d.out(v).empty()) r.insert(v);
    return r;
}

VertexSet sources_not_sinks(const Digraph& d) {
    VertexSet r;
    for (int v = 0; v < d.order(); ++v)
        if (d.in(v).empty() && !d.out(v).empty()) r.insert(v);
    return r;
}

bool odd_dicycle_free(const Digraph& d) {
    const int n = d.order();
    std::array<std::uint64_t, kMaxVertices> reach{};
    for (int v = 0; v < n; ++v) {
        VertexSet seen = VertexSet::single(v);
        VertexSet frontier = seen;
        while (!frontier.empty()) {
            frontier = out_union(d, frontier) - seen;
            seen |= frontier;
        }
        reach[v] = seen.bits();
    }
    for (int v = 0; v < n; ++v) {
        // Strong component of v.
        VertexSet scc;
        for (int u : VertexSet(reach[v]))
            if (VertexSet(reach[u]).contains(v)) scc.insert(u);
        if (scc.front() != v) continue;
        // Walks inside the component by parity; an odd closed walk through v
        // exists iff some component vertex is reachable at both parities.
        VertexSet even = VertexSet::single(v);
        VertexSet odd;
        for (bool changed = true; changed;) {
            VertexSet next_odd = odd | (out_union(d, even) & scc);
            VertexSet next_even = even | (out_union(d, odd) & scc);
            changed = next_odd != odd || next_even != even;
            odd = next_odd;
            even = next_even;
        }
        if (odd.contains(v)) return false;
    }
    return true;
}

VertexSet InducedSubgraph::lift(VertexSet local) const {
    VertexSet r;
    for (int i : local) r.insert(embedding[i]);
    return r;
}

VertexSet InducedSubgraph::restrict(VertexSet parent) const {
    VertexSet r;
    for (int i = 0; i < static_cast<int>(embedding.size()); ++i)
        if (parent.contains(embedding[i])) r.insert(i);
    return r;
}

InducedSubgraph induced(const Digraph& d, VertexSet s) {
    s &= d.vertices();
    InducedSubgraph result;
    result.embedding = s.to_vector();
    const int k = static_cast<int>(result.embedding.size());
    std::vector<std::uint64_t> rows(k);
    for (int i = 0; i < k; ++i) {
        VertexSet out = d.out(result.embedding[i]);
        for (int j = 0; j < k; ++j)
            if (out.contains(result.embedding[j])) rows[i] |= std::uint64_t{1} << j;
    }
    result.graph = Digraph::from_rows(k, rows);
    return result;
}

Digraph disjoint_union(const Digraph& d1, const Digraph& d2) {
    const int n = d1.order() + d2.order();
    if (n > kMaxVertices) {
        throw InvalidInput("disjoint union would have " + std::to_string(n) + " vertices (cap " +
                           std::to_string(kMaxVertices) + ")");
    }
    std::vector<std::uint64_t> rows(n);
    for (int v = 0; v < d1.order(); ++v) rows[v] = d1.out(v).bits();
    for (int v = 0; v < d2.order(); ++v) rows[d1.order() + v] = d2.out(v).bits() << d1.order();
    return Digraph::from_rows(n, rows);
}

Digraph reverse(const Digraph& d) {
    std::vector<std::uint64_t> rows(d.order());
    for (int v = 0; v < d.order(); ++v) rows[v] = d.in(v).bits();
    return Digraph::from_rows(d.order(), rows);
}

Digraph relabel(const Digraph& d, std::span<const int> perm) {
    const int n = d.order();
    if (static_cast<int>(perm.size()) != n) throw InvalidInput("permutation size does not match n");
    std::vector<std::uint64_t> rows(n);
    for (int u = 0; u < n; ++u)
        for (int v : d.out(u)) rows[perm[u]] |= std::uint64_t{1} << perm[v];
    return Digraph::from_rows(n, rows);
}

}  // namespace qk
