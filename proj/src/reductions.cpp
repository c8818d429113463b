#include "qk/reductions.hpp"

#include <numeric>
#include <string>

#include "qk/error.hpp"

namespace qk {

namespace {

void check_cap(std::int64_t n, const char* what) {
    if (n > kMaxVertices) {
        throw InvalidInput(std::string(what) + ": result would have " + std::to_string(n) +
                           " vertices (cap " + std::to_string(kMaxVertices) + ")");
    }
}

std::string kind_name(BlowupKind kind) {
    switch (kind) {
        case BlowupKind::source_gadget: return "source_gadget";
        case BlowupKind::weighted: return "weighted";
        case BlowupKind::c3: return "c3";
    }
    return "?";
}

}  // namespace

VertexSet BlowupMap::lift(VertexSet base) const {
    VertexSet r;
    for (int v : base) r |= blocks[v];
    return r;
}

int BlowupMap::owner(int x) const {
    for (int v = 0; v < base_n; ++v)
        if (blocks[v].contains(x)) return v;
    throw InvalidInput("vertex " + std::to_string(x) + " not in any block");
}

Blowup add_source_gadget(const Digraph& d, int copies) {
    if (copies < 1) throw InvalidInput("source gadget multiplicity must be >= 1");
    const int n = d.order();
    check_cap(static_cast<std::int64_t>(n) * (copies + 1), "add_source_gadget");
    const int total = n * (copies + 1);
    std::vector<std::uint64_t> rows(total);
    Blowup b;
    b.map.kind = BlowupKind::source_gadget;
    b.map.base_n = n;
    b.map.blocks.resize(n);
    for (int v = 0; v < n; ++v) {
        rows[v] = d.out(v).bits();
        b.map.blocks[v].insert(v);
        for (int j = 0; j < copies; ++j) {
            const int x = n + v * copies + j;
            rows[x] = VertexSet::single(v).bits();
            b.map.blocks[v].insert(x);
        }
    }
    b.graph = Digraph::from_rows(total, rows);
    return b;
}

Blowup weighted_blowup(const Digraph& d, std::span<const int> multiplicities) {
    const int n = d.order();
    if (static_cast<int>(multiplicities.size()) != n) {
        throw InvalidInput("weighted_blowup: one multiplicity per vertex required");
    }
    std::int64_t total = 0;
    for (int m : multiplicities) {
        if (m < 1) throw InvalidInput("weighted_blowup: multiplicities must be >= 1");
        total += m;
    }
    check_cap(total, "weighted_blowup");
    Blowup b;
    b.map.kind = BlowupKind::weighted;
    b.map.base_n = n;
    b.map.blocks.resize(n);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        for (int j = 0; j < multiplicities[v]; ++j) b.map.blocks[v].insert(next++);
    }
    std::vector<std::uint64_t> rows(total);
    for (int v = 0; v < n; ++v) {
        const VertexSet targets = b.map.lift(d.out(v));
        for (int x : b.map.blocks[v]) rows[x] = targets.bits();
    }
    b.graph = Digraph::from_rows(static_cast<int>(total), rows);
    return b;
}

Blowup c3_blowup(const Digraph& d) {
    const int n = d.order();
    check_cap(3 * static_cast<std::int64_t>(n), "c3_blowup");
    Blowup b;
    b.map.kind = BlowupKind::c3;
    b.map.base_n = n;
    for (int v = 0; v < n; ++v) b.map.blocks.push_back({3 * v, 3 * v + 1, 3 * v + 2});
    std::vector<std::uint64_t> rows(3 * n);
    for (int v = 0; v < n; ++v) {
        const VertexSet targets = b.map.lift(d.out(v));
        for (int i = 0; i < 3; ++i) {
            rows[3 * v + i] = (targets | VertexSet::single(3 * v + (i + 1) % 3)).bits();
        }
    }
    b.graph = Digraph::from_rows(3 * n, rows);
    return b;
}

VertexSet project_blowup_qk(const Digraph& base, const Blowup& blowup, VertexSet q_prime) {
    if (!is_quasi_kernel(blowup.graph, q_prime)) {
        throw InvalidInput("project_blowup_qk: " + q_prime.to_string() + " is not a quasi-kernel of the blowup");
    }
    VertexSet q;
    if (blowup.map.kind == BlowupKind::source_gadget) {
        q = q_prime & base.vertices();
    } else {
        for (int v = 0; v < blowup.map.base_n; ++v) {
            const VertexSet hit = blowup.map.blocks[v] & q_prime;
            if (hit.empty()) continue;
            if (blowup.map.kind == BlowupKind::c3 && hit.size() != 1) {
                throw PostconditionViolation("project_blowup_qk: triangle block of vertex " +
                                             std::to_string(v) + " meets Q' in " +
                                             std::to_string(hit.size()) + " vertices");
            }
            q.insert(v);
        }
    }
    if (!is_quasi_kernel(base, q)) {
        throw PostconditionViolation("project_blowup_qk: projection " + q.to_string() +
                                     " is not a quasi-kernel of the base digraph");
    }
    return q;
}

bool blocks_uniform(const BlowupMap& map, VertexSet s) {
    for (VertexSet block : map.blocks) {
        const VertexSet hit = block & s;
        if (!hit.empty() && hit != block) return false;
    }
    return true;
}

namespace {

VertexSet peel(const QuasiKernelOracle& solver, const Digraph& d) {
    const VertexSet sink_set = sinks(d);
    if (sink_set.empty()) {
        const VertexSet q = solver(d);
        if (!is_quasi_kernel(d, q)) {
            throw OracleViolation("sink_peel: oracle returned " + q.to_string() +
                                  ", not a quasi-kernel of a sink-free digraph");
        }
        return q;
    }
    const int v = sink_set.front();
    const InducedSubgraph rest = induced(d, d.vertices() - d.in(v).with(v));
    return rest.lift(peel(solver, rest.graph)).with(v);
}

}  // namespace

SolveResult sink_peel(const QuasiKernelOracle& sink_free_solver, const Digraph& d, PeelObjective objective) {
    const VertexSet q = peel(sink_free_solver, d);
    if (!is_quasi_kernel(d, q)) {
        throw PostconditionViolation("sink_peel: result " + q.to_string() + " is not a quasi-kernel");
    }
    SolveResult r;
    r.witness = q;
    r.objective = objective == PeelObjective::large ? n_minus_closed(d, q).size() : doubled_sharp_score(d, q);
    r.verified = true;
    return r;
}

MatchingSplit matching_split(const Digraph& d, VertexSet q) {
    if (!is_sink_free(d)) throw InvalidInput("matching_split: digraph has sinks");
    if (!is_minimal_quasi_kernel(d, q)) {
        throw InvalidInput("matching_split: " + q.to_string() + " is not a minimal quasi-kernel");
    }
    MatchingSplit split;
    split.q = q;
    split.n = n_minus_set(d, q);
    split.m = d.vertices() - q - split.n;
    for (int u : split.n) {
        const VertexSet free = (d.out(u) & q) - split.q1;
        if (free.empty()) continue;
        split.q1.insert(free.front());
        split.matching.push_back({u, free.front()});
    }
    split.q2 = q - split.q1;

    for (int u : split.n) {
        if (!d.out(u).intersects(split.q1)) {
            throw PostconditionViolation("matching_split: vertex " + std::to_string(u) +
                                         " of N has no out-neighbour in Q1");
        }
    }
    const VertexSet side = split.q2 | split.m;
    for (int w : split.q2) {
        if (!d.out(w).subset_of(split.m)) {
            throw PostconditionViolation("matching_split: vertex " + std::to_string(w) +
                                         " of Q2 has an out-neighbour outside M");
        }
        if (d.in(w).intersects(side) || !d.out(w).intersects(side)) {
            throw PostconditionViolation("matching_split: vertex " + std::to_string(w) +
                                         " is not a non-sink source of D[Q2 u M]");
        }
    }
    return split;
}

QuasiKernelOracle brute_force_min_oracle() {
    return [](const Digraph& d) { return *min_quasi_kernel(d).witness; };
}

QuasiKernelOracle brute_force_large_oracle() {
    return [](const Digraph& d) { return *max_large_quasi_kernel(d).witness; };
}

SolveResult qk_via_ii_oracle(const Digraph& d, RationalAlpha alpha, const QuasiKernelOracle& oracle) {
    if (!is_sink_free(d)) throw InvalidInput("qk_via_ii_oracle: digraph has sinks");
    const std::int64_t p = alpha.p();
    const std::int64_t q = alpha.q();

    const VertexSet minimal = minimalize_quasi_kernel(d, greedy_quasi_kernel(d));
    const MatchingSplit split = matching_split(d, minimal);

    const InducedSubgraph side = induced(d, split.q2 | split.m);
    const VertexSet local = oracle(side.graph);
    const std::int64_t side_n = side.graph.order();
    const std::int64_t side_s = sources_not_sinks(side.graph).size();
    if (!is_quasi_kernel(side.graph, local) || q * local.size() > q * side_n - p * side_s) {
        throw OracleViolation("qk_via_ii_oracle: oracle output " + local.to_string() +
                              " breaks |Q| <= n - alpha*s on D[Q2 u M]");
    }
    const VertexSet lifted = side.lift(local);
    const VertexSet candidate = lifted | (split.q1 - n_minus_set(d, lifted));
    if (!is_quasi_kernel(d, candidate)) {
        throw PostconditionViolation("qk_via_ii_oracle: combined candidate " + candidate.to_string() +
                                     " is not a quasi-kernel");
    }
    const VertexSet best = candidate.size() < minimal.size() ? candidate : minimal;
    if ((q + p) * best.size() > q * d.order()) {
        throw PostconditionViolation("qk_via_ii_oracle: |Q| = " + std::to_string(best.size()) +
                                     " exceeds n/(1+alpha) for alpha " + alpha.to_string());
    }
    return {best, best.size(), true};
}

SourcesReduction build_sources_reduction(const Digraph& d, int copies) {
    if (copies < 1) throw InvalidInput("sources reduction multiplicity must be >= 1");
    SourcesReduction red;
    red.copies = copies;
    red.sources = sources_not_sinks(d);
    std::vector<std::uint64_t> rows(d.order());
    for (int v = 0; v < d.order(); ++v) {
        rows[v] = red.sources.contains(v) ? VertexSet::single(d.out(v).front()).bits() : d.out(v).bits();
    }
    red.pruned = Digraph::from_rows(d.order(), rows);
    red.rest = induced(red.pruned, d.vertices() - red.sources);
    std::int64_t total = 0;
    for (int a : red.rest.embedding) {
        const std::int64_t m = std::int64_t{copies} * (red.pruned.in(a) & red.sources).size() + 1;
        check_cap(total += m, "sources reduction blowup");
        red.multiplicities.push_back(static_cast<int>(m));
    }
    red.blowup = weighted_blowup(red.rest.graph, red.multiplicities);
    return red;
}

int sources_gadget_copies(RationalAlpha alpha, int rest_size) {
    return static_cast<int>(alpha.q() * rest_size + 1);
}

SolveResult qk_via_iii_oracle(const Digraph& d, RationalAlpha alpha, const BlowupLargeOracle& oracle) {
    const std::int64_t p = alpha.p();
    const std::int64_t q = alpha.q();
    const VertexSet sources = sources_not_sinks(d);
    const int copies = sources_gadget_copies(alpha, d.order() - sources.size());
    const SourcesReduction red = build_sources_reduction(d, copies);
    const Digraph& b = red.blowup.graph;
    const Digraph& rest = red.rest.graph;

    const VertexSet q_b = oracle(red);
    if (!is_quasi_kernel(b, q_b) || q * n_minus_closed(b, q_b).size() < p * b.order()) {
        throw OracleViolation("qk_via_iii_oracle: oracle output " + q_b.to_string() +
                              " breaks |N-[Q]| >= alpha*n on the blowup");
    }
    // Projecting and lifting back only enlarges N-[Q_B] and makes it block-uniform.
    const VertexSet q_rest = project_blowup_qk(rest, red.blowup, q_b);
    const VertexSet uncovered = red.rest.lift(rest.vertices() - n_minus_closed(rest, q_rest));

    VertexSet result = red.rest.lift(q_rest);
    for (int s : sources) {
        if (uncovered.contains(red.pruned.out(s).front())) result.insert(s);
    }
    // A kept source with another arc into the result is already one step away.
    for (int s : result & sources) {
        if (d.out(s).intersects(result)) result.erase(s);
    }
    const std::int64_t n = d.order();
    if (!is_quasi_kernel(d, result)) {
        throw PostconditionViolation("qk_via_iii_oracle: " + result.to_string() + " is not a quasi-kernel");
    }
    if (q * result.size() > q * n - p * sources.size()) {
        throw PostconditionViolation("qk_via_iii_oracle: |Q| = " + std::to_string(result.size()) +
                                     " exceeds n - alpha*s for alpha " + alpha.to_string());
    }
    return {result, result.size(), true};
}

nlohmann::json blowup_map_to_json(const BlowupMap& map) {
    nlohmann::json blocks = nlohmann::json::array();
    for (VertexSet block : map.blocks) blocks.push_back(block.to_vector());
    return {{"kind", kind_name(map.kind)}, {"base_n", map.base_n}, {"blocks", blocks}};
}

}  // namespace qk
