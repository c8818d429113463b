#include "qk/kpall.hpp"

#include <string>

#include "qk/error.hpp"
#include "qk/io.hpp"
#include "qk/reductions.hpp"

namespace qk {

namespace {

void require_kernel_perfect(const Digraph& d, VertexSet p, const char* what) {
    if (!is_kernel_perfect(d, p)) {
        throw InvalidInput(std::string(what) + ": " + p.to_string() + " is not kernel-perfect");
    }
}

void require_partition(const Digraph& d, const Partition& partition, const char* what) {
    if (!partition.is_partition_of(d.vertices())) {
        throw InvalidInput(std::string(what) + ": parts do not partition the vertex set");
    }
    for (VertexSet part : partition.parts) require_kernel_perfect(d, part, what);
}

// Some kernel of D[S] for a kernel-perfect S. Kernels are unions of false-twin
// classes, so the search runs on the twin quotient.
VertexSet kernel_of(const Digraph& d, VertexSet s, const char* what) {
    const InducedSubgraph sub = induced(d, s);
    const TwinQuotient tq = twin_quotient(sub.graph);
    const SolveResult k = find_kernel(tq.graph);
    if (!k.witness) {
        throw PostconditionViolation(std::string(what) + ": kernel-perfect set " + s.to_string() +
                                     " has no kernel");
    }
    const VertexSet kernel = sub.lift(tq.lift(*k.witness));
    if (!is_kernel(sub.graph, sub.restrict(kernel))) {
        throw PostconditionViolation(std::string(what) + ": lifted kernel fails its re-check");
    }
    return kernel;
}

}  // namespace

VertexSet extend_to_dominating_kp_set(const Digraph& d, VertexSet p) {
    require_kernel_perfect(d, p, "extend_to_dominating_kp_set");
    // A vertex skipped because it has an out-neighbour in the set keeps it, so
    // one ascending pass equals repeatedly adding the smallest candidate.
    for (int v = 0; v < d.order(); ++v) {
        if (!p.contains(v) && !d.out(v).intersects(p)) p.insert(v);
    }
    return p;
}

VertexSet quasi_kernel_covering(const Digraph& d, VertexSet p) {
    const VertexSet extended = extend_to_dominating_kp_set(d, p);
    const VertexSet q = kernel_of(d, extended, "quasi_kernel_covering");
    if (!is_quasi_kernel(d, q) || !p.subset_of(n_minus_closed(d, q)) || q.intersects(n_minus_set(d, p))) {
        throw PostconditionViolation("quasi_kernel_covering: " + q.to_string() + " fails for P = " +
                                     p.to_string());
    }
    return q;
}

Partition padded_partition(Partition partition) {
    while (partition.parts.size() < 2) partition.parts.emplace_back();
    return partition;
}

KpallTrace small_qk_from_partition(const Digraph& d, const Partition& partition) {
    if (!is_sink_free(d)) throw InvalidInput("small_qk_from_partition: digraph has sinks");
    require_partition(d, partition, "small_qk_from_partition");
    const Partition parts = padded_partition(partition);
    const int k = parts.size();
    const int n = d.order();

    KpallTrace t;
    t.k = k;
    t.first_part = extend_to_dominating_kp_set(d, parts.parts[0]);
    t.kernel = kernel_of(d, t.first_part, "small_qk_from_partition");

    const VertexSet kernel_in = n_minus_set(d, t.kernel);
    t.kernel_core = t.kernel;
    for (int v = n - 1; v >= 0; --v) {
        if (t.kernel_core.contains(v) && n_minus_set(d, t.kernel_core.without(v)) == kernel_in) {
            t.kernel_core.erase(v);
        }
    }

    t.primed.resize(k + 1);
    t.primed[0] = t.kernel - t.kernel_core;
    t.primed[1] = kernel_in | t.kernel_core;
    for (int i = 2; i <= k; ++i) t.primed[i] = parts.parts[i - 1] - t.first_part - kernel_in;
    t.w = d.vertices() - t.primed[1];

    Partition primed_check{t.primed, PartKind::kernel_perfect};
    if (!primed_check.is_partition_of(d.vertices())) {
        throw PostconditionViolation("small_qk_from_partition: V'_0..V'_k do not partition V");
    }

    for (int i = 2; i <= k; ++i) {
        const int hits = (n_minus_set(d, t.primed[i]) & t.primed[0]).size();
        if (std::int64_t{k} * hits < t.w.size()) continue;
        const InducedSubgraph sub = induced(d, t.w);
        const VertexSet q = sub.lift(quasi_kernel_covering(sub.graph, sub.restrict(t.primed[i])));
        t.covering_part = i;
        t.result = q | (t.kernel_core - n_minus_set(d, q));
        break;
    }
    // Vertices of V'_0 with an arc into V'_2 u ... u V'_k.
    if (!t.covering_part) t.result = (n_minus_set(d, t.w - t.primed[0]) & t.primed[0]) | t.kernel_core;

    if (!is_quasi_kernel(d, t.result)) {
        throw PostconditionViolation("small_qk_from_partition: " + t.result.to_string() +
                                     " is not a quasi-kernel");
    }
    if (std::int64_t{k} * t.result.size() > std::int64_t{k - 1} * n) {
        throw PostconditionViolation("small_qk_from_partition: |Q| = " + std::to_string(t.result.size()) +
                                     " exceeds (k-1)n/k for k = " + std::to_string(k));
    }
    return t;
}

SolveResult large_qk_from_partition(const Digraph& d, const Partition& partition) {
    if (!partition.is_partition_of(d.vertices())) {
        throw InvalidInput("large_qk_from_partition: parts do not partition the vertex set");
    }
    const Partition parts = padded_partition(partition);
    const int k = parts.size();
    VertexSet largest;
    for (VertexSet part : parts.parts)
        if (part.size() > largest.size()) largest = part;
    const VertexSet q = quasi_kernel_covering(d, largest);
    const int covered = n_minus_closed(d, q).size();
    if (std::int64_t{k} * covered < d.order()) {
        throw PostconditionViolation("large_qk_from_partition: |N-[Q]| = " + std::to_string(covered) +
                                     " below n/k for k = " + std::to_string(k));
    }
    return {q, covered, true};
}

SolveResult small_qk_with_sources(const Digraph& d, const Partition& partition) {
    require_partition(d, partition, "small_qk_with_sources");
    const Partition parts = padded_partition(partition);
    const RationalAlpha alpha(1, parts.size());
    // Kernel-perfect parts of D[A] stay kernel-perfect in its weighted blowup.
    auto oracle = [&](const SourcesReduction& red) {
        Partition lifted;
        for (VertexSet part : parts.parts) {
            lifted.parts.push_back(red.blowup.map.lift(red.rest.restrict(part)));
        }
        return *large_qk_from_partition(red.blowup.graph, lifted).witness;
    };
    return qk_via_iii_oracle(d, alpha, oracle);
}

nlohmann::json trace_to_json(const KpallTrace& trace) {
    nlohmann::json primed = nlohmann::json::array();
    for (VertexSet s : trace.primed) primed.push_back(vertex_set_to_json(s));
    nlohmann::json j = {
        {"k", trace.k},
        {"first_part", vertex_set_to_json(trace.first_part)},
        {"kernel", vertex_set_to_json(trace.kernel)},
        {"kernel_core", vertex_set_to_json(trace.kernel_core)},
        {"primed", primed},
        {"w", vertex_set_to_json(trace.w)},
        {"branch", trace.covering_part ? nlohmann::json(*trace.covering_part) : nlohmann::json("otherwise")},
        {"result", vertex_set_to_json(trace.result)},
    };
    return j;
}

}  // namespace qk
