#include "qk/solvers.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "qk/error.hpp"

namespace qk {

namespace {

void check_exact_budget(const Digraph& d, const char* what) {
    if (d.order() > kMaxExactOrder) {
        throw BudgetExceeded(std::string(what) + ": exhaustive search needs n <= " +
                             std::to_string(kMaxExactOrder) + ", got " + std::to_string(d.order()));
    }
}

void independent_sets_from(const Digraph& d, VertexSet current, VertexSet candidates,
                           const std::function<void(VertexSet)>& fn) {
    fn(current);
    for (int v : candidates) {
        VertexSet later(candidates.bits() & ~((std::uint64_t{2} << v) - 1));
        independent_sets_from(d, current.with(v), later - d.out(v) - d.in(v), fn);
    }
}

// Does D[within] have a kernel? Branch on how the smallest uncovered vertex
// gets covered: itself, or one of its out-neighbours.
bool kernel_exists(const Digraph& d, VertexSet within, VertexSet kernel, VertexSet allowed) {
    VertexSet uncovered = within - kernel - in_union(d, kernel);
    if (uncovered.empty()) return true;
    const int u = uncovered.front();
    VertexSet options = (d.out(u) | VertexSet::single(u)) & allowed;
    for (int w : options) {
        VertexSet blocked = d.out(w) | d.in(w) | VertexSet::single(w);
        if (kernel_exists(d, within, kernel.with(w), allowed - blocked)) return true;
        // Later branches may assume w is out of the kernel.
        allowed.erase(w);
    }
    return false;
}

bool has_kernel_within(const Digraph& d, VertexSet within) {
    return kernel_exists(d, within, VertexSet{}, within);
}

// Lexicographic (by tie-break key) best quasi-kernel under a score to maximise.
template <class Score>
SolveResult best_quasi_kernel(const Digraph& d, const char* what, Score score) {
    check_exact_budget(d, what);
    SolveResult result;
    for_each_independent_set(d, d.vertices(), [&](VertexSet q) {
        if (!is_quasi_kernel(d, q)) return;
        const std::int64_t value = score(q);
        if (!result.witness || value > result.objective ||
            (value == result.objective && size_then_bits_less(q, *result.witness))) {
            result.witness = q;
            result.objective = value;
        }
    });
    if (!result.witness) {
        throw PostconditionViolation(std::string(what) + ": no quasi-kernel found in a digraph");
    }
    result.verified = is_quasi_kernel(d, *result.witness);
    return result;
}

template <class Pred>
bool partition_search(int n, int v, std::vector<VertexSet>& blocks, int limit, Pred& pred) {
    if (v == n) return true;
    const int used = static_cast<int>(blocks.size());
    for (int j = 0; j < used; ++j) {
        VertexSet grown = blocks[j].with(v);
        if (!pred(grown)) continue;
        std::swap(blocks[j], grown);
        if (partition_search(n, v + 1, blocks, limit, pred)) return true;
        std::swap(blocks[j], grown);
    }
    if (used < limit) {
        blocks.push_back(VertexSet::single(v));
        if (partition_search(n, v + 1, blocks, limit, pred)) return true;
        blocks.pop_back();
    }
    return false;
}

// Smallest partition into parts satisfying a hereditary predicate, searched
// as restricted-growth strings for k = 1, 2, ...
template <class Pred>
PartitionNumber min_partition(const Digraph& d, PartKind kind, Pred pred) {
    const int n = d.order();
    if (n > kMaxPartitionOrder) {
        throw BudgetExceeded("exact partition number needs n <= " + std::to_string(kMaxPartitionOrder));
    }
    PartitionNumber result;
    result.certificate.kind = kind;
    for (int k = 0; k <= n; ++k) {
        std::vector<VertexSet> blocks;
        if (n == 0 || (k > 0 && partition_search(n, 0, blocks, k, pred))) {
            result.value = static_cast<int>(blocks.size());
            result.certificate.parts = std::move(blocks);
            return result;
        }
    }
    throw PostconditionViolation("partition search failed with n parts");
}

}  // namespace

void for_each_independent_set(const Digraph& d, VertexSet within,
                              const std::function<void(VertexSet)>& fn) {
    independent_sets_from(d, VertexSet{}, within & d.vertices(), fn);
}

bool is_kernel(const Digraph& d, VertexSet k) {
    return k.subset_of(d.vertices()) && is_independent(d, k) && n_minus_closed(d, k) == d.vertices();
}

bool is_quasi_kernel(const Digraph& d, VertexSet q) {
    return q.subset_of(d.vertices()) && is_independent(d, q) &&
           n_minus_minus_closed(d, q) == d.vertices();
}

SolveResult find_kernel(const Digraph& d) {
    check_exact_budget(d, "find_kernel");
    SolveResult result;
    for_each_independent_set(d, d.vertices(), [&](VertexSet k) {
        if (n_minus_closed(d, k) != d.vertices()) return;
        if (!result.witness || size_then_bits_less(k, *result.witness)) result.witness = k;
    });
    if (result.witness) {
        result.objective = result.witness->size();
        result.verified = is_kernel(d, *result.witness);
    }
    return result;
}

SolveResult min_quasi_kernel(const Digraph& d) {
    SolveResult r = best_quasi_kernel(d, "min_quasi_kernel",
                                      [](VertexSet q) { return -std::int64_t{q.size()}; });
    r.objective = -r.objective;
    return r;
}

SolveResult max_large_quasi_kernel(const Digraph& d) {
    return best_quasi_kernel(d, "max_large_quasi_kernel",
                             [&](VertexSet q) { return std::int64_t{n_minus_closed(d, q).size()}; });
}

SolveResult max_sharp_quasi_kernel(const Digraph& d) {
    return best_quasi_kernel(d, "max_sharp_quasi_kernel",
                             [&](VertexSet q) { return doubled_sharp_score(d, q); });
}

VertexSet greedy_quasi_kernel(const Digraph& d) {
    // Iterative form of the recursion: peel N-[v] for the smallest remaining v,
    // then decide membership of the peeled vertices in reverse order.
    std::vector<int> peeled;
    VertexSet rest = d.vertices();
    while (!rest.empty()) {
        const int v = rest.front();
        peeled.push_back(v);
        rest -= d.in(v).with(v);
    }
    VertexSet q;
    for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
        if (!d.out(*it).intersects(q)) q.insert(*it);
    }
    return q;
}

VertexSet minimalize_quasi_kernel(const Digraph& d, VertexSet q) {
    if (!is_quasi_kernel(d, q)) throw InvalidInput("minimalize_quasi_kernel: input is not a quasi-kernel");
    for (int v = d.order() - 1; v >= 0; --v) {
        if (q.contains(v) && is_quasi_kernel(d, q.without(v))) q.erase(v);
    }
    return q;
}

bool is_minimal_quasi_kernel(const Digraph& d, VertexSet q) {
    if (!is_quasi_kernel(d, q)) return false;
    // Coverage only grows with Q, so checking single removals suffices.
    for (int v : q)
        if (is_quasi_kernel(d, q.without(v))) return false;
    return true;
}

VertexSet TwinQuotient::lift(VertexSet local) const {
    VertexSet r;
    for (int i : local) r |= classes[i];
    return r;
}

TwinQuotient twin_quotient(const Digraph& d) {
    TwinQuotient tq;
    std::map<std::pair<std::uint64_t, std::uint64_t>, int> index;
    std::vector<int> class_of(d.order());
    for (int v = 0; v < d.order(); ++v) {
        auto key = std::make_pair(d.out(v).bits(), d.in(v).bits());
        auto [it, inserted] = index.emplace(key, static_cast<int>(tq.classes.size()));
        if (inserted) tq.classes.emplace_back();
        tq.classes[it->second].insert(v);
        class_of[v] = it->second;
    }
    const int m = static_cast<int>(tq.classes.size());
    std::vector<std::uint64_t> rows(m);
    for (int i = 0; i < m; ++i) {
        for (int w : d.out(tq.classes[i].front())) rows[i] |= std::uint64_t{1} << class_of[w];
    }
    tq.graph = Digraph::from_rows(m, rows);
    return tq;
}

bool is_kernel_perfect(const Digraph& d, VertexSet s) {
    const TwinQuotient tq = twin_quotient(induced(d, s).graph);
    const Digraph& g = tq.graph;
    const int m = g.order();
    if (m > kMaxKernelPerfectSet) {
        throw BudgetExceeded("is_kernel_perfect: reduced set has " + std::to_string(m) +
                             " vertices (budget " + std::to_string(kMaxKernelPerfectSet) + ")");
    }
    // Subsets are visited before their supersets; stop at the first without a kernel.
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        if (!has_kernel_within(g, VertexSet(mask))) return false;
    }
    return true;
}

std::string to_string(PartKind kind) {
    switch (kind) {
        case PartKind::kernel_perfect: return "kernel-perfect";
        case PartKind::acyclic: return "acyclic";
        case PartKind::independent: return "independent";
    }
    return "?";
}

bool Partition::is_partition_of(VertexSet universe) const {
    VertexSet seen;
    for (VertexSet p : parts) {
        if (p.intersects(seen)) return false;
        seen |= p;
    }
    return seen == universe;
}

PartitionNumber kp_number(const Digraph& d) {
    if (d.order() > kMaxPartitionOrder) {
        throw BudgetExceeded("kp_number needs n <= " + std::to_string(kMaxPartitionOrder));
    }
    // 0 unknown, 1 kernel-perfect, 2 not.
    std::vector<std::uint8_t> memo(std::size_t{1} << d.order(), 0);
    std::function<bool(VertexSet)> kernel_perfect = [&](VertexSet s) -> bool {
        std::uint8_t& slot = memo[s.bits()];
        if (slot == 0) {
            bool ok = has_kernel_within(d, s);
            for (int v : s) {
                if (!ok) break;
                ok = kernel_perfect(s.without(v));
            }
            slot = ok ? 1 : 2;
        }
        return slot == 1;
    };
    return min_partition(d, PartKind::kernel_perfect, kernel_perfect);
}

PartitionNumber chromatic_number(const Digraph& d) {
    return min_partition(d, PartKind::independent, [&](VertexSet s) { return is_independent(d, s); });
}

PartitionNumber dichromatic_number(const Digraph& d) {
    return min_partition(d, PartKind::acyclic, [&](VertexSet s) { return is_acyclic_set(d, s); });
}

bool is_maximal_independent(const Digraph& d, VertexSet s) {
    if (!is_independent(d, s)) return false;
    VertexSet covered = s | out_union(d, s) | in_union(d, s);
    return covered == d.vertices();
}

VertexSet peeled_independent_set(const Digraph& d) {
    VertexSet rest = d.vertices();
    VertexSet chosen;
    while (!rest.empty()) {
        int pick = -1;
        for (int v : rest) {
            if ((d.in(v) & rest).size() >= (d.out(v) & rest).size()) {
                pick = v;
                break;
            }
        }
        if (pick < 0) {
            throw PostconditionViolation("peeled_independent_set: no vertex with in-degree >= out-degree");
        }
        chosen.insert(pick);
        rest -= d.out(pick) | d.in(pick) | VertexSet::single(pick);
    }
    if (!is_maximal_independent(d, chosen) || chosen.size() + 2 * n_minus_set(d, chosen).size() < d.order()) {
        throw PostconditionViolation("peeled_independent_set: result " + chosen.to_string() +
                                     " fails its re-check");
    }
    return chosen;
}

VertexSet heavy_independent_set(const Digraph& d) {
    const auto balance = [&](VertexSet s) { return n_minus_set(d, s).size() - n_plus_set(d, s).size(); };
    const VertexSet peeled = peeled_independent_set(d);
    if (balance(peeled) >= 0) return peeled;
    check_exact_budget(d, "heavy_independent_set");
    std::optional<VertexSet> best;
    int best_balance = 0;
    for_each_independent_set(d, d.vertices(), [&](VertexSet s) {
        if (!is_maximal_independent(d, s)) return;
        const int b = balance(s);
        if (!best || b > best_balance || (b == best_balance && size_then_bits_less(s, *best))) {
            best = s;
            best_balance = b;
        }
    });
    if (!best || best_balance < 0) {
        throw PostconditionViolation("heavy_independent_set: no maximal independent set has |N-(I)| >= |N+(I)|");
    }
    return *best;
}

}  // namespace qk
