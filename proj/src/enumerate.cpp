#include "qk/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_set>

#include "qk/error.hpp"

namespace qk {

std::uint64_t adjacency_code(const Digraph& d) {
    const int n = d.order();
    if (n > kMaxCodeOrder) throw BudgetExceeded("adjacency code needs n <= 8");
    std::uint64_t code = 0;
    for (int k = 1; k < n; ++k) {
        for (int i = 0; i < k; ++i) {
            code = (code << 1) | static_cast<std::uint64_t>(d.has_arc(i, k));
            code = (code << 1) | static_cast<std::uint64_t>(d.has_arc(k, i));
        }
    }
    return code;
}

Digraph digraph_from_code(int n, std::uint64_t code) {
    if (n < 0 || n > kMaxCodeOrder) throw BudgetExceeded("adjacency code needs n <= 8");
    std::vector<std::uint64_t> rows(n);
    int bit = pair_count(n);
    for (int k = 1; k < n; ++k) {
        for (int i = 0; i < k; ++i) {
            if ((code >> --bit) & 1U) rows[i] |= std::uint64_t{1} << k;
            if ((code >> --bit) & 1U) rows[k] |= std::uint64_t{1} << i;
        }
    }
    return Digraph::from_rows(n, rows);
}

namespace {

struct CanonicalSearch {
    const Digraph& d;
    int n;
    int length;
    std::vector<int> order;  // order[p] = original vertex placed at position p
    VertexSet used;
    std::uint64_t best = ~std::uint64_t{0};
    std::vector<int> best_order;

    void place(int p, std::uint64_t prefix) {
        if (p == n) {
            if (prefix < best || best_order.empty()) {
                best = prefix;
                best_order = order;
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used.contains(v)) continue;
            std::uint64_t next = prefix;
            for (int i = 0; i < p; ++i) {
                next = (next << 1) | static_cast<std::uint64_t>(d.has_arc(order[i], v));
                next = (next << 1) | static_cast<std::uint64_t>(d.has_arc(v, order[i]));
            }
            const int known = p * (p + 1);
            if (!best_order.empty() && next > (best >> (length - known))) continue;
            order[p] = v;
            used.insert(v);
            place(p + 1, next);
            used.erase(v);
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const Digraph& d) {
    const int n = d.order();
    if (n > kMaxCodeOrder) throw BudgetExceeded("canonical form needs n <= 8");
    CanonicalSearch search{d, n, pair_count(n), std::vector<int>(n), VertexSet{}, ~std::uint64_t{0}, {}};
    search.place(0, 0);
    std::vector<int> perm(n);
    for (int p = 0; p < n; ++p) perm[search.best_order[p]] = p;
    return {relabel(d, perm), n == 0 ? 0 : search.best, perm};
}

std::vector<std::uint64_t> canonical_codes(int n) {
    if (n < 0 || n > kMaxCanonicalEnumerationOrder) {
        throw BudgetExceeded("canonical enumeration supports n <= " +
                             std::to_string(kMaxCanonicalEnumerationOrder));
    }
    static std::mutex mutex;
    static std::map<int, std::vector<std::uint64_t>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    std::vector<std::uint64_t> result;
    if (n <= 1) {
        result = {0};
    } else {
        const int m = n - 1;
        std::unordered_set<std::uint64_t> seen;
        for (std::uint64_t base_code : canonical_codes(m)) {
            Digraph base = digraph_from_code(m, base_code);
            std::vector<std::uint64_t> rows(n);
            for (int v = 0; v < m; ++v) rows[v] = base.out(v).bits();
            for (std::uint64_t outs = 0; outs < (std::uint64_t{1} << m); ++outs) {
                for (std::uint64_t ins = 0; ins < (std::uint64_t{1} << m); ++ins) {
                    rows[m] = outs;
                    for (int v = 0; v < m; ++v) {
                        rows[v] = base.out(v).bits() | (((ins >> v) & 1U) << m);
                    }
                    seen.insert(canonical_form(Digraph::from_rows(n, rows)).code);
                }
            }
        }
        result.assign(seen.begin(), seen.end());
        std::sort(result.begin(), result.end());
    }
    std::lock_guard lock(mutex);
    cache.emplace(n, result);
    return result;
}

DigraphEnumeration::DigraphEnumeration(int n, DigraphFilter filter, bool canonical)
    : n_(n), filter_(filter), canonical_(canonical) {
    if (n < 0) throw InvalidInput("negative vertex count");
    if (canonical) {
        codes_ = canonical_codes(n);
    } else if (n > kMaxLabeledEnumerationOrder) {
        throw BudgetExceeded("labeled enumeration supports n <= " +
                             std::to_string(kMaxLabeledEnumerationOrder) + "; use canonical mode");
    }
}

std::uint64_t DigraphEnumeration::size() const {
    if (canonical_) return codes_.size();
    return std::uint64_t{1} << pair_count(n_);
}

Digraph DigraphEnumeration::at(std::uint64_t index) const {
    return digraph_from_code(n_, canonical_ ? codes_.at(index) : index);
}

bool DigraphEnumeration::accepts(const Digraph& d) const {
    return filter_ == DigraphFilter::all || is_sink_free(d);
}

std::string DigraphEnumeration::describe() const {
    std::string s = canonical_ ? "canonical" : "labeled";
    s += " n=" + std::to_string(n_);
    s += filter_ == DigraphFilter::sink_free ? " sink_free" : " all";
    return s;
}

}  // namespace qk
