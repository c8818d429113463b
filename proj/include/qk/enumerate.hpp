#ifndef QK_ENUMERATE_HPP
#define QK_ENUMERATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qk/digraph.hpp"

namespace qk {

/// Largest n for which an adjacency code fits in 64 bits.
inline constexpr int kMaxCodeOrder = 8;
inline constexpr int kMaxLabeledEnumerationOrder = 5;
inline constexpr int kMaxCanonicalEnumerationOrder = 6;

/// Number of ordered vertex pairs, n(n-1).
constexpr int pair_count(int n) { return n * (n - 1); }

/// Adjacency code: bit string of adjacency_hex() as an integer (n <= 8).
/// Labeled digraph number i of enumerate_digraphs(n, all) has code i.
std::uint64_t adjacency_code(const Digraph& d);
Digraph digraph_from_code(int n, std::uint64_t code);

/// Representative of d's isomorphism class with the smallest adjacency code
/// over all n! relabellings (branch and bound, n <= 8).
struct CanonicalForm {
    Digraph graph;
    std::uint64_t code;
    /// perm[v] is the position of original vertex v in the canonical graph.
    std::vector<int> perm;
};
CanonicalForm canonical_form(const Digraph& d);

enum class DigraphFilter { all, sink_free };

/// Indexed, splittable view of the digraphs on n vertices.
///
/// Labeled mode (n <= 5): index i is the digraph with adjacency code i, so all
/// 2^(n(n-1)) labelled digraphs appear exactly once. Canonical mode (n <= 6):
/// one representative per isomorphism class, the class's canonical form,
/// sorted by code. The filter is applied by the consumer through accepts(),
/// so index ranges stay stable and shards never depend on the filter.
class DigraphEnumeration {
public:
    /// Throws BudgetExceeded if n is too large for the mode.
    DigraphEnumeration(int n, DigraphFilter filter, bool canonical);

    int order() const { return n_; }
    DigraphFilter filter() const { return filter_; }
    bool canonical() const { return canonical_; }
    /// Size of the raw index space (before filtering).
    std::uint64_t size() const;
    Digraph at(std::uint64_t index) const;
    bool accepts(const Digraph& d) const;
    /// "labeled n=4 sink_free" etc.
    std::string describe() const;

    /// Visit every accepted digraph with index in [begin, end), in order.
    template <class Fn>
    void for_each(std::uint64_t begin, std::uint64_t end, Fn&& fn) const {
        for (std::uint64_t i = begin; i < end && i < size(); ++i) {
            Digraph d = at(i);
            if (accepts(d)) fn(i, d);
        }
    }
    template <class Fn>
    void for_each(Fn&& fn) const {
        for_each(0, size(), std::forward<Fn>(fn));
    }

private:
    int n_;
    DigraphFilter filter_;
    bool canonical_;
    std::vector<std::uint64_t> codes_;
};

/// Codes of all isomorphism classes on n vertices, ascending (n <= 6).
/// Built by extending each class on n-1 vertices with a new vertex in every
/// possible way and canonicalising.
std::vector<std::uint64_t> canonical_codes(int n);

}  // namespace qk

#endif  // QK_ENUMERATE_HPP
