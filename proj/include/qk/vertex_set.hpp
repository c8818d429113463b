#ifndef QK_VERTEX_SET_HPP
#define QK_VERTEX_SET_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace qk {

/// Hard cap on the number of vertices; a vertex set fits one machine word.
inline constexpr int kMaxVertices = 63;

/// Subset of {0, ..., n-1} stored as a bit row. Bit v is set iff v is a member.
class VertexSet {
public:
    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = void;
        using reference = int;

        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int) {
            iterator old = *this;
            ++*this;
            return old;
        }
        constexpr bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    constexpr VertexSet(std::initializer_list<int> vs) {
        for (int v : vs) bits_ |= std::uint64_t{1} << v;
    }

    static constexpr VertexSet full(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
    constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }
    /// Smallest member; undefined on the empty set.
    constexpr int front() const { return std::countr_zero(bits_); }
    /// Largest member; undefined on the empty set.
    constexpr int back() const { return 63 - std::countl_zero(bits_); }

    constexpr VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
    constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }
    constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator^(VertexSet o) const { return VertexSet(bits_ ^ o.bits_); }
    /// Set difference.
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

    constexpr bool operator==(const VertexSet&) const = default;
    /// Numeric order of the bit rows ("bit order"); used for deterministic tie-breaking.
    constexpr std::strong_ordering operator<=>(const VertexSet& o) const { return bits_ <=> o.bits_; }

    std::vector<int> to_vector() const { return {begin(), end()}; }
    /// "{0,2,5}"
    std::string to_string() const;

private:
    std::uint64_t bits_ = 0;
};

/// Orders by size first, then bit order.
constexpr bool size_then_bits_less(VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
}

}  // namespace qk

#endif  // QK_VERTEX_SET_HPP
