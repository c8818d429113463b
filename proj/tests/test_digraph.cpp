#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "qk/digraph.hpp"
#include "qk/enumerate.hpp"
#include "qk/error.hpp"

using namespace qk;

namespace {

Digraph cycle(int n) {
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n});
    return Digraph::from_arcs(n, arcs);
}

const Digraph c2 = Digraph::from_arcs(2, {{0, 1}, {1, 0}});
const Digraph c3 = cycle(3);
const Digraph c4 = cycle(4);

}  // namespace

TEST_CASE("vertex sets") {
    VertexSet s{0, 2, 5};
    CHECK(s.size() == 3);
    CHECK(s.contains(2));
    CHECK_FALSE(s.contains(1));
    CHECK(s.front() == 0);
    CHECK(s.back() == 5);
    CHECK(s.to_string() == "{0,2,5}");
    CHECK(s.to_vector() == std::vector<int>{0, 2, 5});
    CHECK((s - VertexSet{2}) == VertexSet{0, 5});
    CHECK(VertexSet::full(3) == VertexSet{0, 1, 2});
    CHECK(VertexSet{}.to_string() == "{}");
    CHECK(size_then_bits_less(VertexSet{3}, VertexSet{0, 1}));
    CHECK(size_then_bits_less(VertexSet{0, 2}, VertexSet{1, 2}));
}

TEST_CASE("construction validates arcs") {
    CHECK_THROWS_AS(Digraph::from_arcs(2, {{0, 0}}), InvalidInput);
    CHECK_THROWS_AS(Digraph::from_arcs(2, {{0, 2}}), InvalidInput);
    CHECK_THROWS_AS(Digraph::from_arcs(2, {{0, 1}, {0, 1}}), InvalidInput);
    CHECK_THROWS_AS(Digraph::edgeless(kMaxVertices + 1), InvalidInput);
    CHECK(Digraph::edgeless(kMaxVertices).order() == kMaxVertices);
    CHECK(c4.arc_count() == 4);
    CHECK(c2.has_arc(0, 1));
    CHECK(c2.has_arc(1, 0));
}

TEST_CASE("neighbourhood examples") {
    CHECK(in_neighbors(c4, 0) == VertexSet{3});
    CHECK(in_neighbors(Digraph::edgeless(3), 1).empty());
    CHECK(in_neighbors_closed(c2, 0) == VertexSet{0, 1});
    CHECK(out_neighbors(c4, 0) == VertexSet{1});
    CHECK_THROWS_AS(in_neighbors(c4, 4), std::out_of_range);
    CHECK(n_minus_minus_closed(c4, VertexSet{0}) == VertexSet{0, 2, 3});
    CHECK(n_minus_closed(c4, c4.vertices()) == c4.vertices());
    CHECK(n_minus_set(c4, VertexSet{0, 2}) == VertexSet{1, 3});
}

TEST_CASE("distances") {
    CHECK(dist(c4, 1, 0) == Distance::of(3));
    CHECK(dist(c4, 2, 2) == Distance::of(0));
    CHECK(dist(Digraph::edgeless(2), 0, 1).is_infinite());
}

TEST_CASE("sinks and sources") {
    CHECK(is_sink_free(c3));
    const Digraph star = Digraph::from_arcs(3, {{1, 0}, {2, 0}});
    CHECK(sources_not_sinks(star) == VertexSet{1, 2});
    CHECK(sinks(star) == VertexSet{0});
    CHECK_FALSE(is_sink_free(star));
    CHECK(is_sink_free(Digraph()));
    // An isolated vertex is both a sink and a source, so it is not counted.
    CHECK(sources_not_sinks(Digraph::edgeless(2)).empty());
}

TEST_CASE("constructions") {
    const InducedSubgraph sub = induced(c4, VertexSet{0, 1});
    CHECK(sub.graph == Digraph::from_arcs(2, {{0, 1}}));
    const InducedSubgraph sub2 = induced(c4, VertexSet{1, 3});
    CHECK(sub2.embedding == std::vector<int>{1, 3});
    CHECK(sub2.lift(VertexSet{1}) == VertexSet{3});
    CHECK(sub2.restrict(VertexSet{0, 3}) == VertexSet{1});

    const Digraph u = disjoint_union(c2, c2);
    CHECK(u.order() == 4);
    CHECK(u.arc_count() == 4);
    CHECK(u.has_arc(2, 3));
    CHECK_THROWS_AS(disjoint_union(Digraph::edgeless(40), Digraph::edgeless(40)), InvalidInput);

    CHECK(reverse(c3).has_arc(1, 0));
    const std::vector<int> perm{1, 2, 3, 0};
    CHECK(relabel(c4, perm) == c4);
}

TEST_CASE("odd dicycles") {
    CHECK_FALSE(odd_dicycle_free(c3));
    CHECK(odd_dicycle_free(c4));
    CHECK(odd_dicycle_free(Digraph::from_arcs(3, {{0, 1}, {1, 2}, {0, 2}})));
    CHECK(odd_dicycle_free(c2));
    // A 2-cycle and a 4-cycle sharing a vertex with a chord giving a 3-cycle.
    CHECK_FALSE(odd_dicycle_free(Digraph::from_arcs(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 0}})));
}

TEST_CASE("acyclic sets") {
    CHECK_FALSE(is_acyclic_set(c3, c3.vertices()));
    CHECK(is_acyclic_set(c3, VertexSet{0, 1}));
    CHECK_FALSE(is_acyclic_set(c2, c2.vertices()));
    CHECK(is_independent(c4, VertexSet{0, 2}));
    CHECK_FALSE(is_independent(c4, VertexSet{0, 1}));
}

TEST_CASE("neighbourhoods agree with BFS oracle on all digraphs n <= 4") {
    for (int n = 0; n <= 4; ++n) {
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << pair_count(n)); ++code) {
            const Digraph d = digraph_from_code(n, code);
            const Digraph r = reverse(d);
            for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
                const VertexSet s(m);
                REQUIRE(n_minus_set(d, s).bits() == oracle::n_minus(d, m));
                REQUIRE(n_minus_closed(d, s).bits() == oracle::n_minus_closed(d, m));
                REQUIRE(n_minus_minus_closed(d, s).bits() == oracle::n_minus_minus_closed(d, m));
                REQUIRE(n_plus_set(d, s).bits() == oracle::n_plus(d, m));
                REQUIRE(n_minus_minus_closed(d, s) == n_minus_closed(d, n_minus_closed(d, s)));
                REQUIRE(n_minus_set(d, s) == n_plus_set(r, s));
                VertexSet pred = s;
                for (int v : s) pred |= d.in(v);
                REQUIRE(n_minus_closed(d, s) == pred);
                REQUIRE(is_independent(d, s) == oracle::independent(d, m));
                REQUIRE(is_acyclic_set(d, s) == oracle::acyclic_within(d, m));
            }
            for (int u = 0; u < n; ++u) {
                const auto ref = oracle::bfs(d, u);
                for (int v = 0; v < n; ++v) {
                    const Distance got = dist(d, u, v);
                    REQUIRE(got.is_infinite() == (ref[v] < 0));
                    if (ref[v] >= 0) REQUIRE(got.length() == ref[v]);
                }
            }
        }
    }
}

TEST_CASE("odd_dicycle_free agrees with cycle enumeration for n <= 5") {
    for (int n = 0; n <= 5; ++n) {
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << pair_count(n)); ++code) {
            const Digraph d = digraph_from_code(n, code);
            REQUIRE(odd_dicycle_free(d) == !oracle::has_odd_cycle(d));
        }
    }
}
