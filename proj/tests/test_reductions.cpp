#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "qk/enumerate.hpp"
#include "qk/error.hpp"
#include "qk/generators.hpp"
#include "qk/reductions.hpp"

using namespace qk;

namespace {

const Digraph c2 = make(FamilySpec::cycle(2));
const Digraph c4 = make(FamilySpec::cycle(4));

template <class Fn>
void all_digraphs(int min_n, int max_n, Fn fn) {
    for (int n = min_n; n <= max_n; ++n)
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << pair_count(n)); ++code)
            fn(digraph_from_code(n, code));
}

template <class Fn>
void all_quasi_kernels(const Digraph& d, Fn fn) {
    for_each_independent_set(d, d.vertices(), [&](VertexSet s) {
        if (is_quasi_kernel(d, s)) fn(s);
    });
}

}  // namespace

TEST_CASE("source gadget") {
    const Blowup g = add_source_gadget(c2, 2);
    CHECK(g.graph.order() == 6);
    CHECK(g.graph.arc_count() == 6);
    for (int x = 2; x < 6; ++x) {
        CHECK(g.graph.in_degree(x) == 0);
        CHECK(g.graph.out_degree(x) == 1);
    }
    CHECK(g.map.blocks[0] == VertexSet{0, 2, 3});
    CHECK(g.map.owner(5) == 1);
    CHECK(add_source_gadget(c4, 1).graph.order() == 8);
    CHECK_THROWS_AS(add_source_gadget(c4, 0), InvalidInput);
    CHECK_THROWS_AS(add_source_gadget(Digraph::edgeless(32), 1), InvalidInput);
    all_digraphs(1, 3, [](const Digraph& d) {
        const Blowup b = add_source_gadget(d, 2);
        const VertexSet gadget = b.graph.vertices() - d.vertices();
        REQUIRE(gadget.subset_of(sources_not_sinks(b.graph)));
        if (is_sink_free(d)) REQUIRE(is_sink_free(b.graph));
    });
}

TEST_CASE("weighted blowup") {
    const std::vector<int> m{2, 1};
    const Blowup b = weighted_blowup(c2, m);
    CHECK(b.graph.order() == 3);
    CHECK(b.graph.arc_count() == 4);
    CHECK(b.map.blocks[0] == VertexSet{0, 1});
    CHECK(b.graph.has_arc(1, 2));
    CHECK(b.graph.has_arc(2, 0));
    const std::vector<int> ones{1, 1, 1, 1};
    CHECK(weighted_blowup(c4, ones).graph == c4);
    const std::vector<int> bad{1, 0};
    CHECK_THROWS_AS(weighted_blowup(c2, bad), InvalidInput);
    const std::vector<int> short_list{1};
    CHECK_THROWS_AS(weighted_blowup(c2, short_list), InvalidInput);
}

TEST_CASE("c3 blowup") {
    const Blowup one = c3_blowup(Digraph::edgeless(1));
    CHECK(one.graph == make(FamilySpec::cycle(3)));
    const Blowup b = c3_blowup(c2);
    CHECK(b.graph.order() == 6);
    CHECK(b.graph.arc_count() == 6 + 18);
    CHECK(project_blowup_qk(Digraph::edgeless(1), one, VertexSet{0}) == VertexSet{0});
}

TEST_CASE("block structure of blowups") {
    all_digraphs(1, 3, [](const Digraph& d) {
        std::vector<int> mult;
        for (int v = 0; v < d.order(); ++v) mult.push_back(v + 1);
        const Blowup w = weighted_blowup(d, mult);
        const Blowup c = c3_blowup(d);
        for (int x = 0; x < w.graph.order(); ++x)
            for (int y = 0; y < w.graph.order(); ++y) {
                const int a = w.map.owner(x), b = w.map.owner(y);
                REQUIRE(w.graph.has_arc(x, y) == (a != b && d.has_arc(a, b)));
            }
        for (int x = 0; x < c.graph.order(); ++x)
            for (int y = 0; y < c.graph.order(); ++y) {
                const int a = c.map.owner(x), b = c.map.owner(y);
                const bool inside = a == b && y == 3 * a + (x - 3 * a + 1) % 3;
                REQUIRE(c.graph.has_arc(x, y) == (inside || (a != b && d.has_arc(a, b))));
            }
    });
}

TEST_CASE("projections of every quasi-kernel of a blowup, base n <= 3") {
    all_digraphs(0, 3, [](const Digraph& d) {
        const Blowup c = c3_blowup(d);
        all_quasi_kernels(c.graph, [&](VertexSet qp) {
            const VertexSet q = project_blowup_qk(d, c, qp);
            REQUIRE(oracle::quasi_kernel(d, q.bits()));
            REQUIRE(n_minus_set(c.graph, qp).size() == q.size() + 3 * n_minus_set(d, q).size());
        });
        std::vector<int> mult(d.order(), 2);
        const Blowup w = weighted_blowup(d, mult);
        all_quasi_kernels(w.graph, [&](VertexSet qp) {
            REQUIRE(oracle::quasi_kernel(d, project_blowup_qk(d, w, qp).bits()));
        });
        const Blowup g = add_source_gadget(d, 1);
        all_quasi_kernels(g.graph, [&](VertexSet qp) {
            REQUIRE(oracle::quasi_kernel(d, project_blowup_qk(d, g, qp).bits()));
        });
    });
    CHECK_THROWS_AS(project_blowup_qk(c2, c3_blowup(c2), VertexSet{}), InvalidInput);
}

TEST_CASE("maximal quasi-kernels of weighted blowups are block-uniform") {
    all_digraphs(1, 3, [](const Digraph& d) {
        std::vector<int> mult(d.order(), 2);
        const Blowup w = weighted_blowup(d, mult);
        all_quasi_kernels(w.graph, [&](VertexSet qp) {
            bool maximal = true;
            for (int x : w.graph.vertices() - qp) maximal = maximal && !is_quasi_kernel(w.graph, qp.with(x));
            if (maximal) REQUIRE(blocks_uniform(w.map, qp));
        });
    });
    CHECK(blocks_uniform(weighted_blowup(c2, std::vector<int>{2, 2}).map, VertexSet{0, 1}));
    CHECK_FALSE(blocks_uniform(weighted_blowup(c2, std::vector<int>{2, 2}).map, VertexSet{0}));
}

TEST_CASE("sink peeling") {
    const auto oracle = brute_force_large_oracle();
    const SolveResult arc = sink_peel(oracle, Digraph::from_arcs(2, {{0, 1}}), PeelObjective::large);
    CHECK(*arc.witness == VertexSet{1});
    CHECK(arc.objective == 2);
    CHECK(sink_peel(oracle, c4, PeelObjective::large).witness == max_large_quasi_kernel(c4).witness);
    const Digraph star = Digraph::from_arcs(4, {{1, 0}, {2, 0}, {3, 0}});
    const SolveResult s = sink_peel(oracle, star, PeelObjective::large);
    CHECK(*s.witness == VertexSet{0});
    CHECK(s.objective == 4);
    all_digraphs(0, 4, [&](const Digraph& d) {
        const SolveResult r = sink_peel(oracle, d, PeelObjective::large);
        REQUIRE(oracle::quasi_kernel(d, r.witness->bits()));
        REQUIRE(2 * r.objective >= d.order());
        const SolveResult sh = sink_peel(
            [](const Digraph& g) { return *max_sharp_quasi_kernel(g).witness; }, d, PeelObjective::sharp);
        REQUIRE(sh.objective >= d.order());
    });
    CHECK_THROWS_AS(sink_peel([](const Digraph&) { return VertexSet{}; }, c4, PeelObjective::large),
                    OracleViolation);
}

TEST_CASE("matching split") {
    const MatchingSplit s = matching_split(c4, VertexSet{0, 2});
    CHECK(s.n == VertexSet{1, 3});
    CHECK(s.matching.size() == 2);
    CHECK(s.q2.empty());
    CHECK(s.m.empty());
    const Digraph c6 = make(FamilySpec::cycle(6));
    const VertexSet q6 = minimalize_quasi_kernel(c6, VertexSet{0, 2, 4});
    const MatchingSplit s6 = matching_split(c6, q6);
    CHECK(s6.r() + s6.s() == q6.size());
    CHECK(s6.r() <= s6.p());
    CHECK(s6.p() + s6.m_size() + q6.size() == 6);
    CHECK_THROWS_AS(matching_split(c6, VertexSet{0, 2, 4}.with(1)), InvalidInput);
    CHECK_THROWS_AS(matching_split(Digraph::from_arcs(2, {{0, 1}}), VertexSet{1}), InvalidInput);
}

TEST_CASE("II to I pipeline") {
    const RationalAlpha half(1, 2);
    const SolveResult r4 = qk_via_ii_oracle(c4, half, brute_force_min_oracle());
    CHECK(r4.objective <= 2);
    CHECK(qk_via_ii_oracle(c2, half, brute_force_min_oracle()).objective == 1);
    all_digraphs(1, 4, [&](const Digraph& d) {
        if (!is_sink_free(d)) return;
        const SolveResult r = qk_via_ii_oracle(d, half, brute_force_min_oracle());
        REQUIRE(oracle::quasi_kernel(d, r.witness->bits()));
        REQUIRE(3 * r.objective <= 2 * d.order());
    });
    const Digraph c5 = make(FamilySpec::cycle(5));
    CHECK_THROWS_AS(qk_via_ii_oracle(c5, half, [](const Digraph&) { return VertexSet{}; }), OracleViolation);
}

TEST_CASE("sources reduction") {
    // Vertex 0 with two sources attached; C = 3 gives multiplicity 7.
    const Digraph d = Digraph::from_arcs(3, {{1, 0}, {2, 0}});
    const SourcesReduction red = build_sources_reduction(d, 3);
    CHECK(red.sources == VertexSet{1, 2});
    CHECK(red.multiplicities == std::vector<int>{7});
    CHECK(red.blowup.graph.order() == 7);
    // Sources keep only their smallest out-arc.
    const Digraph e = Digraph::from_arcs(3, {{2, 0}, {2, 1}, {0, 1}, {1, 0}});
    const SourcesReduction pr = build_sources_reduction(e, 1);
    CHECK(pr.pruned.out(2) == VertexSet{0});
    CHECK(pr.multiplicities == std::vector<int>{2, 1});
    CHECK(sources_gadget_copies(RationalAlpha(1, 2), 3) == 7);
    CHECK(blowup_map_to_json(red.blowup.map)["kind"] == "weighted");
}

TEST_CASE("III to II pipeline") {
    const RationalAlpha half(1, 2);
    const auto large = [](const SourcesReduction& red) { return *max_large_quasi_kernel(red.blowup.graph).witness; };
    const Digraph two_in = Digraph::from_arcs(4, {{0, 1}, {1, 0}, {2, 0}, {3, 1}});
    const SolveResult r = qk_via_iii_oracle(two_in, half, large);
    CHECK(2 * r.objective <= 2 * 4 - 2);
    all_digraphs(1, 4, [&](const Digraph& d) {
        const SolveResult s = qk_via_iii_oracle(d, half, large);
        REQUIRE(oracle::quasi_kernel(d, s.witness->bits()));
        REQUIRE(2 * s.objective <= 2 * d.order() - sources_not_sinks(d).size());
    });
    CHECK_THROWS_AS(qk_via_iii_oracle(two_in, half, [](const SourcesReduction&) { return VertexSet{}; }),
                    OracleViolation);
}

TEST_CASE("caps") {
    CHECK_THROWS_AS(c3_blowup(Digraph::edgeless(22)), InvalidInput);
    CHECK(c3_blowup(Digraph::edgeless(21)).graph.order() == 63);
}
