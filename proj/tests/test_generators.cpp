#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qk/error.hpp"
#include "qk/generators.hpp"
#include "qk/reductions.hpp"
#include "qk/solvers.hpp"

using namespace qk;

namespace {

bool strongly_connected(const Digraph& d) {
    for (int u = 0; u < d.order(); ++u)
        for (int v = 0; v < d.order(); ++v)
            if (dist(d, u, v).is_infinite()) return false;
    return true;
}

}  // namespace

TEST_CASE("splitmix64 reference values") {
    // First outputs of the reference SplitMix64 stream seeded with 0.
    CHECK(random_draw(0, 0) == 0xE220A8397B1DCDAFULL);
    CHECK(random_draw(0, 1) == 0x6E789E6AA1B965F4ULL);
    CHECK(random_draw(0, 2) == 0x06C45D188009454FULL);
    CHECK(derive_seed(7, 1, 2) == derive_seed(7, 1, 2));
    CHECK(derive_seed(7, 1, 2) != derive_seed(7, 2, 1));
}

TEST_CASE("bernoulli") {
    CHECK_FALSE(bernoulli(0, Rational(0)));
    CHECK(bernoulli(~std::uint64_t{0}, Rational(1)));
    CHECK(bernoulli(0, Rational(1, 3)));
    CHECK_FALSE(bernoulli(~std::uint64_t{0}, Rational(1, 3)));
    int hits = 0;
    for (std::uint64_t i = 0; i < 30000; ++i) hits += bernoulli(random_draw(99, i), Rational(1, 3));
    CHECK(hits > 9500);
    CHECK(hits < 10500);
}

TEST_CASE("named families") {
    CHECK(make(FamilySpec::cycle(2)) == Digraph::from_arcs(2, {{0, 1}, {1, 0}}));
    CHECK(make(FamilySpec::cycle(4)) == Digraph::from_arcs(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
    CHECK(make(FamilySpec::path(3)) == Digraph::from_arcs(3, {{0, 1}, {1, 2}}));
    CHECK(make(FamilySpec::edgeless(3)).arc_count() == 0);
    const Digraph t5 = make(FamilySpec::circulant(5));
    for (int v = 0; v < 5; ++v) {
        CHECK(t5.in_degree(v) == 2);
        CHECK(t5.out_degree(v) == 2);
    }
    const Digraph p2 = make(FamilySpec::c3_power(2));
    CHECK(p2.order() == 9);
    CHECK(p2.arc_count() == 36);
    CHECK_THROWS_AS(make(FamilySpec::circulant(4)), InvalidInput);
    CHECK_THROWS_AS(make(FamilySpec::circulant(1)), InvalidInput);
    CHECK_THROWS_AS(make(FamilySpec::cycle(1)), InvalidInput);
    CHECK_THROWS_AS(make(FamilySpec::c3_power(4)), InvalidInput);
    CHECK_THROWS_AS(make(FamilySpec::random(3, Rational(3, 2), 0)), InvalidInput);
}

TEST_CASE("circulant tournaments are regular and strongly connected") {
    for (int n : {3, 5, 7, 9}) {
        const Digraph t = make(FamilySpec::circulant(n));
        for (int u = 0; u < n; ++u) {
            CHECK(t.in_degree(u) == t.out_degree(u));
            for (int v = u + 1; v < n; ++v) CHECK(t.has_arc(u, v) != t.has_arc(v, u));
        }
        CHECK(strongly_connected(t));
    }
}

TEST_CASE("c3 powers are iterated blowups") {
    Digraph previous = Digraph::edgeless(1);
    for (int k = 1; k <= 3; ++k) {
        const Digraph p = make(FamilySpec::c3_power(k));
        CHECK(p == c3_blowup(previous).graph);
        previous = p;
    }
    CHECK(make(FamilySpec::c3_power(0)) == Digraph::edgeless(1));
}

TEST_CASE("unions") {
    const Digraph u = make(FamilySpec::union_of({FamilySpec::cycle(2), FamilySpec::cycle(4)}));
    CHECK(u.order() == 6);
    CHECK(min_quasi_kernel(u).objective == 3);
    std::vector<FamilySpec> copies(4, FamilySpec::cycle(2));
    CHECK(min_quasi_kernel(union_family(copies)).objective == 4);
    CHECK(union_family({}).order() == 0);
}

TEST_CASE("random digraphs are reproducible") {
    const Digraph a = make(FamilySpec::random(8, Rational(1, 3), 42));
    CHECK(a == make(FamilySpec::random(8, Rational(1, 3), 42)));
    CHECK(a != make(FamilySpec::random(8, Rational(1, 3), 43)));
    CHECK(make(FamilySpec::random(6, Rational(0), 1)).arc_count() == 0);
    CHECK(make(FamilySpec::random(6, Rational(1), 1)).arc_count() == 30);
    const Digraph t = make(FamilySpec::random_tournament(7, 5));
    for (int u = 0; u < 7; ++u)
        for (int v = u + 1; v < 7; ++v) CHECK(t.has_arc(u, v) != t.has_arc(v, u));
    CHECK(t == make(FamilySpec::random_tournament(7, 5)));
}

TEST_CASE("family grammar") {
    CHECK(make(parse_family("cycle:4")) == make(FamilySpec::cycle(4)));
    CHECK(make(parse_family("circulant:7")) == make(FamilySpec::circulant(7)));
    CHECK(make(parse_family("c3pow:2")) == make(FamilySpec::c3_power(2)));
    CHECK(make(parse_family("union:cycle:2,cycle:4")).order() == 6);
    CHECK(make(parse_family("random:6:1/3:9")) == make(FamilySpec::random(6, Rational(1, 3), 9)));
    CHECK(make(parse_family("tournament:5:3")) == make(FamilySpec::random_tournament(5, 3)));
    CHECK(make(parse_family("path:3")) == make(FamilySpec::path(3)));
    CHECK(make(parse_family("edgeless:2")) == Digraph::edgeless(2));
    CHECK_THROWS_AS(parse_family("cycle"), InvalidInput);
    CHECK_THROWS_AS(parse_family("cycle:x"), InvalidInput);
    CHECK_THROWS_AS(parse_family("wheel:5"), InvalidInput);
    CHECK_THROWS_AS(parse_family("random:6:0.3:1"), InvalidInput);
    CHECK_THROWS_AS(parse_family("cycle:4:5"), InvalidInput);
}
