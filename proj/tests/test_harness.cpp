#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "qk/error.hpp"
#include "qk/generators.hpp"
#include "qk/harness.hpp"
#include "qk/io.hpp"

using namespace qk;

namespace {

const RationalAlpha half(1, 2);

Corpus labeled(int n, bool sink_free) {
    return Corpus::enumeration(DigraphEnumeration(n, sink_free ? DigraphFilter::sink_free : DigraphFilter::all, false));
}

}  // namespace

TEST_CASE("single checks") {
    const Record c4 = check(make(FamilySpec::cycle(4)), ConjectureSpec(Variant::small, half, true));
    CHECK(c4.pass);
    CHECK(c4.objective == 2);
    CHECK(c4.bound == Rational(2));
    CHECK(c4.slack(Variant::small) == Rational(0));

    const Record c3 = check(make(FamilySpec::cycle(3)), ConjectureSpec(Variant::sharp, half, false));
    CHECK(c3.pass);
    CHECK(c3.objective == 3);
    CHECK(c3.bound == Rational(3));

    const Record arc = check(Digraph::from_arcs(2, {{0, 1}}), ConjectureSpec(Variant::large, half, false));
    CHECK(arc.pass);
    CHECK(arc.witness == VertexSet{1});
    CHECK(arc.objective == 2);

    const Record src = check(Digraph::from_arcs(2, {{0, 1}}), ConjectureSpec(Variant::sources, half, false));
    CHECK(src.pass);
    CHECK(src.bound == Rational(3, 2));

    // Alpha = 1 makes the small statement fail on every non-null digraph.
    const Record fail = check(make(FamilySpec::cycle(2)), ConjectureSpec(Variant::small, RationalAlpha(1, 1), true));
    CHECK_FALSE(fail.pass);
    CHECK(fail.slack(Variant::small) < Rational(0));

    CHECK_THROWS_AS(ConjectureSpec(Variant::small, half, false), InvalidInput);
    CHECK_THROWS_AS(check(Digraph::edgeless(1), ConjectureSpec(Variant::small, half, true)), InvalidInput);
    CHECK(parse_variant("sharp") == Variant::sharp);
    CHECK_THROWS_AS(parse_variant("huge"), InvalidInput);
}

TEST_CASE("checks are reproducible") {
    const Digraph d = make(FamilySpec::random(7, Rational(1, 3), 11));
    const ConjectureSpec spec(Variant::sharp, half, false);
    CHECK(check(d, spec, 3) == check(d, spec, 3));
}

TEST_CASE("exhaustive sweeps at n = 4") {
    const Report small = sweep(labeled(4, true), ConjectureSpec(Variant::small, half, true));
    CHECK(small.ok());
    CHECK(small.count == oracle::sink_free_count(4));
    CHECK(small.min_slack == Rational(0));
    // C4 (code of 0->1->2->3->0) is among the extremal digraphs.
    const Digraph c4 = make(FamilySpec::cycle(4));
    CHECK(std::find(small.extremal.begin(), small.extremal.end(), adjacency_code(c4)) != small.extremal.end());

    const Report sharp = sweep(labeled(4, false), ConjectureSpec(Variant::sharp, half, false));
    CHECK(sharp.ok());
    CHECK(sharp.count == 4096);
}

TEST_CASE("sweep failures agree with an independent recount") {
    const RationalAlpha two_thirds(2, 3);
    const Report r = sweep(labeled(3, false), ConjectureSpec(Variant::large, two_thirds, false));
    std::vector<std::uint64_t> expected;
    for (std::uint64_t code = 0; code < 64; ++code) {
        if (3 * oracle::max_large(digraph_from_code(3, code)) < 2 * 3) expected.push_back(code);
    }
    CHECK(r.failures == expected);
    CHECK(r.ok() == expected.empty());
}

TEST_CASE("statements I and III never fail together") {
    for (const RationalAlpha alpha : {RationalAlpha(1, 2), RationalAlpha(2, 3), RationalAlpha(3, 4)}) {
        DigraphEnumeration(4, DigraphFilter::sink_free, false).for_each([&](std::uint64_t, const Digraph& d) {
            const bool small = check(d, ConjectureSpec(Variant::small, alpha, true)).pass;
            const bool large = check(d, ConjectureSpec(Variant::large, alpha, false)).pass;
            REQUIRE((small || large));
        });
    }
}

TEST_CASE("shards and merge") {
    const Corpus corpus = labeled(3, false);
    const ConjectureSpec spec(Variant::large, RationalAlpha(2, 3), false);
    const Report whole = sweep(corpus, spec);
    const Report a = sweep(corpus, spec, {3, 0, true});
    const Report b = sweep(corpus, spec, {3, 1, true});
    const Report c = sweep(corpus, spec, {3, 2, true});
    const Report left = merge(merge(a, b), c);
    const Report right = merge(a, merge(b, c));
    CHECK(left.to_json() == right.to_json());
    CHECK(merge(c, merge(a, b)).to_json() == left.to_json());
    CHECK(left.count == whole.count);
    CHECK(left.failures == whole.failures);
    CHECK(left.min_slack == whole.min_slack);
    CHECK(left.extremal == whole.extremal);
    CHECK(left.records == whole.records);
    CHECK(left.shards == std::vector<int>{0, 1, 2});
    CHECK_THROWS_AS(sweep(corpus, spec, {3, 3, true}), InvalidInput);

    const Report threaded = parallel_sweep(corpus, spec, 4, true);
    CHECK(threaded.records == whole.records);
    CHECK(threaded.failures == whole.failures);
}

TEST_CASE("failures-only reports keep failing and extremal records") {
    const Corpus corpus = labeled(3, false);
    const ConjectureSpec spec(Variant::large, RationalAlpha(2, 3), false);
    const Report full = sweep(corpus, spec, {1, 0, true});
    const Report slim = sweep(corpus, spec, {1, 0, false});
    CHECK(slim.count == full.count);
    CHECK(slim.failures == full.failures);
    for (const Record& r : slim.records) {
        const bool extremal = std::find(slim.extremal.begin(), slim.extremal.end(), r.index) != slim.extremal.end();
        CHECK((!r.pass || extremal));
    }
    const Report merged = merge(sweep(corpus, spec, {2, 0, false}), sweep(corpus, spec, {2, 1, false}));
    CHECK(merged.records == slim.records);
}

TEST_CASE("report serialisation") {
    const Report r = sweep(labeled(2, false), ConjectureSpec(Variant::large, half, false));
    const nlohmann::json j = r.to_json();
    CHECK(j["schema"] == kReportSchema);
    CHECK(j["harness_version"] == kHarnessVersion);
    CHECK(j["aggregates"]["count"] == 4);
    CHECK(j["conjecture"]["alpha"] == "1/2");
    CHECK(j["corpus"] == "labeled n=2 all");
    const std::string csv = r.to_csv();
    CHECK(csv.rfind("adjacency_hex,n,objective,bound_num,bound_den,pass\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
}

TEST_CASE("extremal digraphs") {
    std::vector<Digraph> tournaments;
    for (int n : {3, 5, 7}) tournaments.push_back(make(FamilySpec::circulant(n)));
    const Report r = extremal(Corpus::list("circulant", tournaments), ConjectureSpec(Variant::sharp, half, false));
    CHECK(r.min_slack == Rational(0));
    CHECK(r.extremal == std::vector<std::uint64_t>{0, 1, 2});
    CHECK_THROWS_AS(
        extremal(Corpus::list("edgeless", {Digraph::edgeless(2)}), ConjectureSpec(Variant::small, half, true)),
        InvalidInput);
}

TEST_CASE("random corpus") {
    const Corpus c = random_corpus(20, 3, 6, Rational(1, 3), 5, true);
    CHECK(c.size() == 20);
    for (std::uint64_t i = 0; i < c.size(); ++i) {
        const Digraph d = *c.at(i);
        CHECK(is_sink_free(d));
        CHECK(d.order() >= 3);
        CHECK(d.order() <= 6);
        CHECK(d == *random_corpus(20, 3, 6, Rational(1, 3), 5, true).at(i));
    }
}
