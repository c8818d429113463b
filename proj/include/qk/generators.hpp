#ifndef QK_GENERATORS_HPP
#define QK_GENERATORS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qk/digraph.hpp"
#include "qk/rational.hpp"

namespace qk {

/// Counter-based generator: the k-th draw of a stream is splitmix64_mix(seed + (k+1)*golden),
/// where golden = 0x9E3779B97F4A7C15. Streams can be split by seed or by counter.
std::uint64_t splitmix64_mix(std::uint64_t z);
std::uint64_t random_draw(std::uint64_t seed, std::uint64_t counter);
/// Independent child seed, e.g. one per corpus item and retry.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);
/// True with probability num/den: (draw * den) >> 64 < num.
bool bernoulli(std::uint64_t draw, Rational probability);

enum class FamilyKind { cycle, path, edgeless, circulant_tournament, c3_power, union_of, random, random_tournament };

struct FamilySpec {
    FamilyKind kind = FamilyKind::edgeless;
    /// Vertex count, or the power for c3_power.
    int size = 0;
    Rational probability{0};
    std::uint64_t seed = 0;
    std::vector<FamilySpec> members;

    static FamilySpec cycle(int n) { return of(FamilyKind::cycle, n); }
    static FamilySpec path(int n) { return of(FamilyKind::path, n); }
    static FamilySpec edgeless(int n) { return of(FamilyKind::edgeless, n); }
    static FamilySpec circulant(int n) { return of(FamilyKind::circulant_tournament, n); }
    static FamilySpec c3_power(int k) { return of(FamilyKind::c3_power, k); }
    static FamilySpec random(int n, Rational p, std::uint64_t seed) {
        FamilySpec f = of(FamilyKind::random, n);
        f.probability = p;
        f.seed = seed;
        return f;
    }
    static FamilySpec random_tournament(int n, std::uint64_t seed) {
        FamilySpec f = of(FamilyKind::random_tournament, n);
        f.probability = Rational(1, 2);
        f.seed = seed;
        return f;
    }
    static FamilySpec union_of(std::vector<FamilySpec> members) {
        FamilySpec f = of(FamilyKind::union_of, 0);
        f.members = std::move(members);
        return f;
    }

private:
    static FamilySpec of(FamilyKind kind, int size) {
        FamilySpec f;
        f.kind = kind;
        f.size = size;
        return f;
    }
};

/// Throws InvalidInput on bad parameters (even or small n for circulants, p outside [0,1], ...).
Digraph make(const FamilySpec& spec);
/// Disjoint union in list order; the empty list gives the null digraph.
Digraph union_family(const std::vector<FamilySpec>& specs);

/// Grammar: cycle:N | path:N | edgeless:N | circulant:N | c3pow:K
///        | random:N:P/Q:SEED | tournament:N:SEED | union:SPEC,SPEC,...
FamilySpec parse_family(std::string_view text);

}  // namespace qk

#endif  // QK_GENERATORS_HPP
