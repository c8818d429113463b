#include "qk/generators.hpp"

#include <charconv>

#include "qk/error.hpp"
#include "qk/reductions.hpp"

namespace qk {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

void require(bool ok, const std::string& message) {
    if (!ok) throw InvalidInput(message);
}

}  // namespace

std::uint64_t splitmix64_mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t random_draw(std::uint64_t seed, std::uint64_t counter) {
    return splitmix64_mix(seed + (counter + 1) * kGolden);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    return splitmix64_mix(random_draw(seed, a) ^ splitmix64_mix(b + kGolden));
}

bool bernoulli(std::uint64_t draw, Rational probability) {
    const unsigned __int128 scaled = static_cast<unsigned __int128>(draw) * probability.den();
    return static_cast<std::int64_t>(scaled >> 64) < probability.num();
}

Digraph make(const FamilySpec& spec) {
    const int n = spec.size;
    std::vector<Arc> arcs;
    switch (spec.kind) {
        case FamilyKind::cycle:
            require(n >= 2, "cycle needs n >= 2");
            for (int v = 0; v < n; ++v) arcs.push_back({v, (v + 1) % n});
            return Digraph::from_arcs(n, arcs);
        case FamilyKind::path:
            require(n >= 0, "path needs n >= 0");
            for (int v = 0; v + 1 < n; ++v) arcs.push_back({v, v + 1});
            return Digraph::from_arcs(n, arcs);
        case FamilyKind::edgeless:
            return Digraph::edgeless(n);
        case FamilyKind::circulant_tournament:
            require(n >= 3 && n % 2 == 1, "circulant tournament needs odd n >= 3");
            for (int v = 0; v < n; ++v)
                for (int j = 1; j <= (n - 1) / 2; ++j) arcs.push_back({v, (v + j) % n});
            return Digraph::from_arcs(n, arcs);
        case FamilyKind::c3_power: {
            require(n >= 0, "c3 power needs k >= 0");
            Digraph d = Digraph::edgeless(1);
            for (int i = 0; i < n; ++i) d = c3_blowup(d).graph;
            return d;
        }
        case FamilyKind::union_of:
            return union_family(spec.members);
        case FamilyKind::random: {
            require(spec.probability >= Rational(0) && spec.probability <= Rational(1),
                    "random digraph probability must lie in [0, 1]");
            std::uint64_t counter = 0;
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    if (u != v && bernoulli(random_draw(spec.seed, counter++), spec.probability))
                        arcs.push_back({u, v});
            return Digraph::from_arcs(n, arcs);
        }
        case FamilyKind::random_tournament: {
            std::uint64_t counter = 0;
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) {
                    if (random_draw(spec.seed, counter++) >> 63) arcs.push_back({v, u});
                    else arcs.push_back({u, v});
                }
            }
            return Digraph::from_arcs(n, arcs);
        }
    }
    throw InvalidInput("unknown family");
}

Digraph union_family(const std::vector<FamilySpec>& specs) {
    Digraph d;
    for (const FamilySpec& s : specs) d = disjoint_union(d, make(s));
    return d;
}

namespace {

template <class T>
T parse_number(std::string_view token, std::string_view whole) {
    T value{};
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
        throw InvalidInput("bad number '" + std::string(token) + "' in family '" + std::string(whole) + "'");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = s.find(sep, pos);
        out.push_back(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return out;
}

}  // namespace

FamilySpec parse_family(std::string_view text) {
    const auto colon = text.find(':');
    const std::string_view name = text.substr(0, colon);
    const std::string_view rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    if (name == "union") {
        FamilySpec spec = FamilySpec::union_of({});
        if (rest.empty()) return spec;
        for (std::string_view member : split(rest, ',')) spec.members.push_back(parse_family(member));
        return spec;
    }
    const auto fields = split(rest, ':');
    auto arity = [&](std::size_t count) {
        if (colon == std::string_view::npos || fields.size() != count) {
            throw InvalidInput("family '" + std::string(text) + "' expects " + std::to_string(count) +
                               " parameter(s)");
        }
    };
    if (name == "cycle" || name == "path" || name == "edgeless" || name == "circulant" || name == "c3pow") {
        arity(1);
        const int n = parse_number<int>(fields[0], text);
        if (name == "cycle") return FamilySpec::cycle(n);
        if (name == "path") return FamilySpec::path(n);
        if (name == "edgeless") return FamilySpec::edgeless(n);
        if (name == "circulant") return FamilySpec::circulant(n);
        return FamilySpec::c3_power(n);
    }
    if (name == "random") {
        arity(3);
        const auto frac = split(fields[1], '/');
        if (frac.size() != 2) throw InvalidInput("random probability must be P/Q");
        const Rational p(parse_number<std::int64_t>(frac[0], text), parse_number<std::int64_t>(frac[1], text));
        return FamilySpec::random(parse_number<int>(fields[0], text), p, parse_number<std::uint64_t>(fields[2], text));
    }
    if (name == "tournament") {
        arity(2);
        return FamilySpec::random_tournament(parse_number<int>(fields[0], text),
                                             parse_number<std::uint64_t>(fields[1], text));
    }
    throw InvalidInput("unknown family '" + std::string(name) + "'");
}

}  // namespace qk
