#include "qk/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <vector>

#include "qk/error.hpp"

namespace qk {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) tokens.push_back(s.substr(i, j - i));
        i = j;
    }
    return tokens;
}

bool parse_int(std::string_view token, int& value) {
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    return ec == std::errc() && ptr == token.data() + token.size();
}

}  // namespace

Digraph parse_digraph(std::string_view text) {
    int n = -1;
    std::vector<Arc> arcs;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto tokens = split_ws(line);
        const std::string where = "line " + std::to_string(line_no);
        if (n < 0) {
            if (tokens.size() != 1 || !parse_int(tokens[0], n) || n < 0) {
                throw InvalidInput(where + ": malformed header, expected a vertex count");
            }
            if (n > kMaxVertices) {
                throw InvalidInput(where + ": vertex count " + std::to_string(n) + " exceeds cap " +
                                   std::to_string(kMaxVertices));
            }
            continue;
        }
        Arc a{};
        if (tokens.size() != 2 || !parse_int(tokens[0], a.from) || !parse_int(tokens[1], a.to)) {
            throw InvalidInput(where + ": expected 'u v'");
        }
        if (a.from < 0 || a.from >= n || a.to < 0 || a.to >= n) {
            throw InvalidInput(where + ": arc endpoint out of range");
        }
        if (a.from == a.to) throw InvalidInput(where + ": self-loop at vertex " + std::to_string(a.from));
        arcs.push_back(a);
    }
    if (n < 0) throw InvalidInput("malformed header: empty input");
    std::vector<Arc> sorted = arcs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InvalidInput("duplicate arc");
    }
    return Digraph::from_arcs(n, arcs);
}

std::string serialize_digraph(const Digraph& d) {
    std::ostringstream out;
    out << d.order() << '\n';
    for (const Arc& a : d.arcs()) out << a.from << ' ' << a.to << '\n';
    return out.str();
}

nlohmann::json digraph_to_json(const Digraph& d) {
    nlohmann::json arcs = nlohmann::json::array();
    for (const Arc& a : d.arcs()) arcs.push_back({a.from, a.to});
    return {{"n", d.order()}, {"arcs", arcs}};
}

Digraph digraph_from_json(const nlohmann::json& j) {
    try {
        const int n = j.at("n").get<int>();
        std::vector<Arc> arcs;
        for (const auto& arc : j.at("arcs")) {
            if (!arc.is_array() || arc.size() != 2) throw InvalidInput("arc must be a pair [u, v]");
            arcs.push_back({arc[0].get<int>(), arc[1].get<int>()});
        }
        return Digraph::from_arcs(n, arcs);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed digraph JSON: ") + e.what());
    }
}

nlohmann::json vertex_set_to_json(VertexSet s) { return s.to_vector(); }

VertexSet vertex_set_from_json(const nlohmann::json& j) {
    VertexSet s;
    for (const auto& v : j) {
        const int x = v.get<int>();
        if (x < 0 || x >= kMaxVertices) throw InvalidInput("vertex out of range in set");
        s.insert(x);
    }
    return s;
}

VertexSet parse_vertex_list(std::string_view text) {
    text = trim(text);
    if (!text.empty() && text.front() == '{') {
        if (text.back() != '}') throw InvalidInput("unbalanced braces in vertex list");
        text = trim(text.substr(1, text.size() - 2));
    }
    VertexSet s;
    if (text.empty()) return s;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        int v = 0;
        std::string_view token = trim(text.substr(pos, comma - pos));
        if (!parse_int(token, v) || v < 0 || v >= kMaxVertices) {
            throw InvalidInput("bad vertex '" + std::string(token) + "' in vertex list");
        }
        s.insert(v);
        pos = comma + 1;
    }
    return s;
}

namespace {

// Pairs grouped by larger endpoint: (0,1),(1,0),(0,2),(2,0),(1,2),(2,1),...
std::vector<bool> adjacency_bits(const Digraph& d) {
    std::vector<bool> bits;
    bits.reserve(static_cast<std::size_t>(d.order()) * d.order());
    for (int k = 1; k < d.order(); ++k) {
        for (int i = 0; i < k; ++i) {
            bits.push_back(d.has_arc(i, k));
            bits.push_back(d.has_arc(k, i));
        }
    }
    return bits;
}

}  // namespace

std::string adjacency_hex(const Digraph& d) {
    std::vector<bool> bits = adjacency_bits(d);
    const std::size_t pad = (4 - bits.size() % 4) % 4;
    bits.insert(bits.begin(), pad, false);
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string hex;
    for (std::size_t i = 0; i < bits.size(); i += 4) {
        int nibble = (bits[i] << 3) | (bits[i + 1] << 2) | (bits[i + 2] << 1) | int(bits[i + 3]);
        hex += kDigits[nibble];
    }
    return hex.empty() ? "0" : hex;
}

Digraph digraph_from_adjacency_hex(int n, std::string_view hex) {
    if (n < 0 || n > kMaxVertices) throw InvalidInput("vertex count out of range");
    const std::size_t length = static_cast<std::size_t>(n) * (n - (n > 0 ? 1 : 0));
    std::vector<bool> bits;
    for (char c : hex) {
        int nibble;
        if (c >= '0' && c <= '9') nibble = c - '0';
        else if (c >= 'a' && c <= 'f') nibble = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') nibble = c - 'A' + 10;
        else throw InvalidInput("bad hex digit in adjacency code");
        for (int b = 3; b >= 0; --b) bits.push_back((nibble >> b) & 1);
    }
    if (bits.size() < length) bits.insert(bits.begin(), length - bits.size(), false);
    const std::size_t excess = bits.size() - length;
    for (std::size_t i = 0; i < excess; ++i) {
        if (bits[i]) throw InvalidInput("adjacency code too long for n=" + std::to_string(n));
    }
    std::vector<Arc> arcs;
    std::size_t b = excess;
    for (int k = 1; k < n; ++k) {
        for (int i = 0; i < k; ++i) {
            if (bits[b++]) arcs.push_back({i, k});
            if (bits[b++]) arcs.push_back({k, i});
        }
    }
    return Digraph::from_arcs(n, arcs);
}

}  // namespace qk
