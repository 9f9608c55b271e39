#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "graph.hpp"

namespace ramsey {

enum class Format { graph6, edge_list, ocg_json };

inline Format parse_format(std::string_view name) {
    if (name == "graph6" || name == "g6") return Format::graph6;
    if (name == "edges" || name == "edge-list") return Format::edge_list;
    if (name == "ocg-json" || name == "json") return Format::ocg_json;
    throw InvalidInput("unknown format '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// graph6
//
// Vertex count N(n), then the upper triangle x(0,1) x(0,2) x(1,2) x(0,3) ...
// (column by column) packed big-endian into 6-bit groups, each emitted as
// the byte value + 63. The last group is zero padded.

inline std::string write_graph6(const Graph& g) {
    const auto n = static_cast<std::uint64_t>(g.vertex_count());
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.append("~~");
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int acc = 0;
    int bits = 0;
    for (Vertex j = 1; j < g.vertex_count(); ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = bits = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
    return out;
}

inline constexpr int max_graph6_vertices = 1 << 14;

inline Graph read_graph6(std::string_view text) {
    std::size_t pos = 0;
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) pos = header.size();
    std::size_t end = text.size();
    while (end > pos && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;

    auto sextet = [&](std::size_t at) -> std::uint64_t {
        if (at >= end) throw ParseError("unexpected end of graph6 data", at);
        const auto c = static_cast<unsigned char>(text[at]);
        if (c < 63 || c > 126) throw ParseError("byte outside graph6 range", at);
        return c - 63u;
    };

    std::uint64_t n = 0;
    if (pos < end && text[pos] == '~') {
        if (pos + 1 < end && text[pos + 1] == '~') {
            for (std::size_t i = 0; i < 6; ++i) n = (n << 6) | sextet(pos + 2 + i);
            pos += 8;
        } else {
            for (std::size_t i = 0; i < 3; ++i) n = (n << 6) | sextet(pos + 1 + i);
            pos += 4;
        }
    } else {
        n = sextet(pos);
        pos += 1;
    }
    // Adjacency is stored densely, so very large headers are refused early.
    if (n > static_cast<std::uint64_t>(max_graph6_vertices)) throw SizeCapExceeded(static_cast<int>(std::min<std::uint64_t>(n, INT32_MAX)), max_graph6_vertices);

    const auto vc = static_cast<int>(n);
    const std::uint64_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t groups = (pairs + 5) / 6;
    if (end - pos != groups)
        throw ParseError("expected " + std::to_string(groups) + " adjacency bytes, found " +
                             std::to_string(end - pos),
                         end < pos + groups ? end : pos + groups);

    std::vector<Edge> edges;
    std::uint64_t k = 0;
    for (Vertex j = 1; j < vc; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            const std::uint64_t group = sextet(pos + k / 6);
            if ((group >> (5 - k % 6)) & 1u) edges.emplace_back(i, j);
        }
    }
    if (pairs % 6 != 0) {
        const std::uint64_t last = sextet(pos + groups - 1);
        if (last & ((1u << (6 - pairs % 6)) - 1))
            throw ParseError("nonzero padding bits", pos + groups - 1);
    }
    return Graph::from_edges(vc, edges);
}

// ---------------------------------------------------------------------------
// Plain edge list: first line is the vertex count, then one "u v" per line.

inline std::string write_edge_list(const Graph& g) {
    std::string out = std::to_string(g.vertex_count());
    for (auto [u, v] : g.edges()) out += "\n" + std::to_string(u) + " " + std::to_string(v);
    out += "\n";
    return out;
}

inline Graph read_edge_list(std::string_view text) {
    std::size_t pos = 0;
    auto skip_blank = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto skip_inline_blank = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r')) ++pos;
    };
    auto number = [&]() -> long long {
        const std::size_t start = pos;
        if (pos < text.size() && text[pos] == '-') ++pos;
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError("expected integer", start);
        long long value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > (1ll << 30)) throw ParseError("integer too large", start);
            ++pos;
        }
        return text[start] == '-' ? -value : value;
    };

    skip_blank();
    const std::size_t count_at = pos;
    const long long count = number();
    if (count < 0) throw ParseError("negative vertex count", count_at);
    skip_inline_blank();
    if (pos < text.size() && text[pos] != '\n') throw ParseError("trailing data after vertex count", pos);

    std::vector<Edge> edges;
    for (;;) {
        skip_blank();
        if (pos >= text.size()) break;
        const std::size_t line_at = pos;
        const long long u = number();
        skip_inline_blank();
        const long long v = number();
        skip_inline_blank();
        if (pos < text.size() && text[pos] != '\n') throw ParseError("trailing data after edge", pos);
        if (u < 0 || u >= count || v < 0 || v >= count)
            throw ParseError("edge endpoint out of range", line_at);
        if (u == v) throw ParseError("loop edge", line_at);
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return Graph::from_edges(static_cast<int>(count), edges);
}

// ---------------------------------------------------------------------------
// ocg-json: {"vertices": v, "edges": [[u,w],...], "n": n, "colors": [...], "ordered": bool}

inline nlohmann::json to_json(const OrderedColoredGraph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.graph.edges()) edges.push_back({u, v});
    nlohmann::json j = {{"vertices", g.vertex_count()}, {"edges", std::move(edges)}, {"n", g.n}};
    if (g.colors) j["colors"] = *g.colors;
    j["ordered"] = g.ordered;
    return j;
}

inline OrderedColoredGraph from_json(const nlohmann::json& j) {
    auto fail = [](const std::string& what) -> ParseError { return ParseError(what, 0); };
    if (!j.is_object()) throw fail("ocg-json value must be an object");
    if (!j.contains("vertices") || !j["vertices"].is_number_integer())
        throw fail("missing integer field 'vertices'");
    const auto count = j["vertices"].get<long long>();
    if (count < 0 || count > (1 << 20)) throw fail("bad vertex count");

    std::vector<Edge> edges;
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw fail("'edges' must be an array");
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
                throw fail("each edge must be a pair of integers");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
    }
    const int n = j.value("n", 1);
    std::optional<std::vector<Color>> colors;
    if (j.contains("colors") && !j["colors"].is_null()) {
        if (!j["colors"].is_array()) throw fail("'colors' must be an array");
        colors = j["colors"].get<std::vector<Color>>();
    }
    const bool is_ordered = j.value("ordered", true);
    return OrderedColoredGraph(Graph::from_edges(static_cast<int>(count), edges), n, std::move(colors),
                               is_ordered);
}

inline nlohmann::json parse_json_text(std::string_view text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), e.byte);
    }
}

inline std::string write_ocg_json(const OrderedColoredGraph& g) { return to_json(g).dump() + "\n"; }

inline OrderedColoredGraph read_ocg_json(std::string_view text) {
    const auto j = parse_json_text(text);
    try {
        return from_json(j);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what(), 0);
    }
}

inline std::string write_ocg_json_array(std::span<const OrderedColoredGraph> gs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& g : gs) arr.push_back(to_json(g));
    return arr.dump() + "\n";
}

inline std::vector<OrderedColoredGraph> read_ocg_json_array(std::string_view text) {
    const auto j = parse_json_text(text);
    if (!j.is_array()) throw ParseError("expected a JSON array", 0);
    std::vector<OrderedColoredGraph> out;
    try {
        for (const auto& item : j) out.push_back(from_json(item));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what(), 0);
    }
    return out;
}

// ---------------------------------------------------------------------------

/// Reads one structure. graph6 and edge lists yield uncolored structures
/// ordered by vertex index.
inline OrderedColoredGraph read_structure(Format format, std::string_view payload) {
    switch (format) {
    case Format::graph6: return as_ordered(read_graph6(payload));
    case Format::edge_list: return as_ordered(read_edge_list(payload));
    case Format::ocg_json: return read_ocg_json(payload);
    }
    throw InvalidInput("unknown format");
}

/// graph6 and edge lists carry the graph only; colors and order flag are dropped.
inline std::string write_structure(Format format, const OrderedColoredGraph& g) {
    switch (format) {
    case Format::graph6: return write_graph6(g.graph) + "\n";
    case Format::edge_list: return write_edge_list(g.graph);
    case Format::ocg_json: return write_ocg_json(g);
    }
    throw InvalidInput("unknown format");
}

} // namespace ramsey
