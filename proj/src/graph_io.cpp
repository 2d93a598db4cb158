#include "bipdom/graph_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "bipdom/error.hpp"

namespace bipdom {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::size_t parse_count(const std::string& tok, std::size_t line_no) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line_no) + ": bad count '" + tok + "'");
    return value;
}

} // namespace

Graph parse_graph_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    std::size_t expected_n = 0;
    std::size_t expected_m = 0;
    std::vector<Label> vertices;
    std::vector<std::pair<Label, Label>> edges;

    auto fail = [&](const std::string& what) {
        throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line_no) + ": " + what);
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto toks = split_ws(line);
        if (toks.empty() || toks[0][0] == '#') continue;

        if (toks[0] == "p") {
            if (have_header) fail("duplicate header");
            if (toks.size() != 4 || toks[1] != "graph") fail("expected 'p graph <n> <m>'");
            expected_n = parse_count(toks[2], line_no);
            expected_m = parse_count(toks[3], line_no);
            have_header = true;
        } else if (toks[0] == "v") {
            if (!have_header) fail("vertex line before header");
            if (!edges.empty()) fail("vertex line after edge lines");
            if (toks.size() != 2) fail("expected 'v <label>'");
            vertices.push_back(toks[1]);
        } else if (toks[0] == "e") {
            if (!have_header) fail("edge line before header");
            if (toks.size() != 3) fail("expected 'e <label> <label>'");
            edges.emplace_back(toks[1], toks[2]);
        } else {
            fail("unknown line type '" + toks[0] + "'");
        }
    }
    if (!have_header) throw Error(ErrorCode::SyntaxError, "missing 'p graph' header");
    if (vertices.size() != expected_n)
        throw Error(ErrorCode::SyntaxError, "header declares " + std::to_string(expected_n) + " vertices, found " +
                                                std::to_string(vertices.size()));
    if (edges.size() != expected_m)
        throw Error(ErrorCode::SyntaxError, "header declares " + std::to_string(expected_m) + " edges, found " +
                                                std::to_string(edges.size()));
    return Graph::from_edge_list(std::move(vertices), edges);
}

std::string write_graph_text(const Graph& g) {
    std::string out = "p graph " + std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const auto& v : g.vertices()) out += "v " + v + "\n";
    for (const auto& e : g.edges()) out += "e " + e.first + " " + e.second + "\n";
    return out;
}

std::string to_dot(const Graph& g) {
    auto quote = [](const std::string& s) {
        std::string q = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\') q += '\\';
            q += c;
        }
        return q + "\"";
    };
    std::string out = "graph {\n";
    for (const auto& v : g.vertices()) out += "  " + quote(v) + ";\n";
    for (const auto& e : g.edges()) out += "  " + quote(e.first) + " -- " + quote(e.second) + ";\n";
    out += "}\n";
    return out;
}

} // namespace bipdom
