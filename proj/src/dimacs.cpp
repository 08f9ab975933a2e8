#include "sumcolor/dimacs.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace sumcolor {

namespace {

long long parse_int(const std::string& tok, int line, const char* what) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        throw DimacsError(line, std::string("malformed ") + what + " '" + tok + "'");
    }
    if (pos != tok.size()) throw DimacsError(line, std::string("malformed ") + what + " '" + tok + "'");
    return v;
}

} // namespace

Graph parse_dimacs(std::istream& in) {
    std::optional<Graph> g;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            if (g) throw DimacsError(lineno, "duplicate problem line");
            std::string fmt, ntok, mtok;
            if (!(ls >> fmt >> ntok >> mtok)) throw DimacsError(lineno, "malformed problem line");
            if (fmt != "edge" && fmt != "col")
                throw DimacsError(lineno, "unsupported problem format '" + fmt + "'");
            long long n = parse_int(ntok, lineno, "vertex count");
            parse_int(mtok, lineno, "edge count"); // informational only
            if (n < 0) throw DimacsError(lineno, "negative vertex count");
            g.emplace(static_cast<int>(n));
        } else if (tag == "e") {
            if (!g) throw DimacsError(lineno, "edge before problem line");
            std::string utok, vtok;
            if (!(ls >> utok >> vtok)) throw DimacsError(lineno, "malformed edge line");
            long long u = parse_int(utok, lineno, "endpoint");
            long long v = parse_int(vtok, lineno, "endpoint");
            if (u < 1 || u > g->vertex_count() || v < 1 || v > g->vertex_count())
                throw DimacsError(lineno, "endpoint out of range");
            if (u == v) throw DimacsError(lineno, "self-loop rejected");
            g->add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
        } else {
            throw DimacsError(lineno, "unrecognized line tag '" + tag + "'");
        }
    }
    if (!g) throw DimacsError(lineno, "missing problem line");
    return std::move(*g);
}

Graph parse_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_dimacs(in);
}

std::string serialize_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (g.adjacent(u, v)) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

} // namespace sumcolor
