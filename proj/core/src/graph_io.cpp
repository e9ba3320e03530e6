#include "raagprobe/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "raagprobe/errors.hpp"

namespace raagprobe {

namespace {

bool significant(const std::string& line) {
    for (char c : line) {
        if (c == '#') return false;
        if (!std::isspace(static_cast<unsigned char>(c))) return true;
    }
    return false;
}

long parse_long(const std::string& token, int line_no, const char* what) {
    std::size_t used = 0;
    long value = 0;
    try {
        value = std::stol(token, &used);
    } catch (const std::exception&) {
        throw ParseError(line_no, std::string("expected ") + what + ", got '" + token + "'");
    }
    if (used != token.size()) {
        throw ParseError(line_no, std::string("expected ") + what + ", got '" + token + "'");
    }
    return value;
}

}  // namespace

Graph read_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    long n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (!significant(line)) continue;
        std::istringstream tokens(line);
        std::string head;
        tokens >> head;
        if (head == "n") {
            if (n >= 0) throw ParseError(line_no, "duplicate n line");
            std::string count;
            if (!(tokens >> count)) throw ParseError(line_no, "n line needs a vertex count");
            n = parse_long(count, line_no, "vertex count");
            if (n < 0) throw ParseError(line_no, "vertex count must be non-negative");
            std::string extra;
            if (tokens >> extra) throw ParseError(line_no, "trailing tokens after vertex count");
        } else if (head == "e") {
            if (n < 0) throw ParseError(line_no, "edge before n line");
            std::string us, vs;
            if (!(tokens >> us >> vs)) throw ParseError(line_no, "edge line needs two endpoints");
            long u = parse_long(us, line_no, "endpoint");
            long v = parse_long(vs, line_no, "endpoint");
            std::string extra;
            if (tokens >> extra) throw ParseError(line_no, "trailing tokens after edge");
            if (u < 0 || u >= n || v < 0 || v >= n) {
                throw ParseError(line_no, "endpoint out of range [0, " + std::to_string(n) + ")");
            }
            if (u == v) throw ParseError(line_no, "self-loop (" + us + "," + vs + ") not allowed");
            edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        } else {
            throw ParseError(line_no, "unknown directive '" + head + "'");
        }
    }
    if (n < 0) throw ParseError(line_no, "missing n line");
    return Graph(static_cast<int>(n), edges);
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open graph file: " + path);
    try {
        return read_graph(in);
    } catch (const ParseError& e) {
        throw ParseError(e.line(), path + ": " + e.message());
    }
}

void write_graph(const Graph& g, std::ostream& out) {
    out << "n " << g.vertex_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
}

void write_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write graph file: " + path);
    write_graph(g, out);
}

std::string graph_to_string(const Graph& g) {
    std::ostringstream out;
    write_graph(g, out);
    return out.str();
}

}
