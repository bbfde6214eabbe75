#include "chibound/io.hpp"

#include <fstream>
#include <sstream>

#include "chibound/errors.hpp"

namespace chibound::io {

namespace {

[[noreturn]] void bad(const std::string& what, int line, int col) {
    std::ostringstream msg;
    msg << "line " << line << ", column " << col << ": " << what;
    throw ParseError(msg.str(), line, col);
}

// Column (1-based) of the first character of the k-th whitespace token.
int token_column(const std::string& line, int k) {
    int col = 0, tok = 0;
    bool in_tok = false;
    for (size_t i = 0; i < line.size(); ++i) {
        bool ws = line[i] == ' ' || line[i] == '\t' || line[i] == '\r';
        if (!ws && !in_tok) {
            in_tok = true;
            if (tok == k) return (int)i + 1;
            ++tok;
        } else if (ws) {
            in_tok = false;
        }
    }
    return col + 1;
}

long long parse_int(const std::string& tok, const std::string& line_text, int line, int tok_idx) {
    try {
        size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        bad("expected an integer, got '" + tok + "'", line, token_column(line_text, tok_idx));
    }
}

} // namespace

Graph read_dimacs(std::istream& in) {
    std::string line;
    int lineno = 0;
    long long n = -1, m_declared = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string head;
        if (!(ss >> head)) continue;
        if (head == "c") continue;
        if (head == "p") {
            std::string fmt;
            std::string ntok, mtok;
            if (!(ss >> fmt >> ntok >> mtok)) bad("malformed problem line, want 'p edge n m'", lineno, 1);
            if (fmt != "edge" && fmt != "col") bad("unknown problem format '" + fmt + "'", lineno, token_column(line, 1));
            n = parse_int(ntok, line, lineno, 2);
            m_declared = parse_int(mtok, line, lineno, 3);
            if (n < 0) bad("negative vertex count", lineno, token_column(line, 2));
            continue;
        }
        if (head == "e") {
            if (n < 0) bad("edge line before problem line", lineno, 1);
            std::string utok, vtok;
            if (!(ss >> utok >> vtok)) bad("malformed edge line, want 'e u v'", lineno, 1);
            long long u = parse_int(utok, line, lineno, 1);
            long long v = parse_int(vtok, line, lineno, 2);
            if (u < 1 || u > n) bad("endpoint " + utok + " outside 1.." + std::to_string(n), lineno, token_column(line, 1));
            if (v < 1 || v > n) bad("endpoint " + vtok + " outside 1.." + std::to_string(n), lineno, token_column(line, 2));
            if (u == v) bad("self-loop rejected", lineno, token_column(line, 1));
            edges.emplace_back((int)u - 1, (int)v - 1);
            continue;
        }
        bad("unknown record '" + head + "'", lineno, 1);
    }
    if (n < 0) bad("missing problem line", lineno + 1, 1);
    (void)m_declared; // declared m is advisory; duplicates are deduplicated
    return Graph::from_edges((int)n, edges);
}

Graph read_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    long long declared_n = -1;
    long long max_seen = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string first;
        if (!(ss >> first)) continue;
        if (first == "#") {
            std::string key;
            if (ss >> key && key == "n") {
                std::string ntok;
                if (ss >> ntok) declared_n = parse_int(ntok, line, lineno, 2);
            }
            continue;
        }
        std::string vtok;
        if (!(ss >> vtok)) bad("expected 'u v' pair", lineno, 1);
        long long u = parse_int(first, line, lineno, 0);
        long long v = parse_int(vtok, line, lineno, 1);
        if (u < 0) bad("negative vertex " + first, lineno, token_column(line, 0));
        if (v < 0) bad("negative vertex " + vtok, lineno, token_column(line, 1));
        if (u == v) bad("self-loop rejected", lineno, token_column(line, 0));
        std::string extra;
        if (ss >> extra) bad("trailing token '" + extra + "'", lineno, token_column(line, 2));
        max_seen = std::max({max_seen, u, v});
        edges.emplace_back((int)u, (int)v);
    }
    long long n = declared_n >= 0 ? declared_n : max_seen + 1;
    if (n < max_seen + 1) bad("declared n smaller than largest vertex", lineno, 1);
    if (n < 0) n = 0;
    return Graph::from_edges((int)n, edges);
}

Graph read_auto(std::istream& in) {
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    std::istringstream probe(text);
    std::string line;
    while (std::getline(probe, line)) {
        std::istringstream ss(line);
        std::string head;
        if (!(ss >> head)) continue;
        std::istringstream replay(text);
        if (head == "p" || head == "c" || head == "e") return read_dimacs(replay);
        return read_edge_list(replay);
    }
    std::istringstream replay(text);
    return read_edge_list(replay); // empty input: empty graph
}

Graph read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "' for reading");
    return read_auto(in);
}

void write_dimacs(const Graph& g, std::ostream& out) {
    out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << "# n " << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

void write_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    auto dot = path.rfind('.');
    std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
    if (ext == "col" || ext == "dimacs")
        write_dimacs(g, out);
    else
        write_edge_list(g, out);
}

} // namespace chibound::io
