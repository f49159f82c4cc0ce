#include "multipede/io.hpp"

#include <fstream>
#include <sstream>

#include "multipede/errors.hpp"

namespace multipede {

namespace {

// Next non-empty line, stripped of trailing CR. False at end of stream.
bool next_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) return true;
    }
    return false;
}

int parse_int(const std::string& tok, const char* what) {
    size_t pos = 0;
    int v;
    try {
        v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
        throw InputError(std::string("bad ") + what + ": " + tok);
    }
    if (pos != tok.size()) throw InputError(std::string("bad ") + what + ": " + tok);
    return v;
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string t;
    while (ss >> t) out.push_back(t);
    return out;
}

Edge parse_edge_line(const std::vector<std::string>& tok, int n,
                     const std::vector<Edge>& sofar) {
    int a = parse_int(tok[1], "vertex");
    int b = parse_int(tok[2], "vertex");
    int c = parse_int(tok[3], "vertex");
    if (!(0 <= a && a < b && b < c && c < n))
        throw InputError("edge not strictly increasing in range: " + tok[1] + " " + tok[2] +
                         " " + tok[3]);
    Edge e{a, b, c};
    if (!sofar.empty() && !(sofar.back() < e))
        throw InputError("edges not in lexicographic order or duplicated");
    return e;
}

}  // namespace

std::string serialize_hg(const Hypergraph& h) {
    std::ostringstream out;
    out << "hg 1\n" << "n " << h.n() << "\n";
    for (const Edge& e : h.edges()) out << "e " << e[0] << " " << e[1] << " " << e[2] << "\n";
    return out.str();
}

Hypergraph parse_hg(std::istream& in) {
    std::string line;
    if (!next_line(in, line) || line != "hg 1") throw InputError("expected header 'hg 1'");
    if (!next_line(in, line)) throw InputError("expected 'n <count>' line");
    auto tok = tokens(line);
    if (tok.size() != 2 || tok[0] != "n") throw InputError("expected 'n <count>' line");
    int n = parse_int(tok[1], "vertex count");
    if (n < 0) throw InputError("negative vertex count");
    std::vector<Edge> edges;
    while (next_line(in, line)) {
        tok = tokens(line);
        if (tok.size() != 4 || tok[0] != "e") throw InputError("bad edge line: " + line);
        edges.push_back(parse_edge_line(tok, n, edges));
    }
    return Hypergraph(n, edges);
}

Hypergraph load_hg(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return parse_hg(in);
}

void save_hg(const Hypergraph& h, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << serialize_hg(h);
}

std::string serialize_mpd(const Multipede& m) {
    std::ostringstream out;
    out << "mpd 1\n" << "level " << m.level << "\n" << "segments " << m.seg.n() << "\n";
    const auto& edges = m.seg.edges();
    for (size_t i = 0; i < edges.size(); ++i)
        out << "e " << edges[i][0] << " " << edges[i][1] << " " << edges[i][2] << " p "
            << int(m.parity[i]) << "\n";
    return out.str();
}

Multipede parse_mpd(std::istream& in) {
    std::string line;
    if (!next_line(in, line) || line != "mpd 1") throw InputError("expected header 'mpd 1'");
    if (!next_line(in, line)) throw InputError("expected 'level <1|2|3|4>' line");
    auto tok = tokens(line);
    if (tok.size() != 2 || tok[0] != "level") throw InputError("expected 'level' line");
    int level = parse_int(tok[1], "level");
    if (level < 1 || level > 4) throw InputError("level out of range");
    if (!next_line(in, line)) throw InputError("expected 'segments <n>' line");
    tok = tokens(line);
    if (tok.size() != 2 || tok[0] != "segments") throw InputError("expected 'segments' line");
    int n = parse_int(tok[1], "segment count");
    if (n < 0) throw InputError("negative segment count");
    std::vector<Edge> edges;
    std::vector<uint8_t> parity;
    while (next_line(in, line)) {
        tok = tokens(line);
        if (tok.size() != 6 || tok[0] != "e" || tok[4] != "p")
            throw InputError("bad multipede edge line: " + line);
        edges.push_back(parse_edge_line(tok, n, edges));
        int p = parse_int(tok[5], "parity bit");
        if (p != 0 && p != 1) throw InputError("parity bit must be 0 or 1");
        parity.push_back(static_cast<uint8_t>(p));
    }
    return build_multipede(Hypergraph(n, edges), parity, level);
}

Multipede load_mpd(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return parse_mpd(in);
}

void save_mpd(const Multipede& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << serialize_mpd(m);
}

}  // namespace multipede
