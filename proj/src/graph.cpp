#include "gmatch/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace gmatch {

namespace {

uint64_t edge_key(Vertex u, Vertex v) {
    return (static_cast<uint64_t>(u) << 32) | static_cast<uint32_t>(v);
}

}  // namespace

Graph::Graph(int n, std::vector<EdgePair> edges)
    : n_(n), edges_(std::move(edges)) {
    std::unordered_set<uint64_t> seen;
    seen.reserve(edges_.size() * 2);
    for (auto& e : edges_) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n_)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("self-loop");
        if (!seen.insert(edge_key(e.u, e.v)).second)
            throw std::invalid_argument("duplicate edge");
    }
    adj_start_.assign(n_ + 1, 0);
    for (const auto& e : edges_) {
        ++adj_start_[e.u + 1];
        ++adj_start_[e.v + 1];
    }
    for (int v = 0; v < n_; ++v) adj_start_[v + 1] += adj_start_[v];
    adj_.resize(edges_.size() * 2);
    std::vector<int> fill(adj_start_.begin(), adj_start_.end() - 1);
    for (int id = 0; id < num_edges(); ++id) {
        const auto& e = edges_[id];
        adj_[fill[e.u]++] = {e.v, id};
        adj_[fill[e.v]++] = {e.u, id};
    }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    return find_edge(u, v) != -1;
}

int Graph::find_edge(Vertex u, Vertex v) const {
    if (degree(u) > degree(v)) std::swap(u, v);
    for (const auto& ref : neighbors(u))
        if (ref.to == v) return ref.edge;
    return -1;
}

void Matching::match(Vertex u, Vertex v) {
    if (mate_[u] != kNoVertex) mate_[mate_[u]] = kNoVertex;
    if (mate_[v] != kNoVertex) mate_[mate_[v]] = kNoVertex;
    mate_[u] = v;
    mate_[v] = u;
}

void Matching::unmatch(Vertex v) {
    if (mate_[v] != kNoVertex) {
        mate_[mate_[v]] = kNoVertex;
        mate_[v] = kNoVertex;
    }
}

int Matching::size() const {
    int matched = 0;
    for (Vertex v = 0; v < num_vertices(); ++v)
        if (mate_[v] != kNoVertex) ++matched;
    return matched / 2;
}

std::vector<std::string> matching_violations(const Graph& g,
                                             const Matching& m) {
    std::vector<std::string> out;
    if (m.num_vertices() != g.num_vertices()) {
        out.push_back("matching covers " + std::to_string(m.num_vertices()) +
                      " vertices, graph has " +
                      std::to_string(g.num_vertices()));
        return out;
    }
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        Vertex w = m.mate(v);
        if (w == kNoVertex) continue;
        if (w < 0 || w >= g.num_vertices()) {
            out.push_back("mate of " + std::to_string(v + 1) +
                          " out of range");
            continue;
        }
        if (m.mate(w) != v)
            out.push_back("mate not symmetric at " + std::to_string(v + 1));
        if (v < w && !g.has_edge(v, w))
            out.push_back("matched pair " + std::to_string(v + 1) + " " +
                          std::to_string(w + 1) + " is not an edge");
    }
    return out;
}

ParsedGraph parse_dimacs(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1;
    long long declared_m = -1;
    long long edge_lines = 0;
    std::vector<EdgePair> edges;
    ParseWarnings warnings;
    std::unordered_set<uint64_t> seen;

    while (std::getline(in, line)) {
        ++lineno;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        char kind = line[first];
        std::istringstream ls(line.substr(first + 1));
        switch (kind) {
        case 'c':
            break;
        case 'p': {
            if (n != -1) throw ParseError(lineno, "second problem line");
            std::string fmt;
            if (!(ls >> fmt >> n >> declared_m) || fmt != "edge" || n < 0 ||
                declared_m < 0)
                throw ParseError(lineno, "malformed problem line, expected "
                                         "'p edge <n> <m>'");
            edges.reserve(static_cast<size_t>(declared_m));
            break;
        }
        case 'e': {
            if (n == -1)
                throw ParseError(lineno, "edge before problem line");
            long long u, v;
            if (!(ls >> u >> v))
                throw ParseError(lineno, "malformed edge line");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(lineno, "vertex id out of range");
            ++edge_lines;
            if (u == v) {
                ++warnings.self_loops;
                break;
            }
            Vertex a = static_cast<Vertex>(u - 1);
            Vertex b = static_cast<Vertex>(v - 1);
            if (a > b) std::swap(a, b);
            if (!seen.insert(edge_key(a, b)).second) {
                ++warnings.duplicate_edges;
                break;
            }
            edges.push_back({a, b});
            break;
        }
        default:
            throw ParseError(lineno, std::string("unknown line type '") +
                                         kind + "'");
        }
    }
    if (n == -1) throw ParseError(lineno, "missing problem line");
    if (edge_lines != declared_m)
        throw ParseError(lineno, "edge count mismatch: header says " +
                                     std::to_string(declared_m) + ", found " +
                                     std::to_string(edge_lines));
    return {Graph(n, std::move(edges)), warnings};
}

void write_dimacs(std::ostream& out, const Graph& g,
                  std::span<const std::string> comments) {
    for (const auto& c : comments) out << "c " << c << '\n';
    out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const auto& e : g.edges())
        out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

Matching parse_matching(std::istream& in, int num_vertices) {
    Matching m(num_vertices);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == 'c') continue;
        std::istringstream ls(line);
        long long u, v;
        if (!(ls >> u >> v)) throw ParseError(lineno, "malformed pair");
        if (u < 1 || u > num_vertices || v < 1 || v > num_vertices)
            throw ParseError(lineno, "vertex id out of range");
        if (u == v) throw ParseError(lineno, "vertex matched to itself");
        Vertex a = static_cast<Vertex>(u - 1);
        Vertex b = static_cast<Vertex>(v - 1);
        if (m.is_matched(a) || m.is_matched(b))
            throw ParseError(lineno, "vertex matched twice");
        m.match(a, b);
    }
    return m;
}

void write_matching(std::ostream& out, const Matching& m) {
    for (Vertex v = 0; v < m.num_vertices(); ++v)
        if (m.mate(v) > v) out << v + 1 << ' ' << m.mate(v) + 1 << '\n';
}

}  // namespace gmatch
