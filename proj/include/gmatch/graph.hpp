#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gmatch {

using Vertex = int;
inline constexpr Vertex kNoVertex = -1;

/// Adjacency entry: neighbor vertex plus the id of the connecting edge.
struct EdgeRef {
    Vertex to;
    int edge;
};

/// Endpoints of an undirected edge, normalized so that u < v.
struct EdgePair {
    Vertex u;
    Vertex v;
};

/// Immutable undirected simple graph. Vertex ids are 0-based internally
/// (1-based in the file format). Adjacency lists follow edge input order;
/// this ordering is part of the determinism contract of the solver.
class Graph {
public:
    Graph() = default;

    /// Throws std::invalid_argument on out-of-range ids, self-loops or
    /// duplicate edges. Callers that read untrusted input should go
    /// through parse_dimacs, which cleans the edge list first.
    Graph(int n, std::vector<EdgePair> edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    const std::vector<EdgePair>& edges() const { return edges_; }
    EdgePair edge(int id) const { return edges_[id]; }

    std::span<const EdgeRef> neighbors(Vertex v) const {
        return {adj_.data() + adj_start_[v],
                adj_.data() + adj_start_[v + 1]};
    }
    int degree(Vertex v) const { return adj_start_[v + 1] - adj_start_[v]; }

    bool has_edge(Vertex u, Vertex v) const;
    /// Edge id connecting u and v, or -1.
    int find_edge(Vertex u, Vertex v) const;

private:
    int n_ = 0;
    std::vector<EdgePair> edges_;
    std::vector<int> adj_start_;  // size n_+1
    std::vector<EdgeRef> adj_;
};

/// Mate array. A vertex with no mate is free.
class Matching {
public:
    Matching() = default;
    explicit Matching(int n) : mate_(n, kNoVertex) {}

    int num_vertices() const { return static_cast<int>(mate_.size()); }
    Vertex mate(Vertex v) const { return mate_[v]; }
    bool is_matched(Vertex v) const { return mate_[v] != kNoVertex; }
    bool is_free(Vertex v) const { return mate_[v] == kNoVertex; }
    bool contains(Vertex u, Vertex v) const { return mate_[u] == v; }

    /// Mates u and v, silently breaking any previous partnerships.
    void match(Vertex u, Vertex v);
    void unmatch(Vertex v);

    /// Number of matched pairs.
    int size() const;

private:
    std::vector<Vertex> mate_;
};

inline int matching_size(const Matching& m) { return m.size(); }

/// Symmetry and edge-existence violations, empty if the matching is valid.
std::vector<std::string> matching_violations(const Graph& g, const Matching& m);
inline bool validate_matching(const Graph& g, const Matching& m) {
    return matching_violations(g, m).empty();
}

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

struct ParseWarnings {
    int self_loops = 0;
    int duplicate_edges = 0;
};

struct ParsedGraph {
    Graph graph;
    ParseWarnings warnings;
};

/// DIMACS edge format: comment lines "c ...", one header "p edge <n> <m>",
/// then edge lines "e <u> <v>" with 1-based endpoints. Self-loops are
/// dropped and duplicate edges deduplicated, both counted as warnings.
ParsedGraph parse_dimacs(std::istream& in);

void write_dimacs(std::ostream& out, const Graph& g,
                  std::span<const std::string> comments = {});

/// Matching file: one line "<u> <v>" per matched edge, 1-based.
/// Edge existence is not checked here; validate_matching reports it.
Matching parse_matching(std::istream& in, int num_vertices);

/// Writes matched pairs "<u> <v>" with u < v, 1-based, sorted.
void write_matching(std::ostream& out, const Matching& m);

}  // namespace gmatch
