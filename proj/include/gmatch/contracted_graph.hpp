#pragma once

#include <optional>
#include <vector>

#include "gmatch/level_search.hpp"

namespace gmatch {

/// Undoes every lcp / lcp_odd write of the interrupted breakthrough phase,
/// restoring labels to the start of that phase. The delayed union-find
/// already holds the blossom blocks of that moment, so afterwards the
/// state describes the contracted graph implicitly.
void revert_breakthrough_phase(SearchState& s);

enum class HEdgeKind { EvenEven, EvenOdd, MatchedUnlabeled, GrowFrontier };

/// An edge of the contracted graph, produced on demand from a graph edge.
struct HEdgeRecord {
    Vertex u_node, v_node;  // dbase block bases, aligned with the edge ends
    bool matched;
    HEdgeKind kind;
};

const char* h_edge_kind_name(HEdgeKind kind);

/// Read-only window onto the contracted graph H. Nodes are the blocks of
/// the delayed union-find, represented by their bases; edges are
/// classified from graph edges on demand and H is never materialized.
class ContractedView {
public:
    /// Expects a reverted state (see revert_breakthrough_phase).
    ContractedView(const Graph& g, const Matching& m, const SearchState& s);

    const Graph& graph() const { return *g_; }
    const Matching& matching() const { return *m_; }
    const SearchState& state() const { return *s_; }
    int delta_break() const { return s_->delta; }

    Vertex node_of(Vertex v) const { return s_->dbase.find_base(v); }
    bool is_node(Vertex v) const { return node_of(v) == v; }

    /// Members of a block, ascending vertex ids; singleton for non-bases.
    const std::vector<Vertex>& members(Vertex node) const {
        return members_[node];
    }

    /// All block bases, ascending.
    const std::vector<Vertex>& nodes() const { return nodes_; }

    /// A node is free when its base vertex is unmatched.
    bool is_free_node(Vertex node) const { return m_->is_free(node); }
    /// Matching partner node (blocks keep all pairs internal except the
    /// base's), or kNoVertex.
    Vertex mate_node(Vertex node) const {
        Vertex w = m_->mate(node);
        return w == kNoVertex ? kNoVertex : node_of(w);
    }

    /// Classifies one graph edge; nullopt when the edge has no image in H.
    std::optional<HEdgeRecord> classify(int edge) const;

private:
    const Graph* g_;
    const Matching* m_;
    const SearchState* s_;
    std::vector<Vertex> nodes_;
    std::vector<std::vector<Vertex>> members_;
};

/// Emits one "H-edge" trace line per classified edge, in edge-id order.
void trace_h_edges(const ContractedView& view, TraceSink& trace);

}  // namespace gmatch
