#pragma once

#include <list>
#include <vector>

#include "gmatch/blossom_expand.hpp"
#include "gmatch/contracted_graph.hpp"
#include "gmatch/trace.hpp"

namespace gmatch {

/// Augmenting path in the contracted graph: the node sequence plus, for
/// every consecutive pair, the graph edge realizing the step (endpoints
/// aligned with the two blocks).
struct ContractedPath {
    struct Step {
        Vertex g_from, g_to;
        bool matched;
    };
    std::vector<Vertex> h_nodes;
    std::vector<Step> steps;  // steps.size() == h_nodes.size() - 1
};

/// Depth-first extraction of a maximal set of vertex-disjoint augmenting
/// paths in the contracted graph, run directly on the underlying graph
/// filtered through the view's edge classification.
///
/// Blossom-closing edges are explored forward only: an edge xy triggers a
/// blossom step when y's blossom became even strictly after x's, tested in
/// O(1) by comparing eventimes. The odd path nodes then become even and
/// are scanned nearest-to-base first, which keeps the invariant that a
/// breakthrough's path can be read off the search state.
class PathPacking {
public:
    explicit PathPacking(const ContractedView& view,
                         TraceSink* trace = nullptr);

    void run();

    const std::vector<ContractedPath>& paths() const { return paths_; }
    bool in_path_set(Vertex node) const { return in_cp_[node]; }

    /// Canonical even alternating path from a free node to x, blossom
    /// interiors expanded; x must be even.
    std::vector<Vertex> canonical_path(Vertex node) const;

    /// Fills blossom interiors of every found path and validates the
    /// result: vertex-disjoint simple alternating paths of uniform length
    /// 2*delta-1 with free endpoints. Emits "dfs path" trace lines.
    std::vector<std::vector<Vertex>> lift_paths() const;

    /// Lifts a single contracted path (no trace, no cross-path checks).
    std::vector<Vertex> lift_path(const ContractedPath& path) const;

    /// Structural checks after run(): completely scanned even endpoints of
    /// any scanned edge share a blossom, and the eventime comparison agrees
    /// with the ancestry walk everywhere it was used.
    void check_consistency() const;

    // introspection for tests
    enum class NodeLabel : unsigned char { Unused, Even, Odd };
    NodeLabel node_label(Vertex node) const { return hlabel_[node]; }
    int eventime(Vertex node) const { return eventime_[node]; }
    Vertex blossom_base(Vertex node) const {
        return blossoms_.find_base(node);
    }
    const std::list<Vertex>& children(Vertex base) const {
        return children_[base];
    }
    bool fully_scanned(Vertex node) const { return fully_scanned_[node]; }

private:
    struct GrowRec {
        Vertex from_h = kNoVertex;  // scanning node
        Vertex g_from = kNoVertex;  // scan edge endpoint in from_h's block
    };
    struct BridgeRec {
        Vertex x_h = kNoVertex, y_h = kNoVertex;  // scanner / descendant side
        Vertex g_x = kNoVertex, g_y = kNoVertex;  // edge ends, same sides
    };
    struct ScanEdge {
        Vertex y_node;
        Vertex g_from, g_to;
    };
    struct Frame {
        Vertex node;
        size_t member = 0;
        size_t adj = 0;
    };

    friend struct PackForest;

    bool search_from(Vertex root);
    bool next_scan_edge(Frame& f, ScanEdge& out) const;
    void blossom_step(Vertex x_node, Vertex y_node, const ScanEdge& e,
                      std::vector<Frame>& stack);
    void build_canonical(Vertex node, ContractedPath& out) const;
    ContractedPath assemble_found_path(Vertex x_node, const ScanEdge& e);
    void expand_climb(Vertex from, Vertex to, ContractedPath& out) const;
    ContractedPath::Step resolve_conn(detail::Conn conn, Vertex prev,
                                      Vertex next) const;
    bool is_tree_ancestor(Vertex anc_base, Vertex node) const;

    const ContractedView* view_;
    TraceSink* trace_;
    int n_;
    std::vector<NodeLabel> hlabel_;
    std::vector<int> eventime_;
    int clock_ = 0;
    LoggedUnionFind blossoms_;
    enum class EvenHow : unsigned char { None, Root, Grown, BlossomStep };
    std::vector<EvenHow> how_;
    std::vector<Vertex> parent3_;  // odd: scanning node; even: its odd mate
    std::vector<GrowRec> grow_rec_;
    std::vector<BridgeRec> bridge_rec_;
    std::vector<std::list<Vertex>> children_;
    std::vector<std::list<Vertex>::iterator> child_pos_;
    std::vector<bool> fully_scanned_;
    std::vector<bool> in_cp_;
    std::vector<std::pair<Vertex, Vertex>> scanned_pairs_;
    std::vector<ContractedPath> paths_;
};

/// Mates the endpoints of every non-matching edge along each path; old
/// partnerships break automatically. Paths must be vertex-disjoint
/// alternating paths with free endpoints.
void augment(Matching& m, const std::vector<std::vector<Vertex>>& paths);

}  // namespace gmatch
