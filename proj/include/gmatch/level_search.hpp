#pragma once

#include <functional>
#include <vector>

#include "gmatch/bucket_queue.hpp"
#include "gmatch/graph.hpp"
#include "gmatch/trace.hpp"
#include "gmatch/union_find.hpp"

namespace gmatch {

enum class Label : unsigned char { Unlabeled, Even, Odd };

/// Bridge that turned a born-odd vertex even, plus which endpoint lies on
/// the vertex's own side of the blossom cycle. Needed when lifting paths
/// through blossom interiors.
struct BridgeRef {
    Vertex x = kNoVertex;
    Vertex y = kNoVertex;
    bool side_is_x = false;  // true: x is on this vertex's side
};

/// One deferred write of the current phase. All lcp writes are first
/// writes, so reverting a phase just clears the touched fields.
struct LcpWrite {
    Vertex v;
    bool odd_field;  // true: lcp_odd, false: lcp
};

/// State of the phased search for the shortest augmenting path length.
///
/// lcp(v) is the length of a shortest even alternating path from a free
/// vertex (defined exactly for even vertices, free vertices have 0) and
/// lcp_odd(v) the odd counterpart. Phases are numbered by delta; phase
/// delta grows out of even vertices at level delta-2 and processes bridges
/// with lcp-sum 2*delta-2.
struct SearchState {
    int n = 0;
    std::vector<int> lcp;        // -1 = undefined
    std::vector<int> lcp_odd;    // -1 = undefined
    std::vector<bool> born_odd;  // entered the structure as an odd vertex
    std::vector<Vertex> forest_parent;  // tree edge toward the root
    std::vector<Vertex> tree_root;      // free vertex rooting the tree
    std::vector<BridgeRef> bridge_of;   // set when a born-odd vertex evens
    LoggedUnionFind base;   // live blossom blocks
    LoggedUnionFind dbase;  // blocks as of the previous phase end
    BucketQueue queue;
    int delta = 0;
    std::vector<LcpWrite> lcp_log;  // writes of the current phase

    // scratch for the lock-step blossom walk
    mutable std::vector<int> walk_stamp;
    mutable std::vector<int> walk_mark;  // encodes side and step index
    mutable int walk_generation = 0;

    SearchState() = default;
    explicit SearchState(int n_);

    bool is_even(Vertex v) const { return lcp[v] >= 0; }
    bool is_odd(Vertex v) const {
        return lcp[v] < 0 && born_odd[v] && lcp_odd[v] >= 0;
    }
    bool in_structure(Vertex v) const { return is_even(v) || is_odd(v); }
    Label label(Vertex v) const {
        if (is_even(v)) return Label::Even;
        if (is_odd(v)) return Label::Odd;
        return Label::Unlabeled;
    }
};

/// Result of the lock-step walk from the blocks of two bridge endpoints
/// toward their roots. On a meet, odd vertices and block bases are listed
/// bottom-up per side, excluding the meet block itself.
struct BlossomWalk {
    bool met = false;
    Vertex base = kNoVertex;  // base vertex of the meet block
    std::vector<Vertex> odds_x, odds_y;
    std::vector<Vertex> blocks_x, blocks_y;  // base vertices of path blocks
};

/// Alternately advances two pointers from the blocks of x and y toward the
/// roots, marking visited blocks with a per-call stamp, and returns the
/// first common block or distinct-roots. Cost is proportional to the
/// shorter path prefix plus the size of the blossom found.
BlossomWalk find_blossom_base(const SearchState& s, Vertex x, Vertex y);

struct SearchOptions {
    /// Run every phase through delta = n+1 even if no augmenting path
    /// exists; required before building a certificate. Without it the
    /// search stops after phase floor(n/2), which is enough to find a
    /// shortest augmenting path if there is one.
    bool full_run = false;
    TraceSink* trace = nullptr;
    /// Called at the end of each completed phase and once after a
    /// breakthrough (with breakthrough=true, before any log replay).
    std::function<void(const SearchState&, int delta, bool breakthrough)>
        on_phase_end;
    /// O(m)-per-phase structural checks (throws std::logic_error).
    bool check_invariants = false;
};

struct SearchResult {
    bool found = false;
    int delta_break = -1;       // breakthrough phase; sap length 2*delta-1
    int breakthrough_edge = -1;  // edge id joining two trees
    SearchState state;
};

/// Phase-driven growth of the search structures: grow steps expand trees
/// breadth-first, bridge steps close blossoms or detect an augmenting
/// path. On a breakthrough the state keeps the lcp log of the interrupted
/// phase and the un-replayed base log, which is exactly what the
/// contracted view needs.
SearchResult run_level_search(const Graph& g, const Matching& m,
                              const SearchOptions& opts = {});

}  // namespace gmatch
