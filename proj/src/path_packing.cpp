#include "gmatch/path_packing.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "gmatch/blossom_expand.hpp"

namespace gmatch {

namespace {

[[noreturn]] void fail(const char* what) { throw std::logic_error(what); }

/// Phase-1 forest seen through the reverted search state; expands block
/// interiors when lifting contracted paths to graph paths.
struct LiftForest {
    const SearchState* s;
    bool born_even(Vertex v) const { return !s->born_odd[v]; }
    Vertex even_parent(Vertex v) const { return s->forest_parent[v]; }
    Vertex odd_parent(Vertex p) const { return s->forest_parent[p]; }
    std::pair<Vertex, Vertex> bridge_ends(Vertex v) const {
        const BridgeRef& r = s->bridge_of[v];
        assert(r.x != kNoVertex);
        if (r.side_is_x) return {r.x, r.y};
        return {r.y, r.x};
    }
};

}  // namespace

/// The packing's own forest over contracted nodes.
struct PackForest {
    const PathPacking* pp;
    bool born_even(Vertex h) const {
        return pp->how_[h] != PathPacking::EvenHow::BlossomStep;
    }
    Vertex even_parent(Vertex h) const { return pp->parent3_[h]; }
    Vertex odd_parent(Vertex p) const { return pp->grow_rec_[p].from_h; }
    std::pair<Vertex, Vertex> bridge_ends(Vertex v) const {
        const PathPacking::BridgeRec& r = pp->bridge_rec_[v];
        assert(r.x_h != kNoVertex);
        return {r.y_h, r.x_h};  // the descendant side lies below v
    }
};

PathPacking::PathPacking(const ContractedView& view, TraceSink* trace)
    : view_(&view),
      trace_(trace),
      n_(view.graph().num_vertices()),
      hlabel_(n_, NodeLabel::Unused),
      eventime_(n_, -1),
      blossoms_(n_),
      how_(n_, EvenHow::None),
      parent3_(n_, kNoVertex),
      grow_rec_(n_),
      bridge_rec_(n_),
      children_(n_),
      child_pos_(n_),
      fully_scanned_(n_, false),
      in_cp_(n_, false) {}

void PathPacking::run() {
    for (Vertex f : view_->nodes()) {
        if (!view_->is_free_node(f) || in_cp_[f]) continue;
        assert(hlabel_[f] == NodeLabel::Unused);
        hlabel_[f] = NodeLabel::Even;
        how_[f] = EvenHow::Root;
        eventime_[f] = clock_++;
        search_from(f);
    }
}

/// Flattened iteration over the classified non-matching edges out of a
/// contracted node: block members in ascending id order, each member's
/// adjacency in input order.
bool PathPacking::next_scan_edge(Frame& f, ScanEdge& out) const {
    const Graph& g = view_->graph();
    const auto& members = view_->members(f.node);
    while (f.member < members.size()) {
        Vertex w = members[f.member];
        auto adj = g.neighbors(w);
        while (f.adj < adj.size()) {
            const EdgeRef& ref = adj[f.adj++];
            auto rec = view_->classify(ref.edge);
            if (!rec || rec->matched) continue;
            if (rec->u_node == f.node)
                out = {rec->v_node, w, ref.to};
            else if (rec->v_node == f.node)
                out = {rec->u_node, w, ref.to};
            else
                continue;
            return true;
        }
        ++f.member;
        f.adj = 0;
    }
    return false;
}

bool PathPacking::search_from(Vertex root) {
    std::vector<Frame> stack;
    stack.push_back({root});
    while (!stack.empty()) {
        Frame& f = stack.back();
        ScanEdge e;
        if (!next_scan_edge(f, e)) {
            fully_scanned_[f.node] = true;
            stack.pop_back();
            continue;
        }
        Vertex x = f.node;
        Vertex y = e.y_node;
        if (hlabel_[y] == NodeLabel::Unused) {
            scanned_pairs_.push_back({x, y});
            if (view_->is_free_node(y)) {
                // augmenting path found; unwind the whole search
                hlabel_[y] = NodeLabel::Even;
                how_[y] = EvenHow::Root;
                eventime_[y] = clock_++;
                paths_.push_back(assemble_found_path(x, e));
                for (Vertex h : paths_.back().h_nodes) in_cp_[h] = true;
                stack.clear();
                return true;
            }
            Vertex y2 = view_->mate_node(y);
            assert(y2 != kNoVertex && hlabel_[y2] == NodeLabel::Unused);
            hlabel_[y] = NodeLabel::Odd;
            parent3_[y] = x;
            grow_rec_[y] = {x, e.g_from};
            Vertex bx = blossoms_.find_base(x);
            children_[bx].push_back(y);
            child_pos_[y] = std::prev(children_[bx].end());
            hlabel_[y2] = NodeLabel::Even;
            parent3_[y2] = y;
            how_[y2] = EvenHow::Grown;
            eventime_[y2] = clock_++;
            if (trace_) trace_->dfs_grow(x, y, y2);
            stack.push_back({y2});
            continue;
        }
        scanned_pairs_.push_back({x, y});
        Vertex by = blossoms_.find_base(y);
        Vertex bx = blossoms_.find_base(x);
        bool forward = hlabel_[by] == NodeLabel::Even && by != bx &&
                       eventime_[by] > eventime_[bx];
        if (n_ <= 64 && hlabel_[by] == NodeLabel::Even && by != bx) {
            // the eventime comparison must agree with tree ancestry
            if (forward != is_tree_ancestor(bx, by))
                fail("eventime order disagrees with the descendant test");
        }
        if (forward) blossom_step(x, y, e, stack);
    }
    return false;
}

bool PathPacking::is_tree_ancestor(Vertex anc_base, Vertex base) const {
    Vertex cur = base;
    for (;;) {
        if (cur == anc_base) return true;
        Vertex u = parent3_[cur];
        if (u == kNoVertex) return false;
        assert(parent3_[u] != kNoVertex);
        cur = blossoms_.find_base(parent3_[u]);
    }
}

void PathPacking::blossom_step(Vertex x_node, Vertex y_node,
                               const ScanEdge& e,
                               std::vector<Frame>& stack) {
    Vertex bx = blossoms_.find_base(x_node);
    // tree path from b(y) up to b(x): odd nodes us, blossom bases vs
    std::vector<Vertex> us, vs;
    Vertex cur = blossoms_.find_base(y_node);
    while (cur != bx) {
        Vertex u = parent3_[cur];
        if (u == kNoVertex) fail("blossom step walked past a root");
        us.push_back(u);
        vs.push_back(cur);
        cur = blossoms_.find_base(parent3_[u]);
    }
    std::reverse(us.begin(), us.end());  // u_1 nearest the base first
    std::reverse(vs.begin(), vs.end());
    const size_t k = us.size();
    assert(k > 0);
    if (trace_) trace_->dfs_blossom(x_node, y_node, bx);

    // merged children list: l_0 .. l_{k-1} c r_{k-1} .. r_0, where v_i's
    // list splits around the path child u_{i+1}
    std::list<Vertex> merged;
    std::vector<std::list<Vertex>> rights(k);
    for (size_t i = 0; i < k; ++i) {
        Vertex owner = i == 0 ? bx : vs[i - 1];
        std::list<Vertex>& lst = children_[owner];
        auto it = child_pos_[us[i]];
        merged.splice(merged.end(), lst, lst.begin(), it);
        lst.erase(it);
        rights[i].swap(lst);
    }
    merged.splice(merged.end(), children_[vs[k - 1]]);
    for (size_t i = k; i-- > 0;)
        merged.splice(merged.end(), rights[i]);
    children_[bx] = std::move(merged);

    for (Vertex u : us) {
        hlabel_[u] = NodeLabel::Even;
        eventime_[u] = clock_++;
        how_[u] = EvenHow::BlossomStep;
        bridge_rec_[u] = {x_node, y_node, e.g_from, e.g_to};
    }
    for (Vertex u : us) blossoms_.unite(bx, u, bx);
    for (Vertex v : vs) blossoms_.unite(bx, v, bx);

    // scan u_1 first: push in reverse
    for (size_t i = k; i-- > 0;) stack.push_back({us[i]});
}

void PathPacking::expand_climb(Vertex from, Vertex to,
                               ContractedPath& out) const {
    bool pending = false;
    detail::Conn conn{};
    detail::expand_even_path(
        PackForest{this}, from, to,
        [&](Vertex h) {
            if (pending) {
                out.steps.push_back(
                    resolve_conn(conn, out.h_nodes.back(), h));
                pending = false;
            }
            out.h_nodes.push_back(h);
        },
        [&](detail::Conn c) {
            assert(!pending);
            conn = c;
            pending = true;
        });
}

/// Maps a walker connector between two contracted nodes onto the graph
/// edge crossing it, endpoints aligned with (prev, next).
ContractedPath::Step PathPacking::resolve_conn(detail::Conn conn,
                                               Vertex prev,
                                               Vertex next) const {
    switch (conn.kind) {
    case detail::ConnKind::Matched:
        // matched steps join two bases directly
        assert(view_->matching().contains(prev, next));
        return {prev, next, true};
    case detail::ConnKind::GrowUp: {
        const GrowRec& rec = grow_rec_[conn.ref];
        if (prev == conn.ref) {
            assert(next == rec.from_h);
            return {conn.ref, rec.g_from, false};
        }
        assert(prev == rec.from_h && next == conn.ref);
        return {rec.g_from, conn.ref, false};
    }
    case detail::ConnKind::Bridge: {
        const BridgeRec& rec = bridge_rec_[conn.ref];
        if (prev == rec.y_h) {
            assert(next == rec.x_h);
            return {rec.g_y, rec.g_x, false};
        }
        assert(prev == rec.x_h && next == rec.y_h);
        return {rec.g_x, rec.g_y, false};
    }
    }
    fail("unknown connector");
}

/// Canonical path to an even node, built from the back-links: growth gives
/// P(y') = P(x) y y', a blossom step gives P(u) = P(x), the bridge, then
/// the climb from the descendant endpoint up to u with nested blossoms
/// expanded. Collected root-ward, emitted forward.
void PathPacking::build_canonical(Vertex node, ContractedPath& out) const {
    if (hlabel_[node] != NodeLabel::Even)
        fail("canonical path of a non-even node");
    struct Piece {
        EvenHow kind;
        Vertex node;
    };
    std::vector<Piece> pieces;
    Vertex cur = node;
    for (;;) {
        EvenHow how = how_[cur];
        pieces.push_back({how, cur});
        if (how == EvenHow::Root) break;
        if (how == EvenHow::Grown)
            cur = grow_rec_[parent3_[cur]].from_h;
        else if (how == EvenHow::BlossomStep)
            cur = bridge_rec_[cur].x_h;
        else
            fail("broken canonical back-link");
    }
    std::reverse(pieces.begin(), pieces.end());
    for (const Piece& piece : pieces) {
        switch (piece.kind) {
        case EvenHow::Root:
            assert(out.h_nodes.empty());
            out.h_nodes.push_back(piece.node);
            break;
        case EvenHow::Grown: {
            Vertex y = parent3_[piece.node];
            const GrowRec& rec = grow_rec_[y];
            assert(out.h_nodes.back() == rec.from_h);
            out.steps.push_back({rec.g_from, y, false});
            out.h_nodes.push_back(y);
            out.steps.push_back({y, piece.node, true});
            out.h_nodes.push_back(piece.node);
            break;
        }
        case EvenHow::BlossomStep: {
            const BridgeRec& rec = bridge_rec_[piece.node];
            assert(out.h_nodes.back() == rec.x_h);
            out.steps.push_back({rec.g_x, rec.g_y, false});
            expand_climb(rec.y_h, piece.node, out);
            break;
        }
        default:
            fail("broken canonical back-link");
        }
    }
}

ContractedPath PathPacking::assemble_found_path(Vertex x_node,
                                                const ScanEdge& e) {
    ContractedPath out;
    build_canonical(x_node, out);
    out.steps.push_back({e.g_from, e.g_to, false});
    out.h_nodes.push_back(e.y_node);
    assert(out.steps.size() + 1 == out.h_nodes.size());
    return out;
}

std::vector<Vertex> PathPacking::canonical_path(Vertex node) const {
    ContractedPath cp;
    build_canonical(node, cp);
    return cp.h_nodes;
}

std::vector<Vertex> PathPacking::lift_path(const ContractedPath& cp) const {
    const SearchState& s = view_->state();
    std::vector<Vertex> out;
    LiftForest forest{&s};
    for (size_t i = 0; i < cp.h_nodes.size(); ++i) {
        Vertex h = cp.h_nodes[i];
        const ContractedPath::Step* left = i > 0 ? &cp.steps[i - 1] : nullptr;
        const ContractedPath::Step* right =
            i + 1 < cp.h_nodes.size() ? &cp.steps[i] : nullptr;
        if (left && left->matched && left->g_to != h)
            fail("matched step not entering at a base");
        if (right && right->matched && right->g_from != h)
            fail("matched step not leaving from a base");
        Vertex v_nm;
        bool entering;  // the non-matching step enters from the left
        if (left && !left->matched) {
            v_nm = left->g_to;
            entering = true;
            if (right && !right->matched)
                fail("two non-matching steps at one node");
        } else if (right && !right->matched) {
            v_nm = right->g_from;
            entering = false;
        } else {
            fail("contracted path node without a non-matching step");
        }
        std::vector<Vertex> segment;
        detail::expand_even_path(
            forest, v_nm, h, [&](Vertex v) { segment.push_back(v); },
            [](detail::Conn) {});
        if (!entering) std::reverse(segment.begin(), segment.end());
        out.insert(out.end(), segment.begin(), segment.end());
    }
    return out;
}

std::vector<std::vector<Vertex>> PathPacking::lift_paths() const {
    const Graph& g = view_->graph();
    const Matching& m = view_->matching();
    const size_t len = 2 * view_->delta_break() - 1;
    std::vector<std::vector<Vertex>> out;
    std::vector<char> used(n_, 0);
    for (const ContractedPath& cp : paths_) {
        std::vector<Vertex> path = lift_path(cp);
        if (path.size() != len + 1)
            fail("lifted path does not have length 2*delta-1");
        if (!m.is_free(path.front()) || !m.is_free(path.back()))
            fail("lifted path endpoint is not free");
        for (size_t i = 0; i < path.size(); ++i) {
            if (used[path[i]]) fail("lifted paths share a vertex");
            used[path[i]] = 1;
            if (i + 1 == path.size()) break;
            if (!g.has_edge(path[i], path[i + 1]))
                fail("lifted path uses a non-edge");
            bool matched = m.contains(path[i], path[i + 1]);
            if (matched != (i % 2 == 1))
                fail("lifted path does not alternate");
        }
        if (trace_) trace_->dfs_path(path);
        out.push_back(std::move(path));
    }
    return out;
}

void PathPacking::check_consistency() const {
    for (auto [a, b] : scanned_pairs_) {
        if (hlabel_[a] != NodeLabel::Even || hlabel_[b] != NodeLabel::Even)
            continue;
        if (!fully_scanned_[a] || !fully_scanned_[b]) continue;
        if (!blossoms_.same_block(a, b))
            fail("completely scanned even endpoints in distinct blossoms");
    }
}

void augment(Matching& m, const std::vector<std::vector<Vertex>>& paths) {
    for (const auto& path : paths) {
        assert(path.size() % 2 == 0);
        for (size_t i = 0; i + 1 < path.size(); i += 2)
            m.match(path[i], path[i + 1]);
    }
}

}  // namespace gmatch
