#pragma once

#include <algorithm>
#include <cassert>
#include <utility>
#include <vector>

#include "gmatch/graph.hpp"

namespace gmatch::detail {

/// Connector between two consecutive nodes of an expanded path. Sinks that
/// need edge identities resolve it against the emitting forest's records;
/// sinks that only need the node sequence ignore it.
enum class ConnKind : unsigned char {
    Matched,  // ref: the even node whose matched edge is crossed
    GrowUp,   // ref: the odd node whose growth edge is crossed
    Bridge,   // ref: the node whose blossom bridge is crossed
};

struct Conn {
    ConnKind kind;
    Vertex ref;
};

/// Emits the even-length alternating path from `from` up to its ancestor
/// `to` inside a nest of blossoms, interleaving nodes and connectors.
///
/// The forest supplies:
///   bool born_even(v)                  false for nodes evened by a bridge
///   Vertex even_parent(v)              mate of a born-even node
///   Vertex odd_parent(p)               node a born-odd p was grown from
///   pair<Vertex,Vertex> bridge_ends(v) {endpoint below v, other endpoint}
///
/// Born-even nodes climb two tree levels at a time; a born-odd node v is
/// replaced by the detour through its bridge: the walk from the endpoint
/// below v up to v, reversed, then the bridge, then the other endpoint's
/// climb. Iterative so deeply nested blossoms cannot overflow the stack.
template <class Forest, class NodeFn, class ConnFn>
void expand_even_path(const Forest& f, Vertex from, Vertex to,
                      NodeFn&& emit_node, ConnFn&& emit_conn) {
    struct Chunk {
        std::vector<Vertex> nodes;
        std::vector<Conn> conns;  // conns[i] sits between nodes[i], nodes[i+1]
    };
    struct Frame {
        bool literal;
        Chunk chunk;
        Vertex from = kNoVertex, to = kNoVertex;
        bool rev = false;
        bool has_lead = false;
        Conn lead{};
    };

    bool any_emitted = false;
    auto emit_chunk = [&](bool has_lead, const Conn& lead, const Chunk& c) {
        if (c.nodes.empty()) return;
        if (has_lead) {
            assert(any_emitted);
            emit_conn(lead);
        }
        for (size_t i = 0; i < c.nodes.size(); ++i) {
            if (i > 0) emit_conn(c.conns[i - 1]);
            emit_node(c.nodes[i]);
        }
        any_emitted = true;
    };

    // Climbs born-even levels from v toward t. True when t was reached;
    // false leaves the born-odd blocker in *split. On a split the chunk
    // may end with a dangling connector leading into the blocker.
    auto walk = [&f](Vertex v, Vertex t, Chunk& c, Vertex* split) -> bool {
        for (;;) {
            if (v == t) {
                c.nodes.push_back(v);
                return true;
            }
            if (!f.born_even(v)) {
                *split = v;
                return false;
            }
            c.nodes.push_back(v);
            c.conns.push_back({ConnKind::Matched, v});
            Vertex p = f.even_parent(v);
            assert(p != kNoVertex);
            if (p == t) {
                c.nodes.push_back(p);
                return true;
            }
            c.nodes.push_back(p);
            c.conns.push_back({ConnKind::GrowUp, p});
            v = f.odd_parent(p);
        }
    };

    std::vector<Frame> stack;
    stack.push_back({false, {}, from, to, false, false, {}});
    while (!stack.empty()) {
        Frame fr = std::move(stack.back());
        stack.pop_back();
        if (fr.literal) {
            emit_chunk(fr.has_lead, fr.lead, fr.chunk);
            continue;
        }
        Chunk c;
        Vertex split = kNoVertex;
        bool complete = walk(fr.from, fr.to, c, &split);
        if (complete) {
            if (fr.rev) {
                std::reverse(c.nodes.begin(), c.nodes.end());
                std::reverse(c.conns.begin(), c.conns.end());
            }
            emit_chunk(fr.has_lead, fr.lead, c);
            continue;
        }
        auto [below, other] = f.bridge_ends(split);
        bool had_prefix = !c.nodes.empty();
        Conn dangler{};
        if (had_prefix) {
            assert(c.conns.size() == c.nodes.size());
            dangler = c.conns.back();
            c.conns.pop_back();
        }
        if (!fr.rev) {
            // prefix, then below..split reversed, then other..to
            emit_chunk(fr.has_lead, fr.lead, c);
            Conn rev_lead = had_prefix ? dangler : fr.lead;
            bool rev_has_lead = had_prefix || fr.has_lead;
            stack.push_back({false, {}, other, fr.to, false, true,
                             Conn{ConnKind::Bridge, split}});
            stack.push_back(
                {false, {}, below, split, true, rev_has_lead, rev_lead});
        } else {
            // reversal flips the pieces: other..to reversed, then
            // below..split forward, then the prefix reversed
            if (had_prefix) {
                std::reverse(c.nodes.begin(), c.nodes.end());
                std::reverse(c.conns.begin(), c.conns.end());
                stack.push_back(
                    {true, std::move(c), kNoVertex, kNoVertex, false, true,
                     dangler});
            }
            stack.push_back({false, {}, below, split, false, true,
                             Conn{ConnKind::Bridge, split}});
            stack.push_back(
                {false, {}, other, fr.to, true, fr.has_lead, fr.lead});
        }
    }
}

}  // namespace gmatch::detail
