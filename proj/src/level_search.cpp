#include "gmatch/level_search.hpp"

#include <cassert>
#include <stdexcept>

namespace gmatch {

SearchState::SearchState(int n_)
    : n(n_),
      lcp(n_, -1),
      lcp_odd(n_, -1),
      born_odd(n_, false),
      forest_parent(n_, kNoVertex),
      tree_root(n_, kNoVertex),
      bridge_of(n_),
      base(n_),
      dbase(n_),
      queue(n_ + 2),
      walk_stamp(n_, 0),
      walk_mark(n_, 0) {}

namespace {

[[noreturn]] void fail(const char* what) { throw std::logic_error(what); }

}  // namespace

BlossomWalk find_blossombase_impl(const SearchState& s, Vertex x, Vertex y) {
    struct StampRec {
        int side;
        size_t odds;
        size_t blocks;
    };
    BlossomWalk out;
    const int gen = ++s.walk_generation;
    std::vector<StampRec> recs;
    struct SidePtr {
        Vertex rep;
        bool alive = true;
        std::vector<Vertex>* odds;
        std::vector<Vertex>* blocks;
    };
    SidePtr side[2] = {{s.base.find(x), true, &out.odds_x, &out.blocks_x},
                       {s.base.find(y), true, &out.odds_y, &out.blocks_y}};
    if (side[0].rep == side[1].rep) {
        // same block: trivially meet with empty paths
        out.met = true;
        out.base = s.base.find_base(x);
        return out;
    }
    auto stamp = [&](Vertex rep, int which) {
        s.walk_stamp[rep] = gen;
        s.walk_mark[rep] = static_cast<int>(recs.size());
        recs.push_back({which, side[which].odds->size(),
                        side[which].blocks->size()});
    };
    for (int which = 0; which < 2; ++which) {
        stamp(side[which].rep, which);
        side[which].blocks->push_back(s.base.find_base(side[which].rep));
    }
    int turn = 0;
    while (side[0].alive || side[1].alive) {
        SidePtr& me = side[turn];
        int myturn = turn;
        turn ^= 1;
        if (!me.alive) continue;
        Vertex b = s.base.find_base(me.rep);
        Vertex p = s.forest_parent[b];
        if (p == kNoVertex) {
            me.alive = false;  // root block reached
            continue;
        }
        me.odds->push_back(p);
        Vertex up = s.forest_parent[p];
        assert(up != kNoVertex);
        Vertex next = s.base.find(up);
        if (s.walk_stamp[next] == gen) {
            const StampRec& rec = recs[s.walk_mark[next]];
            if (rec.side == myturn) fail("blossom walk revisited own block");
            // meet: truncate the stamping side back to its state when it
            // first saw this block
            SidePtr& other = side[rec.side];
            other.odds->resize(rec.odds);
            other.blocks->resize(rec.blocks);
            out.met = true;
            out.base = s.base.find_base(next);
            return out;
        }
        stamp(next, myturn);
        me.blocks->push_back(s.base.find_base(next));
        me.rep = next;
    }
    return out;  // distinct roots
}

BlossomWalk find_blossom_base(const SearchState& s, Vertex x, Vertex y) {
    return find_blossombase_impl(s, x, y);
}

namespace {

// Drives one search. The state outlives the engine; it is handed to the
// caller inside the SearchResult.
class Engine {
public:
    Engine(const Graph& g, const Matching& m, const SearchOptions& opts)
        : g_(g), m_(m), opts_(opts), s_(g.num_vertices()) {}

    SearchResult run() {
        const int n = g_.num_vertices();
        const int last_phase = opts_.full_run ? n + 1 : n / 2;
        init_free_vertices();
        for (s_.delta = 0; s_.delta <= last_phase;) {
            while (auto ev = s_.queue.pop()) {
                if (auto* grow = std::get_if<GrowEvent>(&*ev)) {
                    process_grow(grow->v);
                } else {
                    int edge = std::get<BridgeEvent>(*ev).edge;
                    if (process_bridge(edge)) {
                        finish_phase(true);
                        return {true, s_.delta, edge, std::move(s_)};
                    }
                }
            }
            finish_phase(false);
        }
        if (opts_.full_run && !s_.queue.fully_drained())
            fail("events left after the final phase of a full run");
        return {false, -1, -1, std::move(s_)};
    }

private:
    void init_free_vertices() {
        for (Vertex v = 0; v < g_.num_vertices(); ++v) {
            if (m_.is_matched(v)) continue;
            s_.tree_root[v] = v;
            write_lcp(v, 0);
            schedule_newly_even(v);
        }
    }

    void write_lcp(Vertex v, int value) {
        if (s_.lcp[v] != -1) fail("lcp written twice");
        s_.lcp[v] = value;
        s_.lcp_log.push_back({v, false});
    }

    void write_lcp_odd(Vertex v, int value) {
        if (s_.lcp_odd[v] != -1) fail("lcp_odd written twice");
        s_.lcp_odd[v] = value;
        s_.lcp_log.push_back({v, true});
    }

    /// Grow scheduling plus the one-time scan that queues bridges with
    /// already-even neighbors. Even-unlabeled pairs are left to the
    /// neighbor's future grow event.
    void schedule_newly_even(Vertex v) {
        s_.queue.push_grow(s_.lcp[v] + 2, v);
        for (const auto& ref : g_.neighbors(v)) {
            if (m_.mate(v) == ref.to) continue;
            if (s_.is_even(ref.to) && !s_.base.same_block(v, ref.to))
                s_.queue.push_bridge((s_.lcp[v] + s_.lcp[ref.to]) / 2 + 1,
                                     ref.edge);
        }
    }

    void process_grow(Vertex v) {
        assert(s_.delta % 2 == 0);
        assert(s_.is_even(v) && s_.lcp[v] == s_.delta - 2);
        for (const auto& ref : g_.neighbors(v)) {
            Vertex x = ref.to;
            if (!s_.in_structure(x)) {
                Vertex w = m_.mate(x);
                assert(w != kNoVertex && !s_.in_structure(w));
                // x odd at level delta-1, its mate even at level delta
                s_.born_odd[x] = true;
                s_.forest_parent[x] = v;
                s_.tree_root[x] = s_.tree_root[v];
                write_lcp_odd(x, s_.delta - 1);
                s_.forest_parent[w] = x;
                s_.tree_root[w] = s_.tree_root[v];
                write_lcp(w, s_.delta);
                if (opts_.trace) opts_.trace->grow(s_.delta, v, x, w);
                schedule_newly_even(w);
            } else if (s_.is_even(x) && s_.lcp[x] == s_.delta &&
                       s_.lcp_odd[x] == -1) {
                // an even neighbor one level up also has an odd path via v
                write_lcp_odd(x, s_.delta - 1);
            }
        }
    }

    /// True on breakthrough.
    bool process_bridge(int edge) {
        auto [x, y] = g_.edge(edge);
        assert(s_.is_even(x) && s_.is_even(y));
        if (s_.base.same_block(x, y)) return false;  // stale
        if (s_.lcp[x] + s_.lcp[y] != 2 * s_.delta - 2)
            fail("bridge popped in the wrong phase");
        if (s_.tree_root[x] != s_.tree_root[y]) {
            if (opts_.trace)
                opts_.trace->bridge_breakthrough(s_.delta, x, y);
            return true;
        }
        BlossomWalk walk = find_blossom_base(s_, x, y);
        if (!walk.met) fail("no meet block for a same-tree bridge");
        Vertex b = walk.base;
        if (opts_.trace) opts_.trace->bridge_blossom(s_.delta, x, y, b);
        for (int pass = 0; pass < 2; ++pass) {
            bool x_side = pass == 0;
            for (Vertex z : x_side ? walk.odds_x : walk.odds_y) {
                int value = s_.lcp[x] + 1 + s_.lcp[y] - s_.lcp_odd[z];
                write_lcp(z, value);
                s_.bridge_of[z] = {x, y, x_side};
                if (opts_.trace) opts_.trace->lcp(s_.delta, z, value);
            }
        }
        s_.base.unite_all(walk.blocks_x, b);
        s_.base.unite_all(walk.odds_x, b);
        s_.base.unite_all(walk.blocks_y, b);
        s_.base.unite_all(walk.odds_y, b);
        if (s_.base.block_size(b) % 2 == 0)
            fail("blossom block with even cardinality");
        for (Vertex z : walk.odds_x) schedule_newly_even(z);
        for (Vertex z : walk.odds_y) schedule_newly_even(z);
        return false;
    }

    void finish_phase(bool breakthrough) {
        if (!breakthrough) {
            s_.base.replay_log_into(s_.dbase);
            s_.lcp_log.clear();
            if (opts_.check_invariants) check_phase_invariants();
        }
        if (opts_.on_phase_end)
            opts_.on_phase_end(s_, s_.delta, breakthrough);
        if (!breakthrough) {
            ++s_.delta;
            s_.queue.advance();
        }
    }

    void check_phase_invariants() const {
        for (Vertex v = 0; v < s_.n; ++v) {
            if (s_.lcp[v] >= 0 && s_.lcp[v] % 2 != 0)
                fail("odd lcp value");
            if (s_.lcp_odd[v] >= 0 && s_.lcp_odd[v] % 2 != 1)
                fail("even lcp_odd value");
            Vertex w = m_.mate(v);
            if (w != kNoVertex &&
                s_.in_structure(v) != s_.in_structure(w))
                fail("matched pair split across the structure boundary");
        }
        for (const auto& e : g_.edges()) {
            auto check = [&](Vertex u, Vertex v) {
                if (s_.is_even(u) && s_.is_odd(v) &&
                    s_.lcp_odd[v] > s_.lcp[u] + 1)
                    fail("even-odd edge climbing more than one level");
            };
            check(e.u, e.v);
            check(e.v, e.u);
        }
    }

    const Graph& g_;
    const Matching& m_;
    const SearchOptions& opts_;
    SearchState s_;
};

}  // namespace

SearchResult run_level_search(const Graph& g, const Matching& m,
                              const SearchOptions& opts) {
    assert(m.num_vertices() == g.num_vertices());
    return Engine(g, m, opts).run();
}

}  // namespace gmatch
