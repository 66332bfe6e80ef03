#pragma once

#include <cassert>
#include <span>
#include <vector>

#include "gmatch/graph.hpp"

namespace gmatch {

/// Union-find over vertex ids with a designated base vertex per block and
/// a replayable union log. Two instances are kept during a search: unions
/// go to the live one immediately and are mirrored into the delayed one at
/// the end of each phase by replaying the log.
///
/// Union by size with path compression. The base is kept in a rep-indexed
/// side table so compression never disturbs base identity.
class LoggedUnionFind {
public:
    struct LogEntry {
        Vertex a;
        Vertex b;
        Vertex base;
    };

    LoggedUnionFind() = default;
    explicit LoggedUnionFind(int n)
        : parent_(n), size_(n, 1), base_(n) {
        for (Vertex v = 0; v < n; ++v) {
            parent_[v] = v;
            base_[v] = v;
        }
    }

    int num_vertices() const { return static_cast<int>(parent_.size()); }

    Vertex find(Vertex v) const {
        Vertex root = v;
        while (parent_[root] != root) root = parent_[root];
        while (parent_[v] != root) {
            Vertex next = parent_[v];
            parent_[v] = root;
            v = next;
        }
        return root;
    }

    Vertex find_base(Vertex v) const { return base_[find(v)]; }
    bool same_block(Vertex u, Vertex v) const { return find(u) == find(v); }
    int block_size(Vertex v) const { return size_[find(v)]; }

    /// Merges the blocks of a and b and makes `base` the base of the merged
    /// block. No-op (and no log entry) if already in one block.
    void unite(Vertex a, Vertex b, Vertex base) {
        Vertex ra = find(a), rb = find(b);
        assert(find(base) == ra || find(base) == rb);
        if (ra == rb) {
            base_[ra] = base;
            return;
        }
        log_.push_back({a, b, base});
        if (size_[ra] < size_[rb]) std::swap(ra, rb);
        parent_[rb] = ra;
        size_[ra] += size_[rb];
        base_[ra] = base;
    }

    /// Merges every listed block into one with the given base.
    void unite_all(std::span<const Vertex> members, Vertex base) {
        for (Vertex v : members) unite(base, v, base);
    }

    const std::vector<LogEntry>& log() const { return log_; }

    /// Applies this structure's pending unions to dst, then advances the
    /// checkpoint by clearing the log. dst must hold the blocks this
    /// structure had at the previous checkpoint.
    void replay_log_into(LoggedUnionFind& dst) {
        for (const auto& e : log_) dst.unite(e.a, e.b, e.base);
        log_.clear();
    }

    void clear_log() { log_.clear(); }

private:
    mutable std::vector<Vertex> parent_;  // compression is a cache update
    std::vector<int> size_;
    std::vector<Vertex> base_;  // valid at representatives
    std::vector<LogEntry> log_;
};

}  // namespace gmatch
