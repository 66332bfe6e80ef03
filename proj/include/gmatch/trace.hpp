#pragma once

#include <ostream>
#include <span>

#include "gmatch/graph.hpp"

namespace gmatch {

/// Line-oriented event stream for fixture diffing. All vertex and node ids
/// are printed 1-based to match the file format. Every format lives here so
/// golden files have a single source of truth.
class TraceSink {
public:
    explicit TraceSink(std::ostream& out) : out_(&out) {}

    void grow(int delta, Vertex v, Vertex x, Vertex mate) {
        *out_ << "phase " << delta << " grow " << v + 1 << ' ' << x + 1
              << ' ' << mate + 1 << '\n';
    }

    void bridge_blossom(int delta, Vertex x, Vertex y, Vertex base) {
        *out_ << "phase " << delta << " bridge " << x + 1 << ' ' << y + 1
              << " base " << base + 1 << '\n';
    }

    void bridge_breakthrough(int delta, Vertex x, Vertex y) {
        *out_ << "phase " << delta << " bridge " << x + 1 << ' ' << y + 1
              << " breakthrough" << '\n';
    }

    void lcp(int delta, Vertex v, int value) {
        *out_ << "phase " << delta << " lcp " << v + 1 << ' ' << value
              << '\n';
    }

    void h_edge(Vertex u, Vertex v, const char* kind) {
        *out_ << "H-edge " << u + 1 << ' ' << v + 1 << " kind " << kind
              << '\n';
    }

    void dfs_grow(Vertex x, Vertex y, Vertex y2) {
        *out_ << "dfs grow " << x + 1 << ' ' << y + 1 << ' ' << y2 + 1
              << '\n';
    }

    void dfs_blossom(Vertex x, Vertex y, Vertex base) {
        *out_ << "dfs blossom " << x + 1 << ' ' << y + 1 << " base "
              << base + 1 << '\n';
    }

    void dfs_path(std::span<const Vertex> lifted) {
        *out_ << "dfs path";
        for (Vertex v : lifted) *out_ << ' ' << v + 1;
        *out_ << '\n';
    }

private:
    std::ostream* out_;
};

}  // namespace gmatch
