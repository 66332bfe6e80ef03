#include "gmatch/contracted_graph.hpp"

#include <cassert>

namespace gmatch {

void revert_breakthrough_phase(SearchState& s) {
    for (auto it = s.lcp_log.rbegin(); it != s.lcp_log.rend(); ++it) {
        if (it->odd_field)
            s.lcp_odd[it->v] = -1;
        else
            s.lcp[it->v] = -1;
    }
    s.lcp_log.clear();
}

const char* h_edge_kind_name(HEdgeKind kind) {
    switch (kind) {
    case HEdgeKind::EvenEven: return "even-even";
    case HEdgeKind::EvenOdd: return "even-odd";
    case HEdgeKind::MatchedUnlabeled: return "matched-unlabeled";
    case HEdgeKind::GrowFrontier: return "grow-frontier";
    }
    return "?";
}

ContractedView::ContractedView(const Graph& g, const Matching& m,
                               const SearchState& s)
    : g_(&g), m_(&m), s_(&s), members_(g.num_vertices()) {
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        members_[node_of(v)].push_back(v);
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (!members_[v].empty()) nodes_.push_back(v);
}

std::optional<HEdgeRecord> ContractedView::classify(int edge) const {
    const auto [u, v] = g_->edge(edge);
    Vertex un = node_of(u), vn = node_of(v);
    if (un == vn) return std::nullopt;  // self-loop in H
    const Label lu = s_->label(u), lv = s_->label(v);
    if (lu == Label::Odd && lv == Label::Odd) return std::nullopt;
    const bool matched = m_->contains(u, v);
    const int delta = s_->delta;

    if (matched) {
        if (lu == Label::Unlabeled && lv == Label::Unlabeled)
            return HEdgeRecord{un, vn, true, HEdgeKind::MatchedUnlabeled};
        // matching edges run from an odd vertex one level up to an even one
        if (lu == Label::Even && lv == Label::Odd &&
            s_->lcp[u] == s_->lcp_odd[v] + 1)
            return HEdgeRecord{un, vn, true, HEdgeKind::EvenOdd};
        if (lv == Label::Even && lu == Label::Odd &&
            s_->lcp[v] == s_->lcp_odd[u] + 1)
            return HEdgeRecord{un, vn, true, HEdgeKind::EvenOdd};
        return std::nullopt;
    }

    if (lu == Label::Even && lv == Label::Even) {
        if (s_->lcp[u] + s_->lcp[v] == 2 * delta - 2)
            return HEdgeRecord{un, vn, false, HEdgeKind::EvenEven};
        return std::nullopt;
    }
    // non-matching edges run from an even vertex one level down to an odd one
    if (lu == Label::Even && lv == Label::Odd &&
        s_->lcp_odd[v] == s_->lcp[u] + 1)
        return HEdgeRecord{un, vn, false, HEdgeKind::EvenOdd};
    if (lv == Label::Even && lu == Label::Odd &&
        s_->lcp_odd[u] == s_->lcp[v] + 1)
        return HEdgeRecord{un, vn, false, HEdgeKind::EvenOdd};
    // the grow steps of the breakthrough phase would have added these
    if (lu == Label::Even && lv == Label::Unlabeled &&
        s_->lcp[u] == delta - 2)
        return HEdgeRecord{un, vn, false, HEdgeKind::GrowFrontier};
    if (lv == Label::Even && lu == Label::Unlabeled &&
        s_->lcp[v] == delta - 2)
        return HEdgeRecord{un, vn, false, HEdgeKind::GrowFrontier};
    return std::nullopt;
}

void trace_h_edges(const ContractedView& view, TraceSink& trace) {
    const Graph& g = view.graph();
    for (int e = 0; e < g.num_edges(); ++e) {
        if (auto rec = view.classify(e)) {
            auto [u, v] = g.edge(e);
            trace.h_edge(u, v, h_edge_kind_name(rec->kind));
        }
    }
}

}  // namespace gmatch
