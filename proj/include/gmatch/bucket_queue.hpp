#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "gmatch/graph.hpp"

namespace gmatch {

struct GrowEvent {
    Vertex v;
};

struct BridgeEvent {
    int edge;
};

using SearchEvent = std::variant<GrowEvent, BridgeEvent>;

/// Array-of-buckets queue over phase numbers. Bucket D holds the events of
/// phase D: grow events for even vertices with lcp = D-2 and bridge events
/// for even-even edges with lcp-sum 2D-2. Within a bucket all grow events
/// are delivered before any bridge event; both kinds are FIFO, so bridges
/// appended during a phase cascade behind the ones already queued.
///
/// Events may never be scheduled below the cursor; that would mean the
/// search generated work for a phase already finished.
class BucketQueue {
public:
    BucketQueue() = default;
    explicit BucketQueue(int num_phases) : buckets_(num_phases) {}

    int cursor() const { return cursor_; }
    int num_phases() const { return static_cast<int>(buckets_.size()); }

    void push_grow(int phase, Vertex v) {
        check_phase(phase);
        buckets_[phase].grows.push_back(v);
    }

    void push_bridge(int phase, int edge) {
        check_phase(phase);
        buckets_[phase].bridges.push_back(edge);
    }

    /// Next event of the cursor phase, grow events first.
    std::optional<SearchEvent> pop() {
        Bucket& b = buckets_[cursor_];
        if (b.next_grow < b.grows.size())
            return GrowEvent{b.grows[b.next_grow++]};
        if (b.next_bridge < b.bridges.size())
            return BridgeEvent{b.bridges[b.next_bridge++]};
        return std::nullopt;
    }

    /// Moves the cursor to the next phase; the old bucket must be drained.
    void advance() { ++cursor_; }

    bool fully_drained() const {
        for (const auto& b : buckets_)
            if (b.next_grow < b.grows.size() ||
                b.next_bridge < b.bridges.size())
                return false;
        return true;
    }

private:
    struct Bucket {
        std::vector<Vertex> grows;
        std::vector<int> bridges;
        size_t next_grow = 0;
        size_t next_bridge = 0;
    };

    void check_phase(int phase) const {
        if (phase < cursor_)
            throw std::logic_error(
                "bucket queue: event scheduled below cursor");
        if (phase >= num_phases())
            throw std::logic_error("bucket queue: phase out of range");
    }

    std::vector<Bucket> buckets_;
    int cursor_ = 0;
};

}  // namespace gmatch
