#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "abelian/parikh.hpp"
#include "abelian/run.hpp"

namespace abelian {

/// (t0 - tail + p) mod p: the tail length, at the current position, of the
/// substring tracked in slot `tail`.
constexpr std::size_t get_tail(std::size_t tail, std::size_t t0, std::size_t p) {
    return (t0 + p - tail) % p;
}

/// Candidate slots of the online scanner: one optional start position per
/// tail length, indexed circularly.
using SlotTable = std::vector<std::optional<Position>>;

/// Builds the occurrence tracked by slot `tail` as it stood at position `e`.
/// Throws std::logic_error if the slot is empty.
RunOccurrence get_run(const SlotTable& slots, std::size_t tail, std::size_t t0, Position e, std::size_t p);

/// End position of the first window of w with Parikh vector `period`, if any.
std::optional<Position> find_first(const ParikhVector& period, std::span<const Symbol> w);

/// Leftmost j in [max(0, i-|P|+1), i] such that w[j..i-1] is strictly contained in P.
Position find_head(std::span<const Symbol> w, Position i, const ParikhVector& period);

struct ScanCounters {
    std::uint64_t window_operations = 0;  // comparator + suffix tracker updates
    std::uint64_t head_steps = 0;         // symbols inspected by find_head
    std::uint64_t flush_iterations = 0;   // slot visits in the flush loop

    std::uint64_t comparisons() const { return window_operations + head_steps + flush_iterations; }
};

/// Single-pass scanner that reports every abelian run of a fixed period P.
///
/// Symbols are pushed one at a time. A run ending at position e is returned by
/// the push of position e+1, or by finish() when e is the last position. Memory
/// is O(sigma + |P|) regardless of the input length.
class OnlineScanner {
public:
    /// Called on every candidate replacement in the flush loop with the
    /// position being processed and the candidate tuple.
    using TraceSink = std::function<void(Position, const RunOccurrence&)>;

    explicit OnlineScanner(ParikhVector period);

    std::optional<RunOccurrence> push(Symbol sym);
    std::optional<RunOccurrence> finish();

    void set_trace(TraceSink sink) { trace_ = std::move(sink); }

    const SlotTable& slots() const { return slots_; }
    std::size_t t0() const { return t0_; }
    Position position() const { return position_; }
    bool tracking() const { return phase_ == Phase::tracking; }
    bool finished() const { return finished_; }
    std::size_t period_norm() const { return norm_; }

    ScanCounters counters() const;
    /// Bytes held by the scanner, including heap buffers.
    std::size_t footprint_bytes() const;

private:
    enum class Phase { searching, tracking };

    std::optional<RunOccurrence> flush(Position i, bool at_end);
    Position head_before(Position start);

    ParikhVector period_;
    std::size_t norm_;
    WindowComparator window_;
    SuffixInclusionTracker suffix_;
    SlotTable slots_;
    std::size_t t0_ = 0;
    Position position_ = 0;
    Phase phase_ = Phase::searching;
    bool finished_ = false;
    ParikhVector scratch_;
    std::uint64_t head_steps_ = 0;
    std::uint64_t flush_iterations_ = 0;
    TraceSink trace_;
};

/// All abelian runs with period `period` in `w`, ordered by end position.
std::vector<RunOccurrence> runs(const ParikhVector& period, std::span<const Symbol> w);

/// Runs for several periods over the same word; periods are scanned in parallel.
std::vector<std::vector<RunOccurrence>> runs_for_periods(std::span<const ParikhVector> periods,
                                                         std::span<const Symbol> w);

}  // namespace abelian
