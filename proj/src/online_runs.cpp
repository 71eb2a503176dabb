#include "abelian/online_runs.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace abelian {

namespace {

std::size_t alphabet_bound(const ParikhVector& period, std::span<const Symbol> w) {
    std::size_t sigma = period.size();
    for (Symbol s : w) sigma = std::max<std::size_t>(sigma, s + 1);
    return sigma;
}

}  // namespace

RunOccurrence get_run(const SlotTable& slots, std::size_t tail, std::size_t t0, Position e, std::size_t p) {
    if (!slots.at(tail)) throw std::logic_error("get_run: empty slot");
    RunOccurrence run;
    run.b = *slots[tail];
    run.t = tail == t0 ? p - 1 : get_tail(tail, t0, p) - 1;
    run.e = e;
    run.h = (e + 1 - run.t - run.b) % p;
    return run;
}

std::optional<Position> find_first(const ParikhVector& period, std::span<const Symbol> w) {
    ParikhVector target = period;
    target.grow(alphabet_bound(period, w));
    WindowComparator window(std::move(target));
    for (Position i = 0; i < w.size(); ++i)
        if (window.advance(w[i])) return i;
    return std::nullopt;
}

Position find_head(std::span<const Symbol> w, Position i, const ParikhVector& period) {
    if (i > w.size()) throw std::out_of_range("find_head: position past the end");
    const std::size_t limit = period.norm() == 0 ? 0 : period.norm() - 1;
    ParikhVector head(alphabet_bound(period, w));
    Position j = i;
    while (j > 0 && i - j < limit) {
        Symbol c = w[j - 1];
        if (head[c] + 1 > period.count_or_zero(c)) break;
        head.add(c);
        --j;
    }
    return j;
}

// ---------------------------------------------------------------------------

OnlineScanner::OnlineScanner(ParikhVector period)
    : period_(std::move(period)),
      norm_(period_.norm()),
      window_(period_),
      suffix_(period_),
      slots_(norm_),
      scratch_(period_.size()) {}

Position OnlineScanner::head_before(Position start) {
    // The newest consumed position is position_ - 1; the ring covers 2|P| symbols,
    // and the lookback here never exceeds 2|P| - 2.
    const Position newest = position_ - 1;
    const std::size_t limit = norm_ - 1;
    Position j = start;
    while (j > 0 && start - j < limit) {
        Symbol c = window_.recent(newest - (j - 1));
        ++head_steps_;
        if (scratch_.count_or_zero(c) + 1 > period_.count_or_zero(c)) break;
        scratch_.add(c);
        --j;
    }
    for (Position k = j; k < start; ++k) scratch_.remove(window_.recent(newest - k));
    return j;
}

std::optional<RunOccurrence> OnlineScanner::push(Symbol sym) {
    if (finished_) throw std::logic_error("push after finish");
    const Position i = position_;
    const bool match = window_.advance(sym);
    suffix_.advance(sym);
    ++position_;

    if (phase_ == Phase::searching) {
        if (match) {
            phase_ = Phase::tracking;
            t0_ = 0;
            slots_[t0_] = head_before(i + 1 - norm_);
        }
        return std::nullopt;
    }

    t0_ = (t0_ + 1) % norm_;
    if (match) {
        if (!slots_[t0_]) slots_[t0_] = head_before(i + 1 - norm_);
        return std::nullopt;
    }
    return flush(i, false);
}

std::optional<RunOccurrence> OnlineScanner::finish() {
    if (finished_) return std::nullopt;
    finished_ = true;
    if (phase_ == Phase::searching) return std::nullopt;
    t0_ = (t0_ + 1) % norm_;
    return flush(position_, true);
}

std::optional<RunOccurrence> OnlineScanner::flush(Position i, bool at_end) {
    // Slots are visited in decreasing order of tail length. The first slot whose
    // tail can absorb w[i] stops the walk: every shorter tail can absorb it too.
    std::optional<RunOccurrence> candidate;
    std::size_t tail = t0_;
    do {
        ++flush_iterations_;
        if (slots_[tail]) {
            const bool dies = tail == t0_ || at_end || get_tail(tail, t0_, norm_) > suffix_.longest();
            if (!dies) break;
            if (!candidate || *slots_[tail] <= candidate->b) {
                candidate = get_run(slots_, tail, t0_, i - 1, norm_);
                if (trace_) trace_(i, *candidate);
            }
            slots_[tail].reset();
        }
        tail = (tail + 1) % norm_;
    } while (tail != t0_);

    if (!candidate) return std::nullopt;
    const bool leftmost = std::all_of(slots_.begin(), slots_.end(),
                                      [&](const auto& s) { return !s || *s > candidate->b; });
    assert(candidate->body() % norm_ == 0);
    if (leftmost && candidate->body() >= 2 * norm_) return candidate;
    return std::nullopt;
}

ScanCounters OnlineScanner::counters() const {
    ScanCounters c;
    c.window_operations = window_.operations() + suffix_.operations();
    c.head_steps = head_steps_;
    c.flush_iterations = flush_iterations_;
    return c;
}

std::size_t OnlineScanner::footprint_bytes() const {
    return sizeof(*this) + period_.size() * sizeof(ParikhVector::count_type) +
           scratch_.size() * sizeof(ParikhVector::count_type) +
           slots_.capacity() * sizeof(SlotTable::value_type) + window_.footprint_bytes() - sizeof(window_) +
           suffix_.footprint_bytes() - sizeof(suffix_);
}

// ---------------------------------------------------------------------------

std::vector<RunOccurrence> runs(const ParikhVector& period, std::span<const Symbol> w) {
    OnlineScanner scanner(period);
    std::vector<RunOccurrence> out;
    for (Symbol s : w)
        if (auto run = scanner.push(s)) out.push_back(*run);
    if (auto run = scanner.finish()) out.push_back(*run);
    return out;
}

std::vector<std::vector<RunOccurrence>> runs_for_periods(std::span<const ParikhVector> periods,
                                                         std::span<const Symbol> w) {
    for (const auto& period : periods)
        if (period.norm() == 0) throw std::invalid_argument("period must have norm >= 1");
    std::vector<std::vector<RunOccurrence>> out(periods.size());
    const auto count = static_cast<std::int64_t>(periods.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t k = 0; k < count; ++k) out[k] = runs(periods[k], w);
    return out;
}

}  // namespace abelian
