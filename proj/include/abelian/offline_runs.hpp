#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "abelian/parikh.hpp"
#include "abelian/run.hpp"

namespace abelian {

/// Boolean table of centred abelian squares. Cell (j, i) is set iff
/// w[i-j+1..i] and w[i+1..i+j] have the same Parikh vector; rows run over
/// j = 1..floor(n/2), columns over i = 0..n-2.
class SquareCenterTable {
public:
    SquareCenterTable() = default;
    explicit SquareCenterTable(std::size_t n);

    std::size_t word_length() const { return n_; }
    std::size_t rows() const { return n_ / 2; }
    std::size_t columns() const { return n_ > 0 ? n_ - 1 : 0; }

    /// False for any (j, i) outside the table.
    bool cell(std::size_t j, std::size_t i) const;
    void set(std::size_t j, std::size_t i, bool value);

    bool marked(std::size_t j, std::size_t i) const;
    void mark(std::size_t j, std::size_t i);
    void clear_marks();

    /// Rows j = 1..floor(n/2) as lines of '0'/'1', n characters each.
    std::string dump() const;

private:
    std::size_t index(std::size_t j, std::size_t i) const { return (j - 1) * columns() + i; }

    std::size_t n_ = 0;
    std::vector<std::uint8_t> cells_;
    std::vector<std::uint8_t> marks_;
};

struct OfflineCounters {
    std::uint64_t table_steps = 0;      // window slides while filling rows
    std::uint64_t chain_steps = 0;      // cells visited while extracting repetitions
    std::uint64_t extension_steps = 0;  // per-symbol checks while sizing heads and tails

    std::uint64_t total() const { return table_steps + chain_steps + extension_steps; }
    OfflineCounters& operator+=(const OfflineCounters& o) {
        table_steps += o.table_steps;
        chain_steps += o.chain_steps;
        extension_steps += o.extension_steps;
        return *this;
    }
};

/// Fills the table row by row with a sliding double window; rows in parallel.
SquareCenterTable build_square_table(std::span<const Symbol> w, OfflineCounters* counters = nullptr);
/// Single-threaded reference for build_square_table.
SquareCenterTable build_square_table_serial(std::span<const Symbol> w, OfflineCounters* counters = nullptr);

/// Maximal repetitions of period length j, extracted from row j by chaining
/// cells j apart. Marks every chained cell of that row.
std::vector<Repetition> maximal_repetitions(SquareCenterTable& table, std::size_t j,
                                            OfflineCounters* counters = nullptr);

/// Sizes the longest head and tail of repetitions of one word in O(sigma)
/// per repetition, from per-symbol prefix counts and occurrence lists.
class HeadTailExtender {
public:
    explicit HeadTailExtender(std::span<const Symbol> w);

    OfflineRun extend(const Repetition& rep, OfflineCounters* counters = nullptr) const;

private:
    std::size_t count_before(Symbol c, Position k) const { return prefix_[c * (n_ + 1) + k]; }

    std::size_t n_ = 0;
    std::size_t sigma_ = 0;
    std::vector<std::size_t> prefix_;                // prefix_[c*(n+1)+k] = |w[0..k-1]|_c
    std::vector<std::vector<Position>> occurrences_;  // positions of each symbol, ascending
};

/// Longest head and tail of `rep` strictly contained in its block vector.
OfflineRun extend_head_tail(std::span<const Symbol> w, const Repetition& rep);

/// All extended maximal repetitions of every period length, sorted by (p, b).
/// Rows are processed in parallel.
std::vector<OfflineRun> offline_all_runs(std::span<const Symbol> w, OfflineCounters* counters = nullptr);
/// Single-threaded reference for offline_all_runs.
std::vector<OfflineRun> offline_all_runs_serial(std::span<const Symbol> w, OfflineCounters* counters = nullptr);

}  // namespace abelian
