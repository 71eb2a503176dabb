#include "abelian/offline_runs.hpp"

#include <algorithm>
#include <stdexcept>

namespace abelian {

SquareCenterTable::SquareCenterTable(std::size_t n)
    : n_(n), cells_(rows() * columns(), 0), marks_(rows() * columns(), 0) {}

bool SquareCenterTable::cell(std::size_t j, std::size_t i) const {
    if (j == 0 || j > rows() || i >= columns()) return false;
    return cells_[index(j, i)] != 0;
}

void SquareCenterTable::set(std::size_t j, std::size_t i, bool value) {
    if (j == 0 || j > rows() || i >= columns()) throw std::out_of_range("SquareCenterTable: cell outside table");
    cells_[index(j, i)] = value ? 1 : 0;
}

bool SquareCenterTable::marked(std::size_t j, std::size_t i) const {
    if (j == 0 || j > rows() || i >= columns()) return false;
    return marks_[index(j, i)] != 0;
}

void SquareCenterTable::mark(std::size_t j, std::size_t i) {
    if (j == 0 || j > rows() || i >= columns()) throw std::out_of_range("SquareCenterTable: cell outside table");
    marks_[index(j, i)] = 1;
}

void SquareCenterTable::clear_marks() { std::fill(marks_.begin(), marks_.end(), 0); }

std::string SquareCenterTable::dump() const {
    std::string out;
    out.reserve(rows() * (n_ + 1));
    for (std::size_t j = 1; j <= rows(); ++j) {
        for (std::size_t i = 0; i < n_; ++i) out.push_back(cell(j, i) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

std::size_t sigma_of(std::span<const Symbol> w) {
    std::size_t sigma = 0;
    for (Symbol s : w) sigma = std::max<std::size_t>(sigma, s + 1);
    return sigma;
}

// Row j: diff = left window - right window, slid one column at a time.
void fill_row(std::span<const Symbol> w, std::size_t j, SquareCenterTable& table, std::vector<long>& diff,
              std::uint64_t& steps) {
    const std::size_t n = w.size();
    if (2 * j > n) return;
    std::fill(diff.begin(), diff.end(), 0);
    std::size_t nonzero = 0;
    auto bump = [&](Symbol c, long delta) {
        const bool was = diff[c] != 0;
        diff[c] += delta;
        const bool now = diff[c] != 0;
        nonzero += static_cast<std::size_t>(now) - static_cast<std::size_t>(was);
    };
    for (std::size_t k = 0; k < j; ++k) {
        bump(w[k], +1);
        bump(w[j + k], -1);
    }
    steps += 2 * j;
    for (std::size_t i = j - 1;; ++i) {
        table.set(j, i, nonzero == 0);
        ++steps;
        if (i + j + 1 >= n) break;
        bump(w[i + 1 - j], -1);      // leaves the left window
        bump(w[i + 1], +2);          // moves from the right window to the left
        bump(w[i + j + 1], -1);      // enters the right window
    }
}

}  // namespace

SquareCenterTable build_square_table_serial(std::span<const Symbol> w, OfflineCounters* counters) {
    SquareCenterTable table(w.size());
    std::vector<long> diff(sigma_of(w), 0);
    std::uint64_t steps = 0;
    for (std::size_t j = 1; j <= table.rows(); ++j) fill_row(w, j, table, diff, steps);
    if (counters) counters->table_steps += steps;
    return table;
}

SquareCenterTable build_square_table(std::span<const Symbol> w, OfflineCounters* counters) {
    SquareCenterTable table(w.size());
    const std::size_t sigma = sigma_of(w);
    const auto rows = static_cast<std::int64_t>(table.rows());
    std::uint64_t steps = 0;
#pragma omp parallel reduction(+ : steps)
    {
        std::vector<long> diff(sigma, 0);
#pragma omp for schedule(dynamic, 4)
        for (std::int64_t j = 1; j <= rows; ++j) fill_row(w, static_cast<std::size_t>(j), table, diff, steps);
    }
    if (counters) counters->table_steps += steps;
    return table;
}

std::vector<Repetition> maximal_repetitions(SquareCenterTable& table, std::size_t j, OfflineCounters* counters) {
    if (j == 0 || j > table.rows()) throw std::out_of_range("maximal_repetitions: row outside table");
    std::vector<Repetition> out;
    std::uint64_t steps = 0;
    for (std::size_t i = 0; i < table.columns(); ++i) {
        ++steps;
        if (!table.cell(j, i) || table.marked(j, i)) continue;
        // i - j is unset or already chained, so the repetition cannot grow leftwards
        std::size_t k = 0;
        table.mark(j, i);
        while (table.cell(j, i + (k + 1) * j)) {
            ++k;
            table.mark(j, i + k * j);
            ++steps;
        }
        out.push_back({i + 1 - j, i + (k + 1) * j, j});
    }
    if (counters) counters->chain_steps += steps;
    return out;
}

// ---------------------------------------------------------------------------

HeadTailExtender::HeadTailExtender(std::span<const Symbol> w)
    : n_(w.size()), sigma_(sigma_of(w)), prefix_(sigma_ * (n_ + 1), 0), occurrences_(sigma_) {
    for (Symbol c = 0; c < sigma_; ++c) {
        std::size_t* row = &prefix_[c * (n_ + 1)];
        for (std::size_t k = 0; k < n_; ++k) row[k + 1] = row[k] + (w[k] == c);
    }
    for (Position k = 0; k < n_; ++k) occurrences_[w[k]].push_back(k);
}

OfflineRun HeadTailExtender::extend(const Repetition& rep, OfflineCounters* counters) const {
    if (rep.p == 0 || rep.end >= n_ || rep.start + rep.p > n_) throw std::out_of_range("extend: bad repetition");
    const Position s = rep.start;
    const Position end = rep.end;
    std::size_t h = std::min(rep.p - 1, s);
    std::size_t t = std::min(rep.p - 1, n_ - 1 - end);
    for (Symbol c = 0; c < sigma_; ++c) {
        // the (allowed + 1)-th occurrence of c on either side bounds the extension
        const std::size_t allowed = count_before(c, s + rep.p) - count_before(c, s);
        const std::size_t left = count_before(c, s);
        if (left > allowed) h = std::min(h, s - occurrences_[c][left - allowed - 1] - 1);
        const std::size_t right_rank = count_before(c, end + 1);
        if (occurrences_[c].size() - right_rank > allowed)
            t = std::min(t, occurrences_[c][right_rank + allowed] - end - 1);
    }
    if (counters) counters->extension_steps += sigma_;
    return {s - h, h, t, end + t, rep.p};
}

OfflineRun extend_head_tail(std::span<const Symbol> w, const Repetition& rep) {
    return HeadTailExtender(w).extend(rep);
}

// ---------------------------------------------------------------------------

namespace {

void finalize(std::vector<OfflineRun>& runs) {
    std::sort(runs.begin(), runs.end());
    runs.erase(std::unique(runs.begin(), runs.end()), runs.end());
}

}  // namespace

std::vector<OfflineRun> offline_all_runs_serial(std::span<const Symbol> w, OfflineCounters* counters) {
    OfflineCounters local;
    SquareCenterTable table = build_square_table_serial(w, &local);
    const HeadTailExtender extender(w);
    std::vector<OfflineRun> out;
    for (std::size_t j = 1; j <= table.rows(); ++j)
        for (const Repetition& rep : maximal_repetitions(table, j, &local)) out.push_back(extender.extend(rep, &local));
    finalize(out);
    if (counters) *counters += local;
    return out;
}

std::vector<OfflineRun> offline_all_runs(std::span<const Symbol> w, OfflineCounters* counters) {
    OfflineCounters local;
    SquareCenterTable table = build_square_table(w, &local);
    const HeadTailExtender extender(w);
    const auto rows = static_cast<std::int64_t>(table.rows());
    std::vector<std::vector<OfflineRun>> per_row(table.rows());
    std::uint64_t chain = 0;
    std::uint64_t extension = 0;
#pragma omp parallel for schedule(dynamic, 4) reduction(+ : chain, extension)
    for (std::int64_t j = 1; j <= rows; ++j) {
        OfflineCounters row_counters;
        for (const Repetition& rep : maximal_repetitions(table, static_cast<std::size_t>(j), &row_counters))
            per_row[j - 1].push_back(extender.extend(rep, &row_counters));
        chain += row_counters.chain_steps;
        extension += row_counters.extension_steps;
    }
    local.chain_steps += chain;
    local.extension_steps += extension;

    std::vector<OfflineRun> out;
    for (auto& row : per_row) out.insert(out.end(), row.begin(), row.end());
    finalize(out);
    if (counters) *counters += local;
    return out;
}

}  // namespace abelian
