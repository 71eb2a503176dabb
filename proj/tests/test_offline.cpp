#include <doctest.h>

#include <set>

#include "abelian/offline_runs.hpp"
#include "abelian/online_runs.hpp"
#include "abelian/oracle.hpp"
#include "abelian/period_spec.hpp"
#include "support.hpp"

using namespace abelian;
using namespace abelian::testing;

namespace {

const Word kExample = letters("abaababaabbb");

bool has_run(const std::vector<OfflineRun>& runs, const OfflineRun& r) {
    return std::find(runs.begin(), runs.end(), r) != runs.end();
}

}  // namespace

TEST_CASE("square table on the worked example") {
    const SquareCenterTable table = build_square_table(kExample);
    CHECK(table.rows() == 6);
    CHECK(table.columns() == 11);
    CHECK(table.cell(4, 6));
    std::set<std::size_t> row1;
    for (std::size_t i = 0; i < 12; ++i)
        if (table.cell(1, i)) row1.insert(i);
    CHECK(row1 == std::set<std::size_t>{2, 7, 9, 10});
    // ba | ab: equal Parikh vectors
    CHECK(table.cell(2, 2));
    CHECK_FALSE(table.cell(3, 0));  // window would start before position 0
    CHECK_FALSE(table.cell(0, 3));
    CHECK_FALSE(table.cell(7, 3));
}

TEST_CASE("square table matches a from-scratch double window") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const unsigned sigma = 1 + seed % 4;
        const Word w = random_letters(sigma, seed < 25 ? 40 + seed : 256, seed);
        const SquareCenterTable table = build_square_table(w);
        const std::size_t n = w.size();
        for (std::size_t j = 1; j <= n / 2; ++j)
            for (std::size_t i = 0; i < n; ++i) {
                const bool expected = i + 1 >= j && i + j <= n - 1 &&
                                      parikh_of(w, i + 1 - j, i, sigma) == parikh_of(w, i + 1, i + j, sigma);
                REQUIRE(table.cell(j, i) == expected);
            }
    }
}

TEST_CASE("parallel and serial kernels agree") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Word w = random_letters(2 + seed % 3, 300, seed);
        CHECK(build_square_table(w).dump() == build_square_table_serial(w).dump());
        OfflineCounters parallel_work, serial_work;
        CHECK(offline_all_runs(w, &parallel_work) == offline_all_runs_serial(w, &serial_work));
        CHECK(parallel_work.total() == serial_work.total());
    }
}

TEST_CASE("maximal_repetitions") {
    SquareCenterTable table = build_square_table(kExample);
    CHECK(maximal_repetitions(table, 4) == std::vector<Repetition>{{3, 10, 4}});
    CHECK(maximal_repetitions(table, 2) == std::vector<Repetition>{{1, 6, 2}, {4, 9, 2}});
    CHECK(maximal_repetitions(table, 6).empty());
    CHECK(table.marked(2, 2));
    CHECK(table.marked(2, 4));
    CHECK_THROWS_AS(maximal_repetitions(table, 7), std::out_of_range);
}

TEST_CASE("extend_head_tail") {
    CHECK(extend_head_tail(kExample, {1, 6, 2}) == OfflineRun{0, 1, 1, 7, 2});
    CHECK(extend_head_tail(kExample, {3, 10, 4}) == OfflineRun{0, 3, 1, 11, 4});
    CHECK(extend_head_tail(letters("abab"), {0, 3, 2}).h == 0);
    CHECK(extend_head_tail(letters("ccababcc"), {2, 5, 2}) == OfflineRun{2, 0, 0, 5, 2});
}

TEST_CASE("extension matches the brute-force oracle") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        const Word w = random_letters(2 + seed % 3, 60, seed + 7);
        const HeadTailExtender extender(w);
        for (const Repetition& rep : oracle::oracle_all_repetitions(w))
            REQUIRE(extender.extend(rep) == oracle::oracle_extend(w, rep));
    }
}

TEST_CASE("offline_all_runs examples") {
    CHECK(has_run(offline_all_runs(kExample), {0, 3, 1, 11, 4}));

    const auto unary = offline_all_runs(letters("aaaa"));
    CHECK(has_run(unary, {0, 0, 0, 3, 1}));
    CHECK(has_run(unary, {0, 0, 0, 3, 2}));

    CHECK(offline_all_runs(letters("a")).empty());
    CHECK(offline_all_runs(Word{}).empty());
}

TEST_CASE("every repetition satisfies both maximality clauses") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const unsigned sigma = 2 + seed % 2;
        const Word w = random_letters(sigma, 64, seed + 300);
        SquareCenterTable table = build_square_table(w);
        for (std::size_t j = 1; j <= table.rows(); ++j)
            for (const Repetition& rep : maximal_repetitions(table, j)) {
                const ParikhVector block = parikh_of_range(w, rep.start, rep.start + j, sigma);
                REQUIRE((rep.end - rep.start + 1) % j == 0);
                REQUIRE(rep.end - rep.start + 1 >= 2 * j);
                for (Position s = rep.start; s <= rep.end; s += j) REQUIRE(parikh_of_range(w, s, s + j, sigma) == block);
                REQUIRE((rep.start < j || parikh_of_range(w, rep.start - j, rep.start, sigma) != block));
                REQUIRE((rep.end + j >= w.size() || parikh_of_range(w, rep.end + 1, rep.end + 1 + j, sigma) != block));
            }
    }
}

TEST_CASE("single-period runs are offline runs of the same block vector") {
    // A run of period P has a maximal repetition as its body and the longest
    // possible head and tail, so it always appears among the offline runs.
    // The converse fails when a longer run with another alignment absorbs it.
    std::size_t single = 0, offline_only = 0;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const unsigned sigma = 2 + seed % 2;
        const Word w = random_letters(sigma, 48, seed + 900);
        const auto all = offline_all_runs(w);
        for (const auto& period : distinct_window_vectors(w, sigma, 6)) {
            std::set<RunOccurrence> from_offline;
            for (const auto& r : all)
                if (r.p == period.norm() && parikh_of_range(w, r.b + r.h, r.b + r.h + r.p, sigma) == period)
                    from_offline.insert(r.occurrence());
            for (const auto& r : runs(period, w)) {
                REQUIRE(from_offline.count(r) == 1);
                from_offline.erase(r);
                ++single;
            }
            offline_only += from_offline.size();
        }
    }
    MESSAGE("runs found by both engines: " << single << ", offline runs that are not maximal occurrences: "
                                           << offline_only);
    CHECK(single > 0);
}

TEST_CASE("offline work grows quadratically") {
    auto work = [](std::size_t n) {
        OfflineCounters c;
        offline_all_runs(random_letters(2, n, 17), &c);
        return static_cast<double>(c.total()) / static_cast<double>(n * n);
    };
    for (std::size_t n : {64u, 128u, 256u, 512u}) CHECK(work(n) <= 2.0);

    OfflineCounters unary;
    offline_all_runs(Word(512, 0), &unary);
    CHECK(unary.total() <= 2 * 512 * 512);
}
