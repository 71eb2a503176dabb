#include <doctest.h>

#include <stdexcept>

#include "abelian/parikh.hpp"
#include "abelian/period_spec.hpp"
#include "support.hpp"

using namespace abelian;
using namespace abelian::testing;

TEST_CASE("intern assigns dense indices by first occurrence") {
    auto [alphabet, word] = intern("abaababaabbb");
    CHECK(alphabet.size() == 2);
    CHECK(alphabet.index_of('a') == 0);
    CHECK(alphabet.index_of('b') == 1);
    CHECK(word.size() == 12);
    CHECK(word == letters("abaababaabbb"));
    CHECK_THROWS_AS(alphabet.index_of('c'), std::out_of_range);
}

TEST_CASE("intern of empty text takes its alphabet from the period symbols") {
    auto [alphabet, word] = intern("", "ba");
    CHECK(word.empty());
    CHECK(alphabet.size() == 2);
    CHECK(alphabet.index_of('b') == 0);
}

TEST_CASE("intern with a one-symbol period") {
    auto [alphabet, word] = intern("zzz", "z");
    CHECK(alphabet.size() == 1);
    CHECK(word == Word{0, 0, 0});
}

TEST_CASE("parikh_of") {
    CHECK(parikh_of(letters("aab"), 0, 2, 2) == ParikhVector{2, 1});
    CHECK(parikh_of(letters("aab"), 1, 0, 2) == ParikhVector{0, 0});
    CHECK(parikh_of(letters("aab"), 0, static_cast<Position>(-1), 2) == ParikhVector{0, 0});
    CHECK(parikh_of(letters("abaababaabbb"), 3, 6, 2) == ParikhVector{2, 2});
    CHECK_THROWS_AS(parikh_of(letters("aab"), 1, 3, 2), std::out_of_range);
    CHECK_THROWS_AS(parikh_of(letters("aab"), 3, 1, 2), std::out_of_range);
}

TEST_CASE("parikh_of is additive over any split") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Word w = random_letters(3, 20, seed);
        for (Position lo = 0; lo < w.size(); ++lo)
            for (Position hi = lo; hi < w.size(); ++hi)
                for (Position m = lo; m < hi; ++m)
                    REQUIRE(parikh_of(w, lo, hi, 3) == parikh_of(w, lo, m, 3) + parikh_of(w, m + 1, hi, 3));
    }
}

TEST_CASE("contains_strict") {
    CHECK(contains_strict({1, 0}, {1, 2}));
    CHECK_FALSE(contains_strict({2, 2}, {2, 2}));
    CHECK_FALSE(contains_strict({0, 3}, {2, 2}));
    CHECK(contains_strict({0, 0}, {2, 2}));
    CHECK_THROWS_AS(contains_strict({1}, {1, 2}), std::invalid_argument);
}

TEST_CASE("contains_strict is irreflexive, transitive and implies a smaller norm") {
    std::vector<ParikhVector> all;
    for (std::size_t a = 0; a <= 3; ++a)
        for (std::size_t b = 0; b <= 3; ++b)
            for (std::size_t c = 0; c <= 2; ++c) all.push_back(ParikhVector{a, b, c});
    for (const auto& p : all) {
        CHECK_FALSE(contains_strict(p, p));
        for (const auto& q : all) {
            if (!contains_strict(p, q)) continue;
            CHECK(p.norm() < q.norm());
            for (const auto& r : all)
                if (contains_strict(q, r)) CHECK(contains_strict(p, r));
        }
    }
}

TEST_CASE("window comparator on the worked example") {
    const Word w = letters("abaababaabbb");
    WindowComparator cmp(ParikhVector{2, 2});
    for (Position i = 0; i <= 6; ++i) cmp.advance(w[i]);
    CHECK(cmp.equal());  // w[3..6] = abab
    bool last = true;
    for (Position i = 7; i <= 11; ++i) last = cmp.advance(w[i]);
    CHECK_FALSE(last);  // w[8..11] = abbb

    WindowComparator single(ParikhVector{1, 0});
    CHECK(single.advance(0));
}

TEST_CASE("window comparator rejects an empty period") {
    CHECK_THROWS_AS(WindowComparator(ParikhVector{0, 0}), std::invalid_argument);
}

TEST_CASE("window comparator agrees with recomputation") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const unsigned sigma = 2 + seed % 3;
        const Word w = random_letters(sigma, 200, seed);
        // target taken from a window of the word so that matches actually occur
        const std::size_t p = 1 + seed % 7;
        const ParikhVector target = parikh_of(w, 17, 17 + p - 1, sigma);
        WindowComparator cmp(target);
        for (Position i = 0; i < w.size(); ++i) {
            const bool flag = cmp.advance(w[i]);
            const bool expected = i + 1 >= p && parikh_of(w, i + 1 - p, i, sigma) == target;
            REQUIRE(flag == expected);
            REQUIRE(cmp.mismatches() == [&] {
                std::size_t r = 0;
                for (std::size_t c = 0; c < sigma; ++c) r += cmp.window()[c] != target[c];
                return r;
            }());
        }
    }
}

TEST_CASE("window comparator treats unseen symbols as required count zero") {
    WindowComparator cmp(ParikhVector{1, 1});
    CHECK_FALSE(cmp.advance(0));
    CHECK(cmp.advance(1));
    CHECK_FALSE(cmp.advance(5));
    CHECK_FALSE(cmp.advance(0));
    CHECK(cmp.advance(1));
}

TEST_CASE("suffix tracker examples") {
    SuffixInclusionTracker trk(ParikhVector{2, 2});
    trk.advance(0);
    trk.advance(1);
    CHECK(trk.advance(0) == 3);  // aba = (2,1)

    SuffixInclusionTracker only_a(ParikhVector{2, 0});
    CHECK(only_a.advance(1) == 0);

    SuffixInclusionTracker fresh(ParikhVector{1, 1});
    CHECK(fresh.longest() == 0);
}

TEST_CASE("suffix tracker matches brute force and grows by at most one") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const unsigned sigma = 2 + seed % 2;
        const Word w = random_letters(sigma, 150, seed + 100);
        const std::size_t p = 1 + seed % 6;
        const ParikhVector target = parikh_of(w, 5, 5 + p - 1, sigma);
        SuffixInclusionTracker trk(target);
        std::size_t previous = 0;
        for (Position i = 0; i < w.size(); ++i) {
            const std::size_t s = trk.advance(w[i]);
            REQUIRE(s <= previous + 1);
            REQUIRE(s <= p - 1);
            std::size_t expected = 0;
            for (std::size_t len = 1; len <= std::min<std::size_t>(p - 1, i + 1); ++len)
                if (contains_strict(parikh_of(w, i + 1 - len, i, sigma), target)) expected = len;
                else break;
            REQUIRE(s == expected);
            for (std::size_t len = 0; len <= s; ++len)
                REQUIRE(contains_strict(parikh_of_range(w, i + 1 - len, i + 1, sigma), target));
            previous = s;
        }
    }
}

TEST_CASE("period spec parsing") {
    const PeriodSpec spec = PeriodSpec::parse("a:2,b:2");
    CHECK(spec.norm() == 4);
    CHECK(spec.symbols() == "ab");

    const PeriodSpec punct = PeriodSpec::parse(",:1,::2");
    CHECK(punct.symbols() == ",:");
    CHECK(punct.norm() == 3);

    CHECK(PeriodSpec::parse("x:0,y:1").norm() == 1);
    CHECK_THROWS_AS(PeriodSpec::parse(""), PeriodSyntaxError);
    CHECK_THROWS_AS(PeriodSpec::parse("a:0"), PeriodSyntaxError);
    CHECK_THROWS_AS(PeriodSpec::parse("a2"), PeriodSyntaxError);
    CHECK_THROWS_AS(PeriodSpec::parse("a:"), PeriodSyntaxError);
    CHECK_THROWS_AS(PeriodSpec::parse("a:1,a:2"), PeriodSyntaxError);
    CHECK_THROWS_AS(PeriodSpec::parse("a:1,"), PeriodSyntaxError);
    CHECK_THROWS_AS(PeriodSpec::parse("a:1;b:1"), PeriodSyntaxError);
}

TEST_CASE("distinct window vectors") {
    const auto vectors = distinct_window_vectors(letters("aab"), 2, 2);
    // norm 1: (1,0) (0,1); norm 2: (2,0) (1,1)
    CHECK(vectors.size() == 4);
    CHECK(distinct_window_vectors(letters("ab"), 2, 5).size() == 3);
}
