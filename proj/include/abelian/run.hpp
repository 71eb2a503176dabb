#pragma once

#include <compare>
#include <cstddef>

#include "abelian/parikh.hpp"

namespace abelian {

/// Occurrence (b,h,t,e) of a substring with abelian period P: starts at b,
/// ends at e (inclusive), head of length h, tail of length t.
struct RunOccurrence {
    Position b = 0;
    std::size_t h = 0;
    std::size_t t = 0;
    Position e = 0;

    /// Length covered by full blocks, e - b - h - t + 1.
    std::size_t body() const { return e + 1 - b - h - t; }

    friend auto operator<=>(const RunOccurrence&, const RunOccurrence&) = default;
};

/// Abelian repetition w[start..end] made of consecutive blocks of length p
/// sharing one Parikh vector.
struct Repetition {
    Position start = 0;
    Position end = 0;
    std::size_t p = 0;

    friend auto operator<=>(const Repetition&, const Repetition&) = default;
};

/// Maximal repetition widened by its longest head and tail.
struct OfflineRun {
    Position b = 0;
    std::size_t h = 0;
    std::size_t t = 0;
    Position e = 0;
    std::size_t p = 0;

    RunOccurrence occurrence() const { return {b, h, t, e}; }

    friend bool operator==(const OfflineRun&, const OfflineRun&) = default;
    /// Ordered by (p, b), then the remaining fields.
    friend std::strong_ordering operator<=>(const OfflineRun& x, const OfflineRun& y) {
        if (auto c = x.p <=> y.p; c != 0) return c;
        if (auto c = x.b <=> y.b; c != 0) return c;
        if (auto c = x.e <=> y.e; c != 0) return c;
        if (auto c = x.h <=> y.h; c != 0) return c;
        return x.t <=> y.t;
    }
};

}  // namespace abelian
