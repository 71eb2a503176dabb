#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "abelian/parikh.hpp"

namespace abelian {

struct PeriodSyntaxError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Period written as `sym:count[,sym:count...]`, one byte per symbol.
struct PeriodSpec {
    std::vector<std::pair<char, std::size_t>> pairs;

    /// Throws PeriodSyntaxError on malformed text, repeated symbols or norm 0.
    static PeriodSpec parse(std::string_view text);

    std::size_t norm() const;
    /// The symbols in the order written.
    std::string symbols() const;
    /// Counts over `alphabet`, which must already contain every symbol of the spec.
    ParikhVector to_vector(const Alphabet& alphabet) const;
};

/// Every distinct Parikh vector of a window of length 1..max_norm in w.
std::vector<ParikhVector> distinct_window_vectors(std::span<const Symbol> w, std::size_t sigma,
                                                  std::size_t max_norm);

}  // namespace abelian
