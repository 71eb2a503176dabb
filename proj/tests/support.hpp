#pragma once

#include <string>
#include <string_view>

#include "abelian/lcg.hpp"
#include "abelian/parikh.hpp"

namespace abelian::testing {

/// Interns a literal word; symbols get indices in first-occurrence order.
inline Word word_of(std::string_view text, std::string_view extra = {}) { return intern(text, extra).second; }

/// Parikh vector over a..(a+sigma-1) of a literal word.
inline ParikhVector vector_of(std::string_view text, std::size_t sigma) {
    ParikhVector v(sigma);
    for (char c : text) v.add(static_cast<Symbol>(c - 'a'));
    return v;
}

/// Word over indices 0..sigma-1 (letter 'a' + k maps to k).
inline Word letters(std::string_view text) {
    Word w;
    for (char c : text) w.push_back(static_cast<Symbol>(c - 'a'));
    return w;
}

inline Word random_letters(unsigned sigma, std::size_t n, std::uint64_t seed) {
    return letters(generate_word(sigma, n, seed));
}

}  // namespace abelian::testing
