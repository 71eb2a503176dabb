#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace abelian {

/// Dense symbol index in [0, sigma).
using Symbol = std::uint32_t;
/// 0-based position in a word.
using Position = std::size_t;

/// Ordered set of distinct input symbols (bytes) with a dense index for each.
class Alphabet {
public:
    Alphabet() = default;

    /// Returns the index of `c`, appending it if it has not been seen yet.
    Symbol intern(char c);
    /// Index of `c`; throws std::out_of_range when `c` is unknown.
    Symbol index_of(char c) const;
    bool contains(char c) const { return index_.count(c) != 0; }
    char symbol(Symbol s) const { return symbols_.at(s); }

    std::size_t size() const { return symbols_.size(); }
    const std::vector<char>& symbols() const { return symbols_; }

private:
    std::vector<char> symbols_;
    std::unordered_map<char, Symbol> index_;
};

/// A word as a sequence of dense symbol indices.
using Word = std::vector<Symbol>;

/// Interns `text` symbol by symbol (first-occurrence order), then appends any
/// of `extra_symbols` not already present.
std::pair<Alphabet, Word> intern(std::string_view text, std::string_view extra_symbols = {});

/// Occurrence counts of every symbol of an alphabet.
class ParikhVector {
public:
    using count_type = std::size_t;

    ParikhVector() = default;
    explicit ParikhVector(std::size_t sigma) : counts_(sigma, 0) {}
    ParikhVector(std::initializer_list<count_type> counts);
    explicit ParikhVector(std::vector<count_type> counts);

    std::size_t size() const { return counts_.size(); }
    count_type norm() const { return norm_; }

    count_type operator[](std::size_t i) const { return counts_[i]; }
    /// Count of `s`, treating indices past the end as zero.
    count_type count_or_zero(Symbol s) const { return s < counts_.size() ? counts_[s] : 0; }

    void add(Symbol s, count_type k = 1);
    void remove(Symbol s, count_type k = 1);
    /// Pads with zero counts up to `sigma` entries; never shrinks.
    void grow(std::size_t sigma);

    std::span<const count_type> counts() const { return counts_; }

    ParikhVector& operator+=(const ParikhVector& other);
    friend ParikhVector operator+(ParikhVector lhs, const ParikhVector& rhs) { return lhs += rhs; }
    friend bool operator==(const ParikhVector&, const ParikhVector&) = default;

    std::string to_string() const;

private:
    std::vector<count_type> counts_;
    count_type norm_ = 0;
};

/// Parikh vector of w[lo..hi] over an alphabet of `sigma` symbols. The empty
/// range is written lo = hi + 1. Throws std::out_of_range on bad bounds.
ParikhVector parikh_of(std::span<const Symbol> w, Position lo, Position hi, std::size_t sigma);
/// Same as above with lo..hi given as a half-open range [lo, end).
ParikhVector parikh_of_range(std::span<const Symbol> w, Position lo, Position end, std::size_t sigma);

/// p ⊂ q: component-wise p[i] <= q[i] and |p| < |q|.
/// Throws std::invalid_argument when the dimensions differ.
bool contains_strict(const ParikhVector& p, const ParikhVector& q);

/// Compares the Parikh vector of the last |P| consumed symbols against a
/// target P in O(1) per symbol, keeping the last 2|P| symbols as history.
class WindowComparator {
public:
    explicit WindowComparator(ParikhVector target);

    /// Consumes `sym`; returns true iff the trailing |P| symbols have Parikh vector P.
    bool advance(Symbol sym);
    bool equal() const { return mismatches_ == 0 && filled_ >= width_; }

    /// Symbol consumed `back` steps ago (0 = most recent). Requires back < history_capacity().
    Symbol recent(std::size_t back) const;
    std::size_t history_capacity() const { return ring_.size(); }

    std::size_t filled() const { return filled_; }
    std::size_t mismatches() const { return mismatches_; }
    const ParikhVector& target() const { return target_; }
    const ParikhVector& window() const { return window_; }

    /// Elementary counter updates and comparisons performed so far.
    std::uint64_t operations() const { return operations_; }
    std::size_t footprint_bytes() const;

private:
    void grow(Symbol sym);
    void bump(Symbol sym, bool increment);

    ParikhVector target_;
    ParikhVector window_;
    std::size_t width_;
    std::size_t mismatches_ = 0;
    std::vector<Symbol> ring_;
    std::size_t filled_ = 0;
    std::uint64_t operations_ = 0;
};

/// Tracks s = the longest suffix length l <= |P|-1 of the consumed symbols
/// whose Parikh vector is strictly contained in P. Amortized O(1) per symbol.
class SuffixInclusionTracker {
public:
    explicit SuffixInclusionTracker(ParikhVector target);

    std::size_t advance(Symbol sym);
    std::size_t longest() const { return length_; }

    std::uint64_t operations() const { return operations_; }
    std::size_t footprint_bytes() const;

private:
    void grow(Symbol sym);

    ParikhVector target_;
    ParikhVector suffix_;
    std::size_t length_ = 0;
    std::size_t excess_ = 0;  // symbols whose suffix count exceeds the target
    std::vector<Symbol> ring_;
    std::size_t head_ = 0;  // next ring slot to write
    std::uint64_t operations_ = 0;
};

}  // namespace abelian
