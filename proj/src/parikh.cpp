#include "abelian/parikh.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace abelian {

Symbol Alphabet::intern(char c) {
    auto [it, inserted] = index_.try_emplace(c, static_cast<Symbol>(symbols_.size()));
    if (inserted) symbols_.push_back(c);
    return it->second;
}

Symbol Alphabet::index_of(char c) const {
    auto it = index_.find(c);
    if (it == index_.end()) throw std::out_of_range("symbol not in alphabet");
    return it->second;
}

std::pair<Alphabet, Word> intern(std::string_view text, std::string_view extra_symbols) {
    Alphabet alphabet;
    Word word;
    word.reserve(text.size());
    for (char c : text) word.push_back(alphabet.intern(c));
    for (char c : extra_symbols) alphabet.intern(c);
    return {std::move(alphabet), std::move(word)};
}

ParikhVector::ParikhVector(std::initializer_list<count_type> counts)
    : ParikhVector(std::vector<count_type>(counts)) {}

ParikhVector::ParikhVector(std::vector<count_type> counts)
    : counts_(std::move(counts)),
      norm_(std::accumulate(counts_.begin(), counts_.end(), count_type{0})) {}

void ParikhVector::add(Symbol s, count_type k) {
    if (s >= counts_.size()) grow(s + 1);
    counts_[s] += k;
    norm_ += k;
}

void ParikhVector::remove(Symbol s, count_type k) {
    if (s >= counts_.size() || counts_[s] < k) throw std::logic_error("Parikh count underflow");
    counts_[s] -= k;
    norm_ -= k;
}

void ParikhVector::grow(std::size_t sigma) {
    if (sigma > counts_.size()) counts_.resize(sigma, 0);
}

ParikhVector& ParikhVector::operator+=(const ParikhVector& other) {
    if (other.size() != size()) throw std::invalid_argument("Parikh vectors over different alphabets");
    for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
    norm_ += other.norm_;
    return *this;
}

std::string ParikhVector::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < counts_.size(); ++i) os << (i ? "," : "") << counts_[i];
    os << ')';
    return os.str();
}

ParikhVector parikh_of_range(std::span<const Symbol> w, Position lo, Position end, std::size_t sigma) {
    if (lo > end || end > w.size()) throw std::out_of_range("parikh_of: range outside the word");
    ParikhVector pv(sigma);
    for (Position i = lo; i < end; ++i) {
        if (w[i] >= sigma) throw std::out_of_range("parikh_of: symbol outside the alphabet");
        pv.add(w[i]);
    }
    return pv;
}

ParikhVector parikh_of(std::span<const Symbol> w, Position lo, Position hi, std::size_t sigma) {
    // hi + 1 overflows only for hi = SIZE_MAX, which is never a valid bound
    if (hi == static_cast<Position>(-1) && lo == 0) return ParikhVector(sigma);
    return parikh_of_range(w, lo, hi + 1, sigma);
}

bool contains_strict(const ParikhVector& p, const ParikhVector& q) {
    if (p.size() != q.size()) throw std::invalid_argument("contains_strict: dimension mismatch");
    if (p.norm() >= q.norm()) return false;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] > q[i]) return false;
    return true;
}

// ---------------------------------------------------------------------------

WindowComparator::WindowComparator(ParikhVector target)
    : target_(std::move(target)), window_(target_.size()), width_(target_.norm()) {
    if (width_ == 0) throw std::invalid_argument("period must have norm >= 1");
    ring_.assign(2 * width_, 0);
    for (auto c : target_.counts()) mismatches_ += (c != 0);
}

void WindowComparator::grow(Symbol sym) {
    // a fresh symbol has target 0 and window 0, so the mismatch count is unchanged
    target_.grow(sym + 1);
    window_.grow(sym + 1);
}

void WindowComparator::bump(Symbol sym, bool increment) {
    bool was_equal = window_[sym] == target_[sym];
    if (increment)
        window_.add(sym);
    else
        window_.remove(sym);
    bool now_equal = window_[sym] == target_[sym];
    if (was_equal && !now_equal) ++mismatches_;
    if (!was_equal && now_equal) --mismatches_;
    operations_ += 2;
}

bool WindowComparator::advance(Symbol sym) {
    if (sym >= target_.size()) grow(sym);
    if (filled_ >= width_) bump(recent(width_ - 1), false);
    ring_[filled_ % ring_.size()] = sym;
    ++filled_;
    bump(sym, true);
    return equal();
}

Symbol WindowComparator::recent(std::size_t back) const {
    if (back >= filled_ || back >= ring_.size()) throw std::out_of_range("WindowComparator: history exhausted");
    return ring_[(filled_ - 1 - back) % ring_.size()];
}

std::size_t WindowComparator::footprint_bytes() const {
    return sizeof(*this) + (target_.size() + window_.size()) * sizeof(ParikhVector::count_type) +
           ring_.capacity() * sizeof(Symbol);
}

// ---------------------------------------------------------------------------

SuffixInclusionTracker::SuffixInclusionTracker(ParikhVector target)
    : target_(std::move(target)), suffix_(target_.size()) {
    if (target_.norm() == 0) throw std::invalid_argument("period must have norm >= 1");
    ring_.assign(target_.norm(), 0);
}

void SuffixInclusionTracker::grow(Symbol sym) {
    target_.grow(sym + 1);
    suffix_.grow(sym + 1);
}

std::size_t SuffixInclusionTracker::advance(Symbol sym) {
    if (sym >= target_.size()) grow(sym);
    ring_[head_] = sym;
    head_ = (head_ + 1) % ring_.size();
    suffix_.add(sym);
    ++length_;
    if (suffix_[sym] == target_[sym] + 1) ++excess_;
    ++operations_;

    const std::size_t limit = target_.norm() - 1;
    while (length_ > limit || excess_ > 0) {
        Symbol oldest = ring_[(head_ + ring_.size() - length_) % ring_.size()];
        if (suffix_[oldest] == target_[oldest] + 1) --excess_;
        suffix_.remove(oldest);
        --length_;
        ++operations_;
    }
    return length_;
}

std::size_t SuffixInclusionTracker::footprint_bytes() const {
    return sizeof(*this) + (target_.size() + suffix_.size()) * sizeof(ParikhVector::count_type) +
           ring_.capacity() * sizeof(Symbol);
}

}  // namespace abelian
