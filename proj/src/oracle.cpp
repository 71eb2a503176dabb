#include "abelian/oracle.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace abelian::oracle {

namespace {

std::size_t sigma_of(std::span<const Symbol> w, std::size_t at_least) {
    std::size_t sigma = at_least;
    for (Symbol s : w) sigma = std::max<std::size_t>(sigma, s + 1);
    return sigma;
}

ParikhVector padded(const ParikhVector& v, std::size_t sigma) {
    ParikhVector out = v;
    out.grow(sigma);
    return out;
}

}  // namespace

namespace {

// Per-symbol prefix counts so that any factor's Parikh vector is O(sigma).
class FactorCounts {
public:
    FactorCounts(std::span<const Symbol> w, const ParikhVector& period)
        : n_(w.size()), sigma_(sigma_of(w, period.size())), prefix_(sigma_ * (n_ + 1), 0),
          target_(padded(period, sigma_)) {
        for (std::size_t k = 0; k < n_; ++k)
            for (std::size_t c = 0; c < sigma_; ++c) prefix_[c * (n_ + 1) + k + 1] = prefix_[c * (n_ + 1) + k] + (w[k] == c);
    }

    std::size_t size() const { return n_; }
    std::size_t norm() const { return target_.norm(); }

    std::size_t count(std::size_t c, Position lo, Position end) const {
        return prefix_[c * (n_ + 1) + end] - prefix_[c * (n_ + 1) + lo];
    }

    bool block_matches(Position lo) const {
        for (std::size_t c = 0; c < sigma_; ++c)
            if (count(c, lo, lo + norm()) != target_[c]) return false;
        return true;
    }

    // w[lo..end-1] strictly contained in P; callers only pass lengths below |P|
    bool strictly_inside(Position lo, Position end) const {
        for (std::size_t c = 0; c < sigma_; ++c)
            if (count(c, lo, end) > target_[c]) return false;
        return end - lo < norm();
    }

    bool valid(Position b, Position e, std::size_t h, std::size_t t) const {
        const std::size_t p = norm();
        if (p == 0 || b > e || e >= n_) return false;
        if (h >= p || t >= p) return false;
        const std::size_t length = e - b + 1;
        if (h + t >= length) return false;
        if ((length - h - t) % p != 0) return false;
        for (Position s = b + h; s + p <= e - t + 1; s += p)
            if (!block_matches(s)) return false;
        return strictly_inside(b, b + h) && strictly_inside(e + 1 - t, e + 1);
    }

    std::optional<RunOccurrence> smallest_tail(Position b, Position e) const {
        const std::size_t length = e - b + 1;
        if (length < norm()) return std::nullopt;
        for (std::size_t t = 0; t < norm() && t < length; ++t) {
            const std::size_t h = (length - t) % norm();  // the only head making the body a multiple of |P|
            if (valid(b, e, h, t)) return RunOccurrence{b, h, t, e};
        }
        return std::nullopt;
    }

private:
    std::size_t n_;
    std::size_t sigma_;
    std::vector<std::size_t> prefix_;
    ParikhVector target_;
};

}  // namespace

bool occurrence_valid(std::span<const Symbol> w, Position b, Position e, std::size_t h, std::size_t t,
                      const ParikhVector& period) {
    return FactorCounts(w, period).valid(b, e, h, t);
}

bool interval_has_period(std::span<const Symbol> w, Position b, Position e, const ParikhVector& period) {
    return FactorCounts(w, period).smallest_tail(b, e).has_value();
}

RunOccurrence canonical_tuple(std::span<const Symbol> w, Position b, Position e, const ParikhVector& period) {
    if (auto run = FactorCounts(w, period).smallest_tail(b, e)) return *run;
    throw std::logic_error("canonical_tuple: interval has no abelian period");
}

OracleRunSet oracle_runs(const ParikhVector& period, std::span<const Symbol> w) {
    if (period.norm() == 0) throw std::invalid_argument("period must have norm >= 1");
    const FactorCounts counts(w, period);
    auto has_period = [&](Position b, Position e) { return counts.smallest_tail(b, e).has_value(); };
    OracleRunSet out{{}, period};
    const std::size_t n = w.size();
    for (Position b = 0; b < n; ++b) {
        for (Position e = b; e < n; ++e) {
            auto run = counts.smallest_tail(b, e);
            if (!run) continue;
            if (b > 0 && has_period(b - 1, e)) continue;
            if (e + 1 < n && has_period(b, e + 1)) continue;
            if (run->body() >= 2 * period.norm()) out.runs.push_back(*run);
        }
    }
    return out;
}

std::vector<Repetition> oracle_all_repetitions(std::span<const Symbol> w) {
    const std::size_t n = w.size();
    const std::size_t sigma = sigma_of(w, 0);
    auto block = [&](Position s, std::size_t p) { return parikh_of_range(w, s, s + p, sigma); };

    std::vector<Repetition> out;
    for (std::size_t p = 1; 2 * p <= n; ++p) {
        for (Position start = 0; start + 2 * p <= n; ++start) {
            const ParikhVector first = block(start, p);
            for (std::size_t blocks = 2; start + blocks * p <= n; ++blocks) {
                bool equal = true;
                for (std::size_t k = 1; k < blocks && equal; ++k) equal = block(start + k * p, p) == first;
                if (!equal) continue;
                const Position end = start + blocks * p - 1;
                const bool left_max = start < p || block(start - p, p) != first;
                const bool right_max = end + p >= n || block(end + 1, p) != first;
                if (left_max && right_max) out.push_back({start, end, p});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

OfflineRun oracle_extend(std::span<const Symbol> w, const Repetition& rep) {
    const std::size_t sigma = sigma_of(w, 0);
    const ParikhVector target = parikh_of_range(w, rep.start, rep.start + rep.p, sigma);
    std::size_t h = 0;
    for (std::size_t len = 1; len < rep.p && len <= rep.start; ++len)
        if (contains_strict(parikh_of_range(w, rep.start - len, rep.start, sigma), target)) h = len;
    std::size_t t = 0;
    for (std::size_t len = 1; len < rep.p && rep.end + len < w.size(); ++len)
        if (contains_strict(parikh_of_range(w, rep.end + 1, rep.end + 1 + len, sigma), target)) t = len;
    return {rep.start - h, h, t, rep.end + t, rep.p};
}

}  // namespace abelian::oracle
