#pragma once

#include <span>
#include <vector>

#include "abelian/parikh.hpp"
#include "abelian/run.hpp"

// Brute-force reference semantics. Everything here is recomputed from scratch
// with parikh_of and is meant for words of a few hundred symbols at most.

namespace abelian::oracle {

struct OracleRunSet {
    std::vector<RunOccurrence> runs;  // sorted by b
    ParikhVector period;
};

/// True iff w[b..e] factors as head(h) . blocks . tail(t) with every block's
/// Parikh vector equal to P, at least one block, and head and tail strictly
/// contained in P.
bool occurrence_valid(std::span<const Symbol> w, Position b, Position e, std::size_t h, std::size_t t,
                      const ParikhVector& period);

bool interval_has_period(std::span<const Symbol> w, Position b, Position e, const ParikhVector& period);

/// The valid factorization of w[b..e] with the smallest tail.
/// Throws std::logic_error when the interval has no factorization.
RunOccurrence canonical_tuple(std::span<const Symbol> w, Position b, Position e, const ParikhVector& period);

/// Every maximal interval with period P whose canonical body is at least 2|P|.
OracleRunSet oracle_runs(const ParikhVector& period, std::span<const Symbol> w);

/// Every maximal abelian repetition, all period lengths, sorted by (p, start).
std::vector<Repetition> oracle_all_repetitions(std::span<const Symbol> w);

/// Widens a repetition by the longest head and tail strictly contained in its
/// block vector, checking each candidate length from scratch.
OfflineRun oracle_extend(std::span<const Symbol> w, const Repetition& rep);

}  // namespace abelian::oracle
