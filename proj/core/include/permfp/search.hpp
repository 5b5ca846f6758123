#pragma once

#include "permfp/picard.hpp"

#include <functional>
#include <optional>

namespace permfp {

// Bounds for the realization search.  The candidate space is every bounded
// complex whose degree-n module is a direct sum of 1..max_summands orbit
// modules with stabilizers from `pool`, over a window of at most max_degrees
// consecutive degrees with the bottom degree occupied.  Every complex the
// budget describes is a shift of exactly one such candidate, and shifting
// moves every dimension function by a constant.
struct SearchBudget {
    int max_degrees = 3;  // windows of 1..3 degrees are supported
    int max_summands = 2;
    std::vector<Subgroup> pool;  // stabilizers; empty = one per p-subgroup class
    long long max_candidates = 1LL << 26;  // hard cap on differentials examined

    // Skip every profile whose degreewise reversal comes earlier in the
    // enumeration: reversing the profile and transposing the differentials is
    // a bijection of the candidate space (duality followed by a shift) that
    // turns a dimension function lambda into (top degree) - lambda.  Only
    // sound when the acceptance predicate is invariant under that change, so
    // callers opt in explicitly.
    bool duality_reduction = false;
};

struct SearchOutcome {
    std::optional<Complex> witness;
    bool exhausted = false;    // the whole budget space was swept, no witness
    long long candidates = 0;  // differential assignments examined
    long long profiles = 0;    // module profiles visited
};

// Exhaustive search for an invertible complex whose dimension function equals
// `target`, degrees taken literally.  Deterministic; returns the first
// witness in enumeration order, or none with exhausted = true.  Throws
// std::runtime_error if max_candidates is exceeded.
SearchOutcome realize_search(const GroupPtr& g, int p, const ClassFunction& target,
                             const SearchBudget& budget);

// Same sweep, accepting any invertible complex whose dimension function
// satisfies `accept`.  Candidates have bottom degree 0, so a predicate
// invariant under adding constants decides existence within budget up to
// shift.
SearchOutcome search_where(const GroupPtr& g, int p,
                           const std::function<bool(const ClassFunction&)>& accept,
                           const SearchBudget& budget);

}  // namespace permfp
