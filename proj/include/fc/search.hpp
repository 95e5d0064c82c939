#pragma once

// Pruned search for a union-closed extension with negative share.
//
// The search walks the list of negative-share subsets of ⋃Fc, either
// skipping or inserting each one into the candidate family (closing for
// closure(Fc) on insertion), and prunes a branch as soon as the remaining
// negative mass cannot pull the candidate's share below zero.

#include <optional>

#include "fc/family.hpp"
#include "fc/weights.hpp"

namespace fc {

/// true iff F ⊆ pow(⋃Fc) and F is union-closed for Fc.
bool uce_contains(const Family& fc, const Family& f);

/// true iff some union-closed extension of Fc has negative share wrt w and
/// ⋃Fc.  Requires w to be a weight function on ⋃Fc.
bool ssn(const Family& fc, const WeightFn& w);

/// The first negative-share extension in the fixed traversal order, or
/// nothing exactly when ssn returns false.
std::optional<Family> find_negative_extension(const Family& fc, const WeightFn& w);

namespace detail {

/// ssn with the search-state invariant (cached candidate share equals the
/// freshly recomputed one) re-verified at every node; throws on mismatch.
bool ssn_paranoid(const Family& fc, const WeightFn& w);

}  // namespace detail

}  // namespace fc
