#pragma once

// Exact rational linear feasibility and optimization over small dimensions,
// integer scaling of rational points, dual-witness extraction for the
// negative-count systems, and LP-format export of the 0-1 encoding of the
// negative-share extension problem.
//
// The solver is a two-phase tableau simplex with Bland's pivoting rule over
// exact rationals; no floating point anywhere on the decision path.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fc/family.hpp"
#include "fc/rational.hpp"
#include "fc/weights.hpp"

namespace fc {

enum class Relation { greater_equal, less_equal, equal };

struct LinearConstraint {
    std::vector<Rational> coeffs;
    Relation relation = Relation::greater_equal;
    Rational rhs;
};

struct LinearSystem {
    int num_vars = 0;
    std::vector<LinearConstraint> rows;
    std::optional<std::vector<Rational>> objective;  // minimized when present
};

/// A feasible point (optimal for the objective when one is given and the
/// problem is bounded), or nothing iff the system is infeasible.
/// Variables are free; sign restrictions must appear as rows.
std::optional<std::vector<Rational>> solve(const LinearSystem& sys);

/// Multiplies by the lcm of denominators and divides by the gcd of the
/// resulting integers: the minimal natural vector proportional to the input.
/// Entries must be nonnegative.
std::vector<std::uint64_t> scale_to_naturals(const std::vector<Rational>& v);

/// Given D[i][a] = 2·cnt(a, F_i) − |F_i|, finds naturals c (not all zero)
/// with Σ_i c_i·D[i][a] < 0 for every column a, or nothing if none exist.
std::optional<std::vector<std::uint64_t>> find_dual_coefficients(
    const std::vector<std::vector<std::int64_t>>& d);

/// Writes the 0-1 feasibility problem "some union-closed extension of Fc has
/// negative share wrt w" in CPLEX textual LP format.  One binary variable
/// x_<bitmask> per subset of [n]; requires ⋃Fc = [n].
void export_lp(const Family& fc, const WeightFn& w, std::ostream& out);
void export_lp_file(const Family& fc, const WeightFn& w, const std::string& path);

}  // namespace fc
