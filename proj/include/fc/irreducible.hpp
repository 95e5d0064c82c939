#pragma once

// Dependence of a set on a family, irreducibility, and reduction to the
// unique irreducible basis of a closure.

#include "fc/family.hpp"

namespace fc {

/// true iff A is the union of some nonempty subfamily of F.  Checked without
/// enumerating subfamilies: A is dependent iff the members of F contained in
/// A are nonempty as a group and their union is exactly A.
bool is_dependent(const SetWord& a, const Family& f);

/// true iff no member of F is a union of other members.
bool is_irreducible(const Family& f);

/// The irreducible F' ⊆ F with closure(F') = closure(F).  Scans members in
/// descending set order; the result is independent of removal order.
Family reduce(const Family& f);

}  // namespace fc
