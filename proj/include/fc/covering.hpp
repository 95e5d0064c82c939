#pragma once

// FC-covering and nonFC-covering relations between families and
// characteristic collections, plus the extremality predicates used to select
// characteristic families.

#include <functional>

#include "fc/family.hpp"

namespace fc {

/// true iff some isomorph of Fc is contained in closure(F).
bool fc_covered(const Family& f, const Family& fc);
bool fc_covered(const Family& f, const Collection& fcs);
bool fc_covered(const Collection& c, const Collection& fcs);

/// true iff closure(F) ⊆ closure(Nc') ∪ {∅} for some isomorph Nc' of Nc.
bool nonfc_covered(const Family& f, const Family& nc);
bool nonfc_covered(const Family& f, const Collection& ncs);
bool nonfc_covered(const Collection& c, const Collection& ncs);

bool covered(const Family& f, const Collection& fcs, const Collection& ncs);
bool covered(const Collection& c, const Collection& fcs, const Collection& ncs);

/// Decides whether a family is FC (true) or nonFC (false).
using FcOracle = std::function<bool(const Family&)>;

/// F is irreducible, FC, and removing any single member leaves a nonFC family.
bool is_minimal_fc(const Family& f, const FcOracle& oracle);

/// F is union-closed, nonFC, and adding any nonempty A ∈ pow(⋃F) ∖ F yields
/// an FC family.
bool is_maximal_nonfc(const Family& f, const FcOracle& oracle);

}  // namespace fc
