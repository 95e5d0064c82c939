#pragma once

// Family isomorphism under permutations of the element domain, canonical
// representatives (minimum over all permuted images), and the iso-base
// sieve that keeps one representative per isomorphism class.

#include <span>
#include <vector>

#include "fc/family.hpp"

namespace fc {

/// A permutation of [n]; mapping[i] is the image of element i.
class Perm {
  public:
    Perm() = default;
    explicit Perm(std::vector<int> mapping);

    int universe_size() const { return static_cast<int>(mapping_.size()); }
    int operator[](int element) const { return mapping_[static_cast<std::size_t>(element)]; }
    const std::vector<int>& mapping() const { return mapping_; }

  private:
    std::vector<int> mapping_;
};

/// All n! permutations of [n], computed once per n and cached.
/// Rejects n > 8 (the naive scheme is meant for small universes).
std::span<const Perm> all_permutations(int n);

SetWord apply_perm(const Perm& p, const SetWord& a);

/// {p[A] : A ∈ F}, re-canonicalized.
Family apply_perm(const Perm& p, const Family& f);

/// Minimum of all n! permuted images under the family order.
Family canonical(const Family& f);

bool is_isomorphic(const Family& a, const Family& b);

/// Sieve: process families in sorted order, keep each first-seen family and
/// drop all its images under the given permutations.  With P = all
/// permutations the survivors form an iso-base of C.
Collection iso_base(const Collection& c, std::span<const Perm> perms);

}  // namespace fc
