#pragma once

// Fast-path representation for universes with n ≤ 6: a whole family fits in
// one 64-bit word, with bit A set iff the subset whose element bitmask is A
// belongs to the family.  Closure, permutation images, canonical forms and
// covering tests all become word operations on top of small lookup tables.
//
// Equivalence with the generic Family-based operations is pinned down by the
// unit tests; the public modules route through here only for n ≤ 6.

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "fc/family.hpp"

namespace fc::mask {

using FamilyMask = std::uint64_t;

inline bool has_member(FamilyMask f, unsigned set_bits) { return (f >> set_bits) & 1; }
inline FamilyMask member_bit(unsigned set_bits) { return FamilyMask{1} << set_bits; }

FamilyMask from_family(const Family& f);
Family to_family(FamilyMask f, int n);

/// F ∪ {A} ∪ {A ∪ B : B ∈ F} on masks.
FamilyMask insert_close(FamilyMask f, unsigned a_bits);

/// Union-closure on masks.
FamilyMask closure(FamilyMask f);

/// ⋃F as an element bitmask.
unsigned support(FamilyMask f);

bool is_union_closed(FamilyMask f);

/// true iff A is a union of members of F (excluding A itself when present).
bool is_dependent(FamilyMask f, unsigned a_bits);

/// Per-universe tables: all n! permutations applied to every subset, plus the
/// rank of each subset under the (cardinality, value) set order.
struct PermTables {
    int n = 0;
    std::size_t perm_count = 0;
    std::vector<std::array<std::uint8_t, 64>> set_image;   // [perm][subset]
    std::vector<std::array<std::uint8_t, 64>> rank_image;  // rank of permuted subset
    std::array<std::uint8_t, 64> rank{};
    std::array<std::uint8_t, 64> unrank{};
};

/// Cached tables for 0 ≤ n ≤ 6.
const PermTables& perm_tables(int n);

/// Family mask re-indexed so that bit positions follow the set order.
std::uint64_t rank_mask(FamilyMask f, const PermTables& t);

/// Family order on rank masks (lexicographic comparison of the sorted member
/// sequences).  The lowest differing bit r decides, except that a family with
/// no member beyond r is a proper prefix of the other and orders first.
inline bool rank_mask_less(std::uint64_t a, std::uint64_t b) {
    if (a == b) return false;
    int r = std::countr_zero(a ^ b);
    std::uint64_t above = r >= 63 ? 0 : ~std::uint64_t{0} << (r + 1);
    if ((a >> r) & 1) return (b & above) != 0;
    return (a & above) == 0;
}

/// Family order on plain masks.
bool mask_less(FamilyMask a, FamilyMask b, const PermTables& t);

/// Image of a family mask under permutation p.
FamilyMask apply_perm(FamilyMask f, const PermTables& t, std::size_t p);

/// Canonical representative: minimum permuted image under the family order.
FamilyMask canonical(FamilyMask f, const PermTables& t);

/// Iso-base sieve over masks; input is sorted by the family order first.
std::vector<FamilyMask> iso_base(std::vector<FamilyMask> masks, const PermTables& t);

/// Deduplicated permutation images of one family mask (for covering tests).
std::vector<FamilyMask> perm_images(FamilyMask f, const PermTables& t);

/// ∃ image m in images with m ⊆ family (images are member-mask images of a
/// characteristic FC family; family is a closure mask).
inline bool any_image_subset_of(const std::vector<FamilyMask>& images, FamilyMask family) {
    for (FamilyMask m : images)
        if ((m & ~family) == 0) return true;
    return false;
}

/// ∃ image m with family ⊆ m (images are closure masks of a characteristic
/// nonFC family, each already OR-ed with the empty-set bit).
inline bool any_image_superset_of(const std::vector<FamilyMask>& images, FamilyMask family) {
    for (FamilyMask m : images)
        if ((family & ~m) == 0) return true;
    return false;
}

}  // namespace fc::mask
