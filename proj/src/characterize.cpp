#include "fc/characterize.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "fc/covering.hpp"
#include "fc/detail/mask.hpp"
#include "fc/irreducible.hpp"
#include "fc/iso.hpp"

namespace fc {

namespace {

using mask::FamilyMask;
using mask::PermTables;

std::uint64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i) r = r * static_cast<std::uint64_t>(n - i) / (i + 1);
    return r;
}

// [0, C(n,1), ..., C(n,n)]: no empty sets, everything else unrestricted.
PartitionList lattice_max(int n) {
    PartitionList l(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) l[static_cast<std::size_t>(i)] = static_cast<int>(binom(n, i));
    return l;
}

std::vector<unsigned> element_sets(int n, int m) {
    std::vector<unsigned> out;
    for (unsigned bits = 0; bits < (1u << n); ++bits)
        if (std::popcount(bits) == m) out.push_back(bits);
    return out;
}

// Precomputed permutation images of the characteristic collections, for
// covering tests against closure masks.
struct CoverFast {
    std::vector<std::vector<FamilyMask>> fc;     // member masks of FC families
    std::vector<std::vector<FamilyMask>> nonfc;  // closure masks, ∅ bit set

    bool fc_covers(FamilyMask cl) const {
        for (const auto& images : fc)
            if (mask::any_image_subset_of(images, cl)) return true;
        return false;
    }
    bool nonfc_covers(FamilyMask cl) const {
        for (const auto& images : nonfc)
            if (mask::any_image_superset_of(images, cl)) return true;
        return false;
    }
    void add_fc(FamilyMask family, const PermTables& t) {
        fc.push_back(mask::perm_images(family, t));
    }
    void add_nonfc(FamilyMask family, const PermTables& t) {
        auto images = mask::perm_images(mask::closure(family), t);
        for (FamilyMask& m : images) m |= mask::member_bit(0);
        nonfc.push_back(std::move(images));
    }
};

CoverFast cover_of(const Characterization& chars, const PermTables& t) {
    CoverFast cover;
    for (const FCCertificate& c : chars.minimal_fc)
        cover.add_fc(mask::from_family(c.family), t);
    for (const NonFCCertificate& c : chars.maximal_nonfc)
        cover.add_nonfc(mask::from_family(c.family), t);
    return cover;
}

enum class ProductFilter {
    all,                 // P = ⊤
    not_covered,         // P = ¬FC-covered
    irreducible,         // P = irreducible
    irreducible_uncovered,  // P = irreducible ∧ ¬FC-covered
};

// One inductive step: extend every family in the bucket by every m-set that
// passes the incremental predicate, then dedup.
std::vector<FamilyMask> product_step(const std::vector<FamilyMask>& bucket,
                                     const std::vector<unsigned>& sets, ProductFilter filter,
                                     const CoverFast& cover) {
    bool need_closure =
        filter == ProductFilter::not_covered || filter == ProductFilter::irreducible_uncovered;
    bool need_irred =
        filter == ProductFilter::irreducible || filter == ProductFilter::irreducible_uncovered;
    std::vector<FamilyMask> out;
    for (FamilyMask f : bucket) {
        FamilyMask cl_f = need_closure ? mask::closure(f) : 0;
        for (unsigned a : sets) {
            if (mask::has_member(f, a)) continue;
            if (need_irred && mask::is_dependent(f, a)) continue;
            if (need_closure && cover.fc_covers(mask::insert_close(cl_f, a))) continue;
            out.push_back(f | mask::member_bit(a));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<FamilyMask> sorted_by_family_order(std::vector<FamilyMask> masks,
                                               const PermTables& t) {
    std::sort(masks.begin(), masks.end(), [&t](FamilyMask a, FamilyMask b) {
        return mask::rank_mask_less(mask::rank_mask(a, t), mask::rank_mask(b, t));
    });
    return masks;
}

// enum_rec evaluation for a single partition list: fold the product steps
// position by position, sieving after each step.
std::vector<FamilyMask> enumerate_list(const PartitionList& l, ProductFilter filter,
                                       const CoverFast& cover, const PermTables& t) {
    std::vector<FamilyMask> bucket{0};
    for (std::size_t m = 0; m < l.size(); ++m) {
        if (l[m] == 0) continue;
        auto sets = element_sets(t.n, static_cast<int>(m));
        for (int step = 0; step < l[m]; ++step) {
            bucket = mask::iso_base(product_step(bucket, sets, filter, cover), t);
            if (bucket.empty()) return bucket;
        }
    }
    return bucket;
}

bool dominated_by_any(const PartitionList& l, const std::vector<PartitionList>& lower) {
    for (const PartitionList& s : lower)
        if (pointwise_leq(s, l)) return true;
    return false;
}

void report(const CharacterizeOptions& options, const std::string& message) {
    if (options.progress) options.progress(message);
}

std::string list_to_string(const PartitionList& l) {
    std::string s = "[";
    for (std::size_t i = 0; i < l.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(l[i]);
    }
    return s + "]";
}

// The semi-uniform lists over a 6-element universe.
std::vector<PartitionList> known_lf_6() {
    return {{0, 0, 0, 0, 5, 6, 0}, {0, 0, 0, 0, 7, 0, 0}, {0, 0, 0, 1, 6, 5, 0},
            {0, 0, 0, 2, 0, 6, 0}, {0, 0, 0, 3, 0, 4, 0}, {0, 0, 0, 3, 2, 3, 0},
            {0, 0, 0, 3, 3, 0, 0}, {0, 0, 0, 4, 0, 0, 0}, {0, 0, 1, 0, 0, 0, 0},
            {0, 1, 0, 0, 0, 0, 0}};
}

std::vector<PartitionList> known_ln_6() {
    return {{0, 0, 0, 0, 3, 6, 1},
            {0, 0, 0, 0, 4, 1, 1},
            {0, 0, 0, 1, 1, 6, 1},
            {0, 0, 0, 1, 2, 1, 1},
            {0, 0, 0, 2, 0, 1, 1}};
}

// All lists ⪯ lmax in graded lexicographic order (by total, then lex).
std::vector<PartitionList> all_lists_below(const PartitionList& lmax) {
    std::vector<PartitionList> out;
    PartitionList cur(lmax.size(), 0);
    for (;;) {
        out.push_back(cur);
        std::size_t i = 0;
        while (i < cur.size() && cur[i] == lmax[i]) cur[i++] = 0;
        if (i == cur.size()) break;
        ++cur[i];
    }
    std::sort(out.begin(), out.end(), [](const PartitionList& a, const PartitionList& b) {
        int sa = std::accumulate(a.begin(), a.end(), 0);
        int sb = std::accumulate(b.begin(), b.end(), 0);
        if (sa != sb) return sa < sb;
        return a < b;
    });
    return out;
}

// Minimal lists all of whose families are FC-covered.
std::vector<PartitionList> search_lf(int n, const CoverFast& cover, const PermTables& t,
                                     const CharacterizeOptions& options) {
    std::vector<PartitionList> found;
    for (const PartitionList& l : all_lists_below(lattice_max(n))) {
        if (dominated_by_any(l, found)) continue;
        if (enumerate_list(l, ProductFilter::not_covered, cover, t).empty()) {
            found.push_back(l);
            report(options, "lf list " + list_to_string(l));
        }
    }
    return found;
}

// Maximal lists all of whose families are nonFC-covered (searched only for
// small n; the unpruned full iso-bases grow too fast beyond n = 4).
std::vector<PartitionList> search_ln(int n, const CoverFast& cover, const PermTables& t,
                                     const CharacterizeOptions& options) {
    std::vector<PartitionList> found;
    auto lists = all_lists_below(lattice_max(n));
    std::reverse(lists.begin(), lists.end());
    for (const PartitionList& l : lists) {
        bool implied = false;
        for (const PartitionList& s : found)
            if (pointwise_leq(l, s)) {
                implied = true;
                break;
            }
        if (implied) continue;
        auto bucket = enumerate_list(l, ProductFilter::all, cover, t);
        bool all_covered = true;
        for (FamilyMask f : bucket)
            if (!cover.nonfc_covers(mask::closure(f))) {
                all_covered = false;
                break;
            }
        if (all_covered) {
            found.push_back(l);
            report(options, "ln list " + list_to_string(l));
        }
    }
    return found;
}

}  // namespace

Characterization find_characteristic(int n, const CharacterizeOptions& options) {
    if (n < 1 || n > 6)
        throw std::invalid_argument("find_characteristic: need 1 <= n <= 6");
    const PermTables& t = mask::perm_tables(n);

    Characterization result;
    result.n = n;

    CoverFast cover;
    std::vector<FCCertificate> fc_certs;
    std::vector<FamilyMask> fc_masks;
    std::vector<NonFCCertificate> nonfc_certs;
    std::vector<FamilyMask> nonfc_masks;

    auto classify_new = [&](FamilyMask canon) -> bool {
        FCStatus status = classify(mask::to_family(canon, n));
        if (status.is_fc()) {
            fc_certs.push_back(status.fc_certificate());
            fc_masks.push_back(canon);
            cover.add_fc(canon, t);
            return true;
        }
        nonfc_certs.push_back(status.nonfc_certificate());
        nonfc_masks.push_back(canon);
        return false;
    };

    // The empty family seeds the traversal; it is irreducible, uncovered and
    // nonFC, so it is examined like every other bucket member.
    classify_new(0);
    std::vector<FamilyMask> v0{0};

    auto upd = [&](const std::vector<FamilyMask>& bucket, int m) {
        auto sets = element_sets(n, m);
        auto base = mask::iso_base(
            product_step(bucket, sets, ProductFilter::irreducible_uncovered, cover), t);
        std::vector<FamilyMask> carried;
        for (FamilyMask g : base) {
            FamilyMask canon = mask::canonical(g, t);
            // Discovered FC families cover their own extensions, so only
            // nonFC members can produce further uncovered candidates.
            if (!classify_new(canon)) carried.push_back(canon);
        }
        return sorted_by_family_order(std::move(carried), t);
    };
    enum_dp(v0, upd, [](const PartitionList&) { return false; }, lattice_max(n));

    result.fc_examined = fc_certs.size();
    result.nonfc_examined = nonfc_certs.size();
    report(options, "discovery done: " + std::to_string(fc_certs.size()) + " FC, " +
                        std::to_string(nonfc_certs.size()) + " nonFC families classified");

    // Minimal FC families: exactly those not FC-covered by another
    // discovered FC family.
    for (std::size_t i = 0; i < fc_masks.size(); ++i) {
        FamilyMask cl = mask::closure(fc_masks[i]);
        bool covered_by_other = false;
        for (std::size_t j = 0; j < fc_masks.size() && !covered_by_other; ++j)
            if (j != i && mask::any_image_subset_of(cover.fc[j], cl)) covered_by_other = true;
        if (!covered_by_other) result.minimal_fc.push_back(fc_certs[i]);
    }
    std::sort(result.minimal_fc.begin(), result.minimal_fc.end(),
              [](const FCCertificate& a, const FCCertificate& b) {
                  return family_less(a.family, b.family);
              });

    // Maximal nonFC families: drop members nonFC-covered by another member,
    // close the survivors, and certify the canonical closures.
    {
        CoverFast nonfc_cover;
        for (FamilyMask f : nonfc_masks) nonfc_cover.add_nonfc(f, t);
        std::vector<FamilyMask> closures;
        for (std::size_t i = 0; i < nonfc_masks.size(); ++i) {
            FamilyMask cl = mask::closure(nonfc_masks[i]);
            bool covered_by_other = false;
            for (std::size_t j = 0; j < nonfc_masks.size() && !covered_by_other; ++j)
                if (j != i && mask::any_image_superset_of(nonfc_cover.nonfc[j], cl))
                    covered_by_other = true;
            if (!covered_by_other) closures.push_back(mask::canonical(cl, t));
        }
        std::sort(closures.begin(), closures.end());
        closures.erase(std::unique(closures.begin(), closures.end()), closures.end());
        closures = sorted_by_family_order(std::move(closures), t);
        for (FamilyMask m : closures) {
            FCStatus status = classify(mask::to_family(m, n));
            if (status.is_fc())
                throw std::logic_error("find_characteristic: maximal candidate classified FC");
            result.maximal_nonfc.push_back(status.nonfc_certificate());
        }
    }
    report(options, "extremal collections: " + std::to_string(result.minimal_fc.size()) +
                        " minimal FC, " + std::to_string(result.maximal_nonfc.size()) +
                        " maximal nonFC");

    if (options.verify_extremal) {
        FcOracle oracle = [](const Family& f) { return classify(f).is_fc(); };
        for (const FCCertificate& c : result.minimal_fc) {
            if (!verify_fc(c) || !is_minimal_fc(c.family, oracle))
                throw std::logic_error("find_characteristic: non-minimal FC member");
        }
        for (const NonFCCertificate& c : result.maximal_nonfc) {
            if (!verify_nonfc(c) || !is_maximal_nonfc(c.family, oracle))
                throw std::logic_error("find_characteristic: non-maximal nonFC member");
        }
        report(options, "extremal verification passed");
    }

    if (options.semi_uniform_lists) {
        CoverFast final_cover = cover_of(result, t);
        if (n == 6) {
            result.lf_lists = known_lf_6();
            result.ln_lists = known_ln_6();
        } else {
            result.lf_lists = search_lf(n, final_cover, t, options);
            if (n <= 4) result.ln_lists = search_ln(n, final_cover, t, options);
        }
        if (!verify_semi_uniform(n, result))
            throw std::logic_error("find_characteristic: semi-uniform lists failed to verify");
        report(options, "semi-uniform lists verified: " + std::to_string(result.lf_lists.size()) +
                            " lf, " + std::to_string(result.ln_lists.size()) + " ln");
    }
    return result;
}

bool verify_semi_uniform(int n, const Characterization& chars) {
    const PermTables& t = mask::perm_tables(n);
    CoverFast cover = cover_of(chars, t);
    for (const PartitionList& l : chars.lf_lists) {
        if (l.size() != static_cast<std::size_t>(n) + 1) return false;
        if (!enumerate_list(l, ProductFilter::not_covered, cover, t).empty()) return false;
    }
    for (const PartitionList& l : chars.ln_lists) {
        if (l.size() != static_cast<std::size_t>(n) + 1) return false;
        for (FamilyMask f : enumerate_list(l, ProductFilter::all, cover, t))
            if (!cover.nonfc_covers(mask::closure(f))) return false;
    }
    return true;
}

bool verify_total_coverage(int n, const Characterization& chars) {
    const PermTables& t = mask::perm_tables(n);
    CoverFast cover = cover_of(chars, t);
    if (!cover.nonfc_covers(0)) return false;  // the empty family

    bool all_covered = true;
    auto upd = [&](const std::vector<FamilyMask>& bucket, int m) {
        if (!all_covered) return std::vector<FamilyMask>{};
        auto base = mask::iso_base(
            product_step(bucket, element_sets(n, m), ProductFilter::irreducible_uncovered, cover),
            t);
        for (FamilyMask f : base)
            if (!cover.nonfc_covers(mask::closure(f))) all_covered = false;
        return base;
    };
    auto stop = [&](const PartitionList& l) { return dominated_by_any(l, chars.lf_lists); };
    enum_dp(std::vector<FamilyMask>{0}, upd, stop, lattice_max(n));
    return all_covered;
}

std::uint64_t count_region_lists(int n, const std::vector<PartitionList>& lf_lists) {
    std::uint64_t count = 0;
    PartitionList lmax = lattice_max(n);
    PartitionList cur(lmax.size(), 0);
    for (;;) {
        if (!dominated_by_any(cur, lf_lists)) ++count;
        std::size_t i = 0;
        while (i < cur.size() && cur[i] == lmax[i]) cur[i++] = 0;
        if (i == cur.size()) break;
        ++cur[i];
    }
    return count;
}

std::vector<StatsRow> stats(int n, const Characterization& chars,
                            const CharacterizeOptions& options) {
    const PermTables& t = mask::perm_tables(n);
    CoverFast cover = cover_of(chars, t);

    PartitionList lmax = lattice_max(n);
    if (n <= 4) lmax[0] = 1;  // include the empty-set rows on small universes
    auto stop = [&](const PartitionList& l) {
        return n >= 5 && dominated_by_any(l, chars.lf_lists);
    };

    std::map<PartitionList, StatsRow> rows;
    auto tally = [&](ProductFilter filter, auto&& account) {
        auto upd = [&](const std::vector<FamilyMask>& bucket, int m) {
            return mask::iso_base(product_step(bucket, element_sets(n, m), filter, cover), t);
        };
        for (const auto& [l, bucket] : enum_dp(std::vector<FamilyMask>{0}, upd, stop, lmax)) {
            StatsRow& row = rows[l];
            row.partition = l;
            for (FamilyMask f : bucket) {
                FamilyMask cl = mask::closure(f);
                if (cover.fc_covers(cl))
                    account(row, true);
                else if (cover.nonfc_covers(cl))
                    account(row, false);
                else
                    throw std::logic_error("stats: family not covered by the characterization");
            }
            report(options, "stats " + list_to_string(l));
        }
    };
    tally(ProductFilter::all, [](StatsRow& row, bool is_fc) {
        if (is_fc)
            ++row.count_fc;
        else
            ++row.count_nonfc;
    });
    tally(ProductFilter::irreducible, [](StatsRow& row, bool is_fc) {
        if (is_fc)
            ++row.count_fc_irred;
        else
            ++row.count_nonfc_irred;
    });

    // Characteristic members land in their own partition's row; members whose
    // partition falls outside the enumerated region are not tabulated.
    for (const FCCertificate& c : chars.minimal_fc) {
        auto it = rows.find(partition_signature(c.family, n));
        if (it != rows.end()) ++it->second.count_min_fc;
    }
    for (const NonFCCertificate& c : chars.maximal_nonfc) {
        auto it = rows.find(partition_signature(c.family, n));
        if (it != rows.end()) ++it->second.count_max_nonfc;
    }

    std::vector<StatsRow> out;
    out.reserve(rows.size());
    for (auto& [l, row] : rows) out.push_back(std::move(row));
    return out;
}

bool verify_characterization(const Characterization& chars) {
    for (const FCCertificate& c : chars.minimal_fc)
        if (!verify_fc(c)) return false;
    for (const NonFCCertificate& c : chars.maximal_nonfc)
        if (!verify_nonfc(c)) return false;
    return true;
}

}  // namespace fc
