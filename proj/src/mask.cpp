#include "fc/detail/mask.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

#include "fc/iso.hpp"

namespace fc::mask {

FamilyMask from_family(const Family& f) {
    if (f.universe_size() > 6)
        throw std::invalid_argument("mask::from_family: universe too large");
    FamilyMask mask = 0;
    for (const SetWord& a : f) mask |= member_bit(static_cast<unsigned>(a.bits()));
    return mask;
}

Family to_family(FamilyMask f, int n) {
    if (n > 6) throw std::invalid_argument("mask::to_family: universe too large");
    std::vector<SetWord> members;
    for (FamilyMask b = f; b != 0; b &= b - 1)
        members.emplace_back(static_cast<std::uint64_t>(std::countr_zero(b)), n);
    return Family(std::move(members), n);
}

FamilyMask insert_close(FamilyMask f, unsigned a_bits) {
    FamilyMask out = f | member_bit(a_bits);
    for (FamilyMask b = f; b != 0; b &= b - 1)
        out |= member_bit(a_bits | static_cast<unsigned>(std::countr_zero(b)));
    return out;
}

FamilyMask closure(FamilyMask f) {
    FamilyMask acc = 0;
    for (FamilyMask b = f; b != 0; b &= b - 1)
        acc = insert_close(acc, static_cast<unsigned>(std::countr_zero(b)));
    return acc;
}

unsigned support(FamilyMask f) {
    unsigned bits = 0;
    for (FamilyMask b = f; b != 0; b &= b - 1)
        bits |= static_cast<unsigned>(std::countr_zero(b));
    return bits;
}

bool is_union_closed(FamilyMask f) { return closure(f) == f; }

bool is_dependent(FamilyMask f, unsigned a_bits) {
    unsigned joined = 0;
    bool any = false;
    for (FamilyMask b = f & ~member_bit(a_bits); b != 0; b &= b - 1) {
        unsigned m = static_cast<unsigned>(std::countr_zero(b));
        if ((m & ~a_bits) == 0) {
            joined |= m;
            any = true;
        }
    }
    // A itself counts as a one-member witness when present.
    if (has_member(f, a_bits)) return true;
    return any && joined == a_bits;
}

const PermTables& perm_tables(int n) {
    if (n < 0 || n > 6) throw std::invalid_argument("perm_tables: need 0 <= n <= 6");
    static std::array<PermTables, 7> cache;
    static std::array<bool, 7> ready{};
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    PermTables& t = cache[static_cast<std::size_t>(n)];
    if (!ready[static_cast<std::size_t>(n)]) {
        auto perms = all_permutations(n);
        t.n = n;
        t.perm_count = perms.size();
        std::size_t subsets = std::size_t{1} << n;

        std::vector<unsigned> by_order(subsets);
        for (unsigned a = 0; a < subsets; ++a) by_order[a] = a;
        std::sort(by_order.begin(), by_order.end(), [](unsigned a, unsigned b) {
            int pa = std::popcount(a), pb = std::popcount(b);
            return pa != pb ? pa < pb : a < b;
        });
        for (unsigned r = 0; r < subsets; ++r) {
            t.rank[by_order[r]] = static_cast<std::uint8_t>(r);
            t.unrank[r] = static_cast<std::uint8_t>(by_order[r]);
        }

        t.set_image.resize(perms.size());
        t.rank_image.resize(perms.size());
        for (std::size_t p = 0; p < perms.size(); ++p) {
            for (unsigned a = 0; a < subsets; ++a) {
                unsigned image = 0;
                for (unsigned bits = a; bits != 0; bits &= bits - 1)
                    image |= 1u << perms[p][std::countr_zero(bits)];
                t.set_image[p][a] = static_cast<std::uint8_t>(image);
                t.rank_image[p][a] = t.rank[image];
            }
        }
        ready[static_cast<std::size_t>(n)] = true;
    }
    return t;
}

std::uint64_t rank_mask(FamilyMask f, const PermTables& t) {
    std::uint64_t out = 0;
    for (FamilyMask b = f; b != 0; b &= b - 1)
        out |= std::uint64_t{1} << t.rank[std::countr_zero(b)];
    return out;
}

bool mask_less(FamilyMask a, FamilyMask b, const PermTables& t) {
    return rank_mask_less(rank_mask(a, t), rank_mask(b, t));
}

FamilyMask apply_perm(FamilyMask f, const PermTables& t, std::size_t p) {
    FamilyMask out = 0;
    const auto& image = t.set_image[p];
    for (FamilyMask b = f; b != 0; b &= b - 1)
        out |= member_bit(image[std::countr_zero(b)]);
    return out;
}

FamilyMask canonical(FamilyMask f, const PermTables& t) {
    bool have_best = false;
    std::uint64_t best = 0;
    for (std::size_t p = 0; p < t.perm_count; ++p) {
        std::uint64_t ranks = 0;
        const auto& image = t.rank_image[p];
        for (FamilyMask b = f; b != 0; b &= b - 1)
            ranks |= std::uint64_t{1} << image[std::countr_zero(b)];
        if (!have_best || rank_mask_less(ranks, best)) {
            best = ranks;
            have_best = true;
        }
    }
    FamilyMask out = 0;
    for (std::uint64_t b = best; b != 0; b &= b - 1)
        out |= member_bit(t.unrank[std::countr_zero(b)]);
    return out;
}

std::vector<FamilyMask> iso_base(std::vector<FamilyMask> masks, const PermTables& t) {
    std::vector<std::pair<std::uint64_t, FamilyMask>> order;
    order.reserve(masks.size());
    for (FamilyMask f : masks) order.emplace_back(rank_mask(f, t), f);
    std::sort(order.begin(), order.end(),
              [](const auto& a, const auto& b) { return rank_mask_less(a.first, b.first); });

    std::unordered_set<FamilyMask> removed;
    std::vector<FamilyMask> survivors;
    for (const auto& [ranks, f] : order) {
        if (removed.contains(f)) continue;
        survivors.push_back(f);
        for (std::size_t p = 0; p < t.perm_count; ++p) removed.insert(apply_perm(f, t, p));
    }
    return survivors;
}

std::vector<FamilyMask> perm_images(FamilyMask f, const PermTables& t) {
    std::vector<FamilyMask> images;
    images.reserve(t.perm_count);
    for (std::size_t p = 0; p < t.perm_count; ++p) images.push_back(apply_perm(f, t, p));
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    return images;
}

}  // namespace fc::mask
