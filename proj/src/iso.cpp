#include "fc/iso.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace fc {

Perm::Perm(std::vector<int> mapping) : mapping_(std::move(mapping)) {
    std::vector<bool> seen(mapping_.size(), false);
    for (int v : mapping_) {
        if (v < 0 || v >= static_cast<int>(mapping_.size()) || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("Perm: mapping is not a permutation");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

std::span<const Perm> all_permutations(int n) {
    if (n < 0 || n > 8)
        throw std::invalid_argument("all_permutations: universe too large for naive scheme");
    static std::map<int, std::vector<Perm>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        std::vector<int> mapping(static_cast<std::size_t>(n));
        std::iota(mapping.begin(), mapping.end(), 0);
        std::vector<Perm> perms;
        do {
            perms.emplace_back(mapping);
        } while (std::next_permutation(mapping.begin(), mapping.end()));
        it = cache.emplace(n, std::move(perms)).first;
    }
    return it->second;
}

SetWord apply_perm(const Perm& p, const SetWord& a) {
    if (p.universe_size() != a.universe_size())
        throw std::invalid_argument("apply_perm: universe size mismatch");
    std::uint64_t bits = 0;
    for (int e : a.elements()) bits |= std::uint64_t{1} << p[e];
    return SetWord(bits, a.universe_size());
}

Family apply_perm(const Perm& p, const Family& f) {
    if (p.universe_size() != f.universe_size())
        throw std::invalid_argument("apply_perm: universe size mismatch");
    std::vector<SetWord> members;
    members.reserve(f.size());
    for (const SetWord& a : f) members.push_back(apply_perm(p, a));
    return Family(std::move(members), f.universe_size());
}

Family canonical(const Family& f) {
    Family best = f;
    for (const Perm& p : all_permutations(f.universe_size())) {
        Family image = apply_perm(p, f);
        if (family_less(image, best)) best = std::move(image);
    }
    return best;
}

bool is_isomorphic(const Family& a, const Family& b) {
    if (a.universe_size() != b.universe_size()) return false;
    return canonical(a) == canonical(b);
}

namespace {

struct FamilyHash {
    std::size_t operator()(const Family& f) const {
        std::uint64_t h = 1469598103934665603ull;
        for (const SetWord& a : f) {
            h ^= a.bits();
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace

Collection iso_base(const Collection& c, std::span<const Perm> perms) {
    std::unordered_set<Family, FamilyHash> removed;
    std::vector<Family> survivors;
    for (const Family& f : c) {
        if (removed.contains(f)) continue;
        survivors.push_back(f);
        for (const Perm& p : perms) removed.insert(apply_perm(p, f));
    }
    return Collection(std::move(survivors));
}

}  // namespace fc
