#pragma once

// Shared helpers for the test suites: literal builders, brute-force oracles,
// and a seeded random family source.

#include <cstdint>
#include <random>
#include <vector>

#include "fc/family.hpp"
#include "fc/format.hpp"

namespace fctest {

inline fc::SetWord sw(std::initializer_list<int> elements, int n) {
    return fc::SetWord::from_elements(elements, n);
}

inline fc::Family fam(std::initializer_list<std::initializer_list<int>> sets, int n) {
    std::vector<fc::SetWord> members;
    for (const auto& s : sets) members.push_back(fc::SetWord::from_elements(s, n));
    return fc::Family(std::move(members), n);
}

// Families over [n] indexed by a bitmask over the 2^n subsets (n ≤ 4).
inline fc::Family family_from_mask(std::uint32_t mask, int n) {
    std::vector<fc::SetWord> members;
    for (int a = 0; a < (1 << n); ++a)
        if ((mask >> a) & 1) members.emplace_back(static_cast<std::uint64_t>(a), n);
    return fc::Family(std::move(members), n);
}

// Prop. 1(1) as a brute-force oracle: unions of all nonempty subfamilies.
inline fc::Family brute_closure(const fc::Family& f) {
    const auto& ms = f.members();
    std::vector<fc::SetWord> out;
    for (std::uint32_t sub = 1; sub < (1u << ms.size()); ++sub) {
        std::uint64_t bits = 0;
        for (std::size_t i = 0; i < ms.size(); ++i)
            if ((sub >> i) & 1) bits |= ms[i].bits();
        out.emplace_back(bits, f.universe_size());
    }
    return fc::Family(std::move(out), f.universe_size());
}

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    std::uint64_t next(std::uint64_t bound) {  // uniform in [0, bound)
        return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(eng);
    }

    fc::SetWord random_set(int n) {
        return fc::SetWord(next(std::uint64_t{1} << n), n);
    }

    fc::Family random_family(int n, std::size_t max_members) {
        std::vector<fc::SetWord> members;
        std::size_t count = next(max_members + 1);
        for (std::size_t i = 0; i < count; ++i) members.push_back(random_set(n));
        return fc::Family(std::move(members), n);
    }
};

}  // namespace fctest

// doctest stringification for diagnostics.
namespace fc {
inline std::ostream& operator<<(std::ostream& os, const Family& f) {
    return os << print_family(f);
}
inline std::ostream& operator<<(std::ostream& os, const SetWord& a) {
    return os << print_set(a);
}
}  // namespace fc
