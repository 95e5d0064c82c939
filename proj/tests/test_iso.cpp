#include "doctest.h"

#include <map>

#include "fc/iso.hpp"
#include "test_util.hpp"

using namespace fc;
using fctest::fam;
using fctest::sw;

TEST_CASE("permutation basics") {
    CHECK_THROWS_AS(Perm({0, 0}), std::invalid_argument);
    CHECK(all_permutations(3).size() == 6);
    CHECK(all_permutations(6).size() == 720);
    CHECK_THROWS_AS(all_permutations(9), std::invalid_argument);
}

TEST_CASE("apply_perm") {
    Family f = fam({{0}, {0, 1, 2}, {0, 2}}, 3);
    Perm identity({0, 1, 2});
    CHECK(apply_perm(identity, f) == f);
    // 0 ↦ 2, 1 ↦ 0, 2 ↦ 1 sends the family to {{2}, {0,1,2}, {1,2}}.
    Perm rot({2, 0, 1});
    CHECK(apply_perm(rot, f) == fam({{2}, {0, 1, 2}, {1, 2}}, 3));
    CHECK(apply_perm(rot, Family(3)) == Family(3));
    CHECK(apply_perm(rot, f).size() == f.size());
}

TEST_CASE("canonical representatives") {
    CHECK(canonical(fam({{2}}, 3)) == fam({{0}}, 3));
    CHECK(canonical(Family(3)) == Family(3));
    CHECK(canonical(fam({{0, 1, 2}, {1, 2}, {2}}, 3)) ==
          canonical(fam({{0}, {0, 1, 2}, {0, 2}}, 3)));
    CHECK(is_isomorphic(fam({{0, 1, 2}, {1, 2}, {2}}, 3), fam({{0}, {0, 1, 2}, {0, 2}}, 3)));
    CHECK(!is_isomorphic(fam({{0}}, 3), fam({{0, 1}}, 3)));
}

TEST_CASE("canonical is idempotent and isomorphism-invariant (randomized)") {
    fctest::Rng rng(60601);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + static_cast<int>(rng.next(6));
        Family f = rng.random_family(n, 6);
        Family canon = canonical(f);
        CHECK(canonical(canon) == canon);
        CHECK(!family_less(f, canon));  // canonical is minimal in the orbit
        auto perms = all_permutations(n);
        const Perm& p = perms[rng.next(perms.size())];
        CHECK(canonical(apply_perm(p, f)) == canon);
    }
}

TEST_CASE("iso_base examples") {
    auto perms3 = all_permutations(3);
    Collection singletons({fam({{0}}, 3), fam({{1}}, 3), fam({{2}}, 3)});
    Collection base = iso_base(singletons, perms3);
    REQUIRE(base.size() == 1);
    CHECK(base.families()[0] == fam({{0}}, 3));

    Collection mixed({fam({{0}}, 3), fam({{0, 1}}, 3)});
    CHECK(iso_base(mixed, perms3) == mixed);

    Collection pairs({fam({{0, 1}}, 3), fam({{0, 2}}, 3), fam({{1, 2}}, 3)});
    Collection pair_base = iso_base(pairs, perms3);
    REQUIRE(pair_base.size() == 1);
    CHECK(pair_base.families()[0] == fam({{0, 1}}, 3));
}

TEST_CASE("iso_base has one survivor per isomorphism class (all families over [3])") {
    std::vector<Family> all;
    for (std::uint32_t mask = 0; mask < (1u << 8); ++mask)
        all.push_back(fctest::family_from_mask(mask, 3));
    Collection c(all);
    Collection base = iso_base(c, all_permutations(3));

    // Partition the 256 families by canonical form.
    std::map<std::string, std::vector<Family>> classes;
    for (const Family& f : all) classes[print_family(canonical(f))].push_back(f);
    CHECK(base.size() == classes.size());

    // Every family must be isomorphic to exactly one survivor, and that
    // survivor is the least member of its class.
    for (auto& [canon_text, members] : classes) {
        int hits = 0;
        Family least = members.front();
        for (const Family& m : members)
            if (family_less(m, least)) least = m;
        for (const Family& s : base)
            if (is_isomorphic(s, members.front())) {
                ++hits;
                CHECK(s == least);
            }
        CHECK(hits == 1);
    }
}

TEST_CASE("iso_base with partial permutation sets still represents the input") {
    fctest::Rng rng(2025);
    auto perms = all_permutations(3);
    std::vector<Perm> partial{perms[1], perms[3]};
    std::vector<Family> all;
    for (int i = 0; i < 40; ++i) all.push_back(rng.random_family(3, 4));
    Collection c(all);
    Collection base = iso_base(c, partial);
    CHECK(base.size() <= c.size());
    for (const Family& f : c) {
        bool represented = false;
        for (const Family& s : base)
            if (is_isomorphic(f, s)) represented = true;
        CHECK(represented);
    }
}
