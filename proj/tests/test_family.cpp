#include "doctest.h"

#include "fc/family.hpp"
#include "test_util.hpp"

using namespace fc;
using fctest::fam;
using fctest::sw;

TEST_CASE("set word basics") {
    SetWord a = sw({0, 2}, 3);
    CHECK(a.size() == 2);
    CHECK(a.contains(0));
    CHECK(!a.contains(1));
    CHECK(a.union_with(sw({1}, 3)) == sw({0, 1, 2}, 3));
    CHECK(a.subset_of(sw({0, 1, 2}, 3)));
    CHECK(!sw({0, 1, 2}, 3).subset_of(a));
    CHECK_THROWS_AS(SetWord(0b1000, 3), std::invalid_argument);
    CHECK_THROWS_AS(a.union_with(sw({0}, 4)), std::invalid_argument);
}

TEST_CASE("canonical set order: cardinality then value") {
    CHECK(set_less(sw({2}, 3), sw({0, 1}, 3)));
    CHECK(set_less(sw({0}, 3), sw({1}, 3)));
    CHECK(!set_less(sw({0, 1}, 3), sw({2}, 3)));
    Family f = fam({{0, 1}, {2}, {0}}, 3);
    CHECK(f.members()[0] == sw({0}, 3));
    CHECK(f.members()[1] == sw({2}, 3));
    CHECK(f.members()[2] == sw({0, 1}, 3));
}

TEST_CASE("sum_fam") {
    CHECK(sum_fam(Family(1), fam({{0}}, 1)) == Family(1));
    CHECK(sum_fam(fam({{0}}, 2), fam({{1}}, 2)) == fam({{0, 1}}, 2));
    CHECK(sum_fam(fam({{0}, {1}}, 2), fam({{0}, {1}}, 2)) == fam({{0}, {1}, {0, 1}}, 2));
    CHECK_THROWS_AS(sum_fam(Family(1), Family(2)), std::invalid_argument);
}

TEST_CASE("closure examples") {
    CHECK(closure(Family(2)) == Family(2));
    CHECK(closure(fam({{0}, {1}}, 2)) == fam({{0}, {1}, {0, 1}}, 2));
    CHECK(closure(fam({{0, 1}, {1, 2}}, 3)) == fam({{0, 1}, {1, 2}, {0, 1, 2}}, 3));
}

TEST_CASE("closure agrees with the subfamily-union definition on every family over [3]") {
    for (std::uint32_t mask = 0; mask < (1u << 8); ++mask) {
        Family f = fctest::family_from_mask(mask, 3);
        CHECK(closure(f) == fctest::brute_closure(f));
    }
}

TEST_CASE("insert_close_for") {
    CHECK(insert_close_for(Family(1), sw({0}, 1), Family(1)) == fam({{0}}, 1));
    CHECK(insert_close_for(fam({{0, 1, 2}}, 3), sw({0}, 3), Family(3)) ==
          fam({{0}, {0, 1, 2}}, 3));
    CHECK(insert_close_for(fam({{2}}, 3), sw({0}, 3), fam({{1}}, 3)) ==
          fam({{0}, {1}, {0, 1}, {0, 2}}, 3));
}

TEST_CASE("is_union_closed_for") {
    CHECK(!is_union_closed(fam({{0}, {1}}, 2)));
    CHECK(is_union_closed(fam({{0}, {1}, {0, 1}}, 2)));
    CHECK(!is_union_closed_for(fam({{0, 1, 2}}, 3), fam({{0}}, 3)));
    CHECK(is_union_closed_for(fam({{0, 1, 2}}, 3), fam({{0}, {0, 1, 2}}, 3)));
    CHECK(is_union_closed(Family(3)));
}

TEST_CASE("is_frankl") {
    CHECK(!is_frankl(Family(2)));
    CHECK(!is_frankl(fam({{}}, 2)));  // support is empty
    CHECK(is_frankl(fam({{0}, {0, 1}}, 2)));
    CHECK(is_frankl(fam({{0}, {1}, {2}, {0, 1, 2}}, 3)));  // cnt(0) = 2 of 4
    CHECK(cnt(0, fam({{0}, {1}, {2}, {0, 1, 2}}, 3)) == 2);
    CHECK(!is_frankl(fam({{0}, {1}, {2}}, 3)));  // every element in 1 of 3
}

TEST_CASE("closure is idempotent and monotone (randomized)") {
    fctest::Rng rng(20260810);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng.next(5));
        Family f = rng.random_family(n, 6);
        Family cl = closure(f);
        CHECK(closure(cl) == cl);
        for (const SetWord& a : f) CHECK(cl.contains(a));
        CHECK(is_union_closed(cl));
    }
}

TEST_CASE("closure is contained in any union-closed superfamily (over [3])") {
    for (std::uint32_t mask = 0; mask < (1u << 8); ++mask) {
        Family fp = fctest::family_from_mask(mask, 3);
        if (!is_union_closed(fp)) continue;
        fctest::Rng rng(mask);
        for (int trial = 0; trial < 8; ++trial) {
            std::vector<SetWord> sub;
            for (const SetWord& a : fp)
                if (rng.next(2)) sub.push_back(a);
            Family f(std::move(sub), 3);
            for (const SetWord& a : closure(f)) CHECK(fp.contains(a));
        }
    }
}

TEST_CASE("insert-and-close tracks closure of the grown family (families over [4])") {
    // closure(F ∪ {A}) = ic(A, closure(F)), random F and A.
    fctest::Rng rng(424242);
    for (int trial = 0; trial < 300; ++trial) {
        Family f = rng.random_family(4, 6);
        SetWord a = rng.random_set(4);
        CHECK(closure(f.with(a)) == insert_close(a, closure(f)));
    }
}

TEST_CASE("union-closed for a family implies union-closed for its closure (exhaustive [3])") {
    for (std::uint32_t fc_mask = 0; fc_mask < (1u << 8); ++fc_mask) {
        Family base = fctest::family_from_mask(fc_mask, 3);
        SetWord support = base.union_of_members();
        Family base_closure = closure(base);
        std::uint32_t support_sets = 0;
        for (std::uint32_t a = 0; a < 8; ++a)
            if ((a & ~support.bits()) == 0) support_sets |= 1u << a;
        for (std::uint32_t sub = support_sets;; sub = (sub - 1) & support_sets) {
            Family f = fctest::family_from_mask(sub, 3);
            if (is_union_closed_for(base, f)) CHECK(is_union_closed_for(base_closure, f));
            if (sub == 0) break;
        }
    }
}
