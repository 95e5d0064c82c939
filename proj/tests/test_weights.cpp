#include "doctest.h"

#include "fc/weights.hpp"
#include "test_util.hpp"

using namespace fc;
using fctest::fam;
using fctest::sw;

namespace {
WeightFn wf(std::initializer_list<std::uint64_t> w) { return WeightFn(std::vector<std::uint64_t>(w)); }
}  // namespace

TEST_CASE("weights and shares: worked example") {
    // w = (1, 2, 0): weight of the full triple is 3, family weight of
    // {{0,1},{1,2},{1}} is 7, share of {1,2} is 4 - 3 = 1, family share 5.
    WeightFn w = wf({1, 2, 0});
    Family f = fam({{0, 1}, {1, 2}, {1}}, 3);
    SetWord x = sw({0, 1, 2}, 3);
    CHECK(set_weight(w, x) == 3);
    CHECK(family_weight(w, f) == 7);
    CHECK(set_share(w, sw({1, 2}, 3), x) == 1);
    CHECK(family_share(w, f, x) == 5);
    CHECK(set_weight(w, sw({}, 3)) == 0);
    CHECK(set_share(w, x, x) == static_cast<std::int64_t>(set_weight(w, x)));
    CHECK_THROWS_AS(set_share(w, sw({0, 1, 2}, 3), sw({0}, 3)), std::invalid_argument);
}

TEST_CASE("is_weight_fn_on") {
    CHECK(is_weight_fn_on(wf({1, 2, 0}), sw({0, 1}, 3)));
    CHECK(is_weight_fn_on(wf({0, 0, 1}), sw({2}, 3)));
    CHECK(!is_weight_fn_on(wf({0, 0, 1}), sw({0, 1}, 3)));
    CHECK(!is_weight_fn_on(wf({1, 1, 1}), sw({}, 3)));
}

TEST_CASE("share table") {
    SetWord x = sw({0, 1, 2}, 3);
    ShareTable unit = build_share_table(wf({1, 1, 1}), x);
    CHECK(unit[0b000] == -3);
    CHECK(unit[0b001] == -1);
    CHECK(unit[0b011] == 1);
    CHECK(unit[0b111] == 3);
    CHECK(build_share_table(wf({1, 2, 0}), x)[0b110] == 1);
    ShareTable zero = build_share_table(wf({0, 0, 0}), x);
    for (std::uint64_t a = 0; a < 8; ++a) CHECK(zero[a] == 0);
}

TEST_CASE("share table matches set_share for every subset (n = 6)") {
    WeightFn w = wf({3, 1, 4, 1, 5, 9});
    SetWord x = SetWord::full_set(6);
    ShareTable table = build_share_table(w, x);
    for (std::uint64_t a = 0; a < 64; ++a)
        CHECK(table[a] == set_share(w, SetWord(a, 6), x));
}

TEST_CASE("family share identity (randomized)") {
    // fs(F, w, X) = 2·fw(F) − sw(X)·|F|.
    fctest::Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng.next(6));
        std::vector<std::uint64_t> weights;
        for (int i = 0; i < n; ++i) weights.push_back(rng.next(10));
        WeightFn w{weights};
        SetWord x = SetWord::full_set(n);
        Family f = rng.random_family(n, 8);
        CHECK(family_share(w, f, x) ==
              2 * static_cast<std::int64_t>(family_weight(w, f)) -
                  static_cast<std::int64_t>(set_weight(w, x) * f.size()));
    }
}

TEST_CASE("Frankl condition equals existence of a nonnegative-share weight (n = 3, grid)") {
    for (std::uint32_t mask = 0; mask < (1u << 8); ++mask) {
        Family f = fctest::family_from_mask(mask, 3);
        SetWord x = f.union_of_members();
        std::uint64_t bound = f.size() + 1;
        bool witness = false;
        for (std::uint64_t w0 = 0; w0 < bound && !witness; ++w0)
            for (std::uint64_t w1 = 0; w1 < bound && !witness; ++w1)
                for (std::uint64_t w2 = 0; w2 < bound && !witness; ++w2) {
                    WeightFn w{{w0, w1, w2}};
                    if (!is_weight_fn_on(w, x)) continue;
                    if (family_share(w, f, x) >= 0) witness = true;
                }
        CHECK(is_frankl(f) == witness);
    }
}

TEST_CASE("hypercube generator") {
    // hc({k0,k1}, {s0,s1}) with s0=0, s1=1, k0=2, k1=3.
    CHECK(hypercube(sw({2, 3}, 4), sw({0, 1}, 4)) ==
          fam({{2, 3}, {0, 2, 3}, {1, 2, 3}, {0, 1, 2, 3}}, 4));
    CHECK(hypercube(sw({}, 2), sw({0, 1}, 2)) == fam({{}, {0}, {1}, {0, 1}}, 2));
    CHECK_THROWS_AS(hypercube(sw({0}, 2), sw({0, 1}, 2)), std::invalid_argument);
}

namespace {
// The appendix running example: S = {s0,s1} = {0,1}, K = {k0,k1} = {2,3},
// X = K ∪ S, F = {{s0}, {s1}, {k0,s0}, {k0,k1,s0,s1}}, unit weights.
struct HyperExample {
    SetWord s = sw({0, 1}, 4);
    SetWord k = sw({2, 3}, 4);
    SetWord x = sw({0, 1, 2, 3}, 4);
    Family f = fam({{0}, {1}, {0, 2}, {0, 1, 2, 3}}, 4);
    WeightFn w = WeightFn({1, 1, 1, 1});
};
}  // namespace

TEST_CASE("hyper-share worked example") {
    HyperExample e;
    CHECK(hyper_share(sw({}, 4), e.s, e.f, e.w, e.x) == -4);
    CHECK(hyper_share(sw({2}, 4), e.s, e.f, e.w, e.x) == 0);
    CHECK(hyper_share(sw({3}, 4), e.s, e.f, e.w, e.x) == 0);
    CHECK(hyper_share(e.k, e.s, e.f, e.w, e.x) == 4);
    CHECK_THROWS_AS(hyper_share(sw({0}, 4), e.s, e.f, e.w, e.x), std::invalid_argument);
}

TEST_CASE("projection worked example") {
    HyperExample e;
    CHECK(project(sw({}, 4), e.s, e.f) == fam({{0}, {1}}, 4));
    CHECK(project(sw({2}, 4), e.s, e.f) == fam({{0}}, 4));
    CHECK(project(sw({3}, 4), e.s, e.f) == Family(4));
    CHECK(project(e.k, e.s, e.f) == fam({{0, 1}}, 4));
    CHECK(project(sw({2}, 4), e.s, Family(4)) == Family(4));
}

TEST_CASE("hypercubes with bases in pow(K) partition pow(K ∪ S)") {
    for (std::uint32_t kbits = 0; kbits < 16; ++kbits) {
        for (std::uint32_t sbits = 0; sbits < 32; sbits += 1) {
            if ((kbits & sbits) != 0) continue;
            int n = 5;
            SetWord k(kbits, n), s(sbits, n);
            if (k.size() + s.size() > 5) continue;
            // Union all hypercubes hc(K', S), K' ⊆ K, and count members.
            std::vector<SetWord> all;
            std::uint64_t sub = 0;
            do {
                for (const SetWord& a : hypercube(SetWord(sub, n), s)) all.push_back(a);
                sub = (sub - kbits) & kbits;
            } while (sub != 0);
            Family joined(all, n);
            CHECK(joined.size() == all.size());  // pairwise disjoint
            // joined must equal pow(K ∪ S).
            std::uint64_t cube = kbits | sbits;
            std::size_t expected = std::size_t{1} << SetWord(cube, n).size();
            CHECK(joined.size() == expected);
            for (const SetWord& a : joined) CHECK(a.subset_of(SetWord(cube, n)));
        }
    }
}

TEST_CASE("family share decomposes into hyper-shares (randomized)") {
    fctest::Rng rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng.next(4));
        Family f = rng.random_family(n, 8);
        SetWord x = f.union_of_members();
        std::vector<std::uint64_t> weights;
        for (int i = 0; i < n; ++i) weights.push_back(rng.next(6));
        WeightFn w{weights};
        // Split X into disjoint K and S.
        std::uint64_t kbits = rng.next(std::uint64_t{1} << n) & x.bits();
        SetWord k(kbits, n), s(x.bits() & ~kbits, n);
        std::int64_t total = 0;
        std::uint64_t sub = 0;
        do {
            total += hyper_share(SetWord(sub, n), s, f, w, x);
            sub = (sub - kbits) & kbits;
        } while (sub != 0);
        CHECK(total == family_share(w, f, x));
    }
}

TEST_CASE("hyper-share equals the projection's family share when w vanishes on K") {
    fctest::Rng rng(1234);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng.next(4));
        Family f = rng.random_family(n, 8);
        std::uint64_t kbits = rng.next(std::uint64_t{1} << n);
        SetWord k(kbits, n);
        SetWord s(~kbits & ((std::uint64_t{1} << n) - 1), n);
        std::vector<std::uint64_t> weights;
        for (int i = 0; i < n; ++i)
            weights.push_back(k.contains(i) ? 0 : rng.next(6));
        WeightFn w{weights};
        SetWord x = SetWord::full_set(n);
        CHECK(hyper_share(k, s, f, w, x) == family_share(w, project(k, s, f), x));
    }
}

TEST_CASE("weight overflow is a checked error") {
    WeightFn w{{std::uint64_t{1} << 62, std::uint64_t{1} << 62}};
    CHECK_THROWS_AS(set_weight(w, sw({0, 1}, 2)), std::overflow_error);
}
