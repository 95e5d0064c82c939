#include "doctest.h"

#include <functional>
#include <sstream>

#include "fc/linear.hpp"
#include "test_util.hpp"

using namespace fc;

namespace {

LinearConstraint row(std::vector<Rational> coeffs, Relation rel, Rational rhs) {
    return LinearConstraint{std::move(coeffs), rel, std::move(rhs)};
}

bool satisfies(const LinearSystem& sys, const std::vector<Rational>& point) {
    for (const LinearConstraint& r : sys.rows) {
        Rational lhs = 0;
        for (std::size_t j = 0; j < point.size(); ++j) lhs += r.coeffs[j] * point[j];
        switch (r.relation) {
            case Relation::greater_equal:
                if (lhs < r.rhs) return false;
                break;
            case Relation::less_equal:
                if (lhs > r.rhs) return false;
                break;
            case Relation::equal:
                if (lhs != r.rhs) return false;
                break;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("solve: basic feasibility and optimality") {
    LinearSystem sys;
    sys.num_vars = 1;
    sys.rows = {row({1}, Relation::greater_equal, 0), row({1}, Relation::greater_equal, 1)};
    sys.objective = std::vector<Rational>{1};
    auto point = solve(sys);
    REQUIRE(point.has_value());
    CHECK((*point)[0] == 1);

    LinearSystem bad;
    bad.num_vars = 1;
    bad.rows = {row({1}, Relation::greater_equal, 0), row({-1}, Relation::greater_equal, 1)};
    CHECK(!solve(bad).has_value());

    LinearSystem simplex2;
    simplex2.num_vars = 2;
    simplex2.rows = {row({1, 1}, Relation::equal, 1), row({1, 0}, Relation::greater_equal, 0),
                     row({0, 1}, Relation::greater_equal, 0)};
    simplex2.objective = std::vector<Rational>{1, 0};
    auto vertex = solve(simplex2);
    REQUIRE(vertex.has_value());
    CHECK((*vertex)[0] == 0);
    CHECK((*vertex)[1] == 1);
}

TEST_CASE("solve: free variables and exact rationals") {
    LinearSystem sys;
    sys.num_vars = 2;
    sys.rows = {row({2, 3}, Relation::equal, Rational(1))};
    auto point = solve(sys);
    REQUIRE(point.has_value());
    CHECK(2 * (*point)[0] + 3 * (*point)[1] == 1);
}

TEST_CASE("returned points satisfy every row exactly (randomized)") {
    fctest::Rng rng(5551212);
    int feasible_seen = 0;
    for (int trial = 0; trial < 300; ++trial) {
        LinearSystem sys;
        sys.num_vars = 1 + static_cast<int>(rng.next(3));
        std::size_t m = 1 + rng.next(4);
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<Rational> coeffs;
            for (int j = 0; j < sys.num_vars; ++j)
                coeffs.emplace_back(static_cast<int>(rng.next(7)) - 3);
            Relation rel = static_cast<Relation>(rng.next(3));
            sys.rows.push_back(row(std::move(coeffs), rel, static_cast<int>(rng.next(9)) - 4));
        }
        if (rng.next(2)) {
            std::vector<Rational> obj;
            for (int j = 0; j < sys.num_vars; ++j)
                obj.emplace_back(static_cast<int>(rng.next(5)) - 2);
            sys.objective = std::move(obj);
        }
        auto point = solve(sys);
        if (point) {
            ++feasible_seen;
            CHECK(satisfies(sys, *point));
        }
    }
    CHECK(feasible_seen > 50);
}

TEST_CASE("feasibility agrees with a boxed vertex-enumeration oracle (≤ 3 vars)") {
    // Add a ±B box so the feasible region, when nonempty, has a vertex; then
    // every vertex is the intersection of num_vars tight constraints, and
    // exact Gaussian elimination over every subset finds one.
    fctest::Rng rng(86420);
    const int box = 5;
    for (int trial = 0; trial < 120; ++trial) {
        int k = 1 + static_cast<int>(rng.next(3));
        LinearSystem sys;
        sys.num_vars = k;
        std::size_t m = 1 + rng.next(3);
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<Rational> coeffs;
            for (int j = 0; j < k; ++j) coeffs.emplace_back(static_cast<int>(rng.next(5)) - 2);
            Relation rel = rng.next(2) ? Relation::greater_equal : Relation::less_equal;
            sys.rows.push_back(row(std::move(coeffs), rel, static_cast<int>(rng.next(7)) - 3));
        }
        for (int j = 0; j < k; ++j) {
            std::vector<Rational> lo(static_cast<std::size_t>(k), 0), hi(static_cast<std::size_t>(k), 0);
            lo[static_cast<std::size_t>(j)] = 1;
            hi[static_cast<std::size_t>(j)] = 1;
            sys.rows.push_back(row(std::move(lo), Relation::greater_equal, -box));
            sys.rows.push_back(row(std::move(hi), Relation::less_equal, box));
        }

        // Oracle: every full-rank k-subset of rows taken as equalities gives
        // a candidate vertex; the boxed region is feasible iff some candidate
        // satisfies all rows.
        bool oracle_feasible = false;
        std::size_t kk = static_cast<std::size_t>(k);
        std::size_t rows = sys.rows.size();
        std::vector<std::size_t> idx(kk);
        std::function<void(std::size_t, std::size_t)> pick = [&](std::size_t start,
                                                                 std::size_t depth) {
            if (oracle_feasible) return;
            if (depth == kk) {
                std::vector<std::vector<Rational>> a(kk);
                for (std::size_t r = 0; r < kk; ++r) {
                    a[r] = sys.rows[idx[r]].coeffs;
                    a[r].push_back(sys.rows[idx[r]].rhs);
                }
                // Gauss-Jordan; only full-rank subsets produce vertices.
                std::vector<std::size_t> pivot_col(kk);
                std::size_t rank = 0;
                for (std::size_t col = 0; col < kk && rank < kk; ++col) {
                    std::size_t piv = rank;
                    while (piv < kk && a[piv][col] == 0) ++piv;
                    if (piv == kk) continue;
                    std::swap(a[piv], a[rank]);
                    for (std::size_t r = 0; r < kk; ++r) {
                        if (r == rank || a[r][col] == 0) continue;
                        Rational f = a[r][col] / a[rank][col];
                        for (std::size_t c = col; c <= kk; ++c) a[r][c] -= f * a[rank][c];
                    }
                    pivot_col[rank++] = col;
                }
                if (rank < kk) return;
                std::vector<Rational> point(kk, 0);
                for (std::size_t r = 0; r < kk; ++r)
                    point[pivot_col[r]] = a[r][kk] / a[r][pivot_col[r]];
                if (satisfies(sys, point)) oracle_feasible = true;
                return;
            }
            for (std::size_t i = start; i < rows; ++i) {
                idx[depth] = i;
                pick(i + 1, depth + 1);
            }
        };
        pick(0, 0);
        CHECK(solve(sys).has_value() == oracle_feasible);
    }
}

TEST_CASE("scale_to_naturals") {
    CHECK(scale_to_naturals({Rational(1, 2), Rational(1, 3)}) ==
          std::vector<std::uint64_t>{3, 2});
    CHECK(scale_to_naturals({Rational(0), Rational(0), Rational(1)}) ==
          std::vector<std::uint64_t>{0, 0, 1});
    CHECK(scale_to_naturals({Rational(2), Rational(4)}) == std::vector<std::uint64_t>{1, 2});
    CHECK(scale_to_naturals({Rational(0), Rational(0)}) == std::vector<std::uint64_t>{0, 0});
    CHECK_THROWS_AS(scale_to_naturals({Rational(-1)}), std::invalid_argument);
}

TEST_CASE("scale_to_naturals preserves direction") {
    fctest::Rng rng(777);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Rational> v;
        std::size_t k = 1 + rng.next(5);
        for (std::size_t i = 0; i < k; ++i)
            v.emplace_back(static_cast<int>(rng.next(20)), 1 + static_cast<int>(rng.next(9)));
        auto scaled = scale_to_naturals(v);
        // One positive ratio q with scaled = q·v: cross-multiply pairwise.
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                CHECK(Rational(scaled[i]) * v[j] == Rational(scaled[j]) * v[i]);
    }
}

TEST_CASE("dual coefficients") {
    auto one = find_dual_coefficients({{-1}});
    REQUIRE(one.has_value());
    CHECK(*one == std::vector<std::uint64_t>{1});
    CHECK(!find_dual_coefficients({{1}}).has_value());
    CHECK(!find_dual_coefficients({{-1, 1}, {1, -1}}).has_value());
    CHECK_THROWS_AS(find_dual_coefficients({}), std::invalid_argument);
}

TEST_CASE("dual witness refutes the primal system") {
    // If coefficients exist for D, the system {w ≥ 0, Dw ≥ 0, Σw ≥ 1} must be
    // infeasible.
    fctest::Rng rng(13579);
    int found = 0;
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t m = 1 + rng.next(3), k = 1 + rng.next(3);
        std::vector<std::vector<std::int64_t>> d(m, std::vector<std::int64_t>(k));
        for (auto& r : d)
            for (auto& v : r) v = static_cast<std::int64_t>(rng.next(7)) - 3;
        auto coeffs = find_dual_coefficients(d);
        if (!coeffs) continue;
        ++found;
        LinearSystem primal;
        primal.num_vars = static_cast<int>(k);
        for (std::size_t j = 0; j < k; ++j) {
            std::vector<Rational> c(k, 0);
            c[j] = 1;
            primal.rows.push_back(row(std::move(c), Relation::greater_equal, 0));
        }
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<Rational> c;
            for (std::size_t j = 0; j < k; ++j) c.emplace_back(d[i][j]);
            primal.rows.push_back(row(std::move(c), Relation::greater_equal, 0));
        }
        primal.rows.push_back(row(std::vector<Rational>(k, 1), Relation::greater_equal, 1));
        CHECK(!solve(primal).has_value());
    }
    CHECK(found > 20);
}

TEST_CASE("LP export") {
    using fctest::fam;
    std::ostringstream out;
    export_lp(fam({{0}}, 1), WeightFn({1}), out);
    std::string text = out.str();
    CHECK(text.find("Minimize") != std::string::npos);
    CHECK(text.find("Subject To") != std::string::npos);
    CHECK(text.find("Binary") != std::string::npos);
    CHECK(text.find("End") != std::string::npos);
    CHECK(text.find(" c_1_0: x_0 - x_1 <= 0") != std::string::npos);
    CHECK(text.find(" share: - x_0 + x_1 <= -1") != std::string::npos);

    std::ostringstream out3;
    export_lp(fam({{0, 1, 2}}, 3), WeightFn({1, 1, 1}), out3);
    std::string text3 = out3.str();
    for (int a = 0; a < 8; ++a)
        CHECK(text3.find("x_" + std::to_string(a)) != std::string::npos);

    CHECK_THROWS_AS(export_lp(Family(1), WeightFn({1}), out), std::invalid_argument);
    CHECK_THROWS_AS(export_lp(fam({{0}}, 2), WeightFn({1, 1}), out), std::invalid_argument);
}
