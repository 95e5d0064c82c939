#include "fc/linear.hpp"

#include <fstream>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace fc {

namespace {

// Tableau simplex, minimization, Bland's rule.  Rows are kept in canonical
// form (basis columns are unit columns, rhs nonnegative); `cost` is the
// reduced-cost row and `cost_rhs` the negated objective value.
struct Tableau {
    std::size_t cols = 0;
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    std::vector<std::size_t> basis;      // basic variable per row
    std::vector<Rational> cost;
    Rational cost_rhs;
    std::vector<bool> allowed;           // columns eligible to enter

    void pivot(std::size_t r, std::size_t c) {
        Rational p = rows[r][c];
        for (auto& v : rows[r]) v /= p;
        rhs[r] /= p;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rational f = rows[i][c];
            for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
            rhs[i] -= f * rhs[r];
        }
        if (cost[c] != 0) {
            Rational f = cost[c];
            for (std::size_t j = 0; j < cols; ++j) cost[j] -= f * rows[r][j];
            cost_rhs -= f * rhs[r];
        }
        basis[r] = c;
    }

    // Returns false if unbounded in the improving direction.
    bool minimize() {
        for (;;) {
            std::size_t entering = cols;
            for (std::size_t j = 0; j < cols; ++j) {
                if (allowed[j] && cost[j] < 0) {
                    entering = j;
                    break;  // Bland: lowest index
                }
            }
            if (entering == cols) return true;
            std::size_t leaving = rows.size();
            Rational best_ratio;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (rows[i][entering] <= 0) continue;
                Rational ratio = rhs[i] / rows[i][entering];
                if (leaving == rows.size() || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[leaving])) {
                    leaving = i;
                    best_ratio = ratio;
                }
            }
            if (leaving == rows.size()) return false;
            pivot(leaving, entering);
        }
    }
};

}  // namespace

std::optional<std::vector<Rational>> solve(const LinearSystem& sys) {
    if (sys.num_vars < 1) throw std::invalid_argument("solve: need at least one variable");
    for (const LinearConstraint& row : sys.rows)
        if (static_cast<int>(row.coeffs.size()) != sys.num_vars)
            throw std::invalid_argument("solve: coefficient length mismatch");
    if (sys.objective && static_cast<int>(sys.objective->size()) != sys.num_vars)
        throw std::invalid_argument("solve: objective length mismatch");

    // Standard form: free variable x_j splits into u_j - v_j, one slack per
    // inequality, one artificial per row as the initial basis.
    std::size_t m = sys.rows.size();
    std::size_t split = 2 * static_cast<std::size_t>(sys.num_vars);
    std::size_t n_slack = 0;
    for (const LinearConstraint& row : sys.rows)
        if (row.relation != Relation::equal) ++n_slack;
    std::size_t total = split + n_slack + m;

    Tableau t;
    t.cols = total;
    t.rows.assign(m, std::vector<Rational>(total, 0));
    t.rhs.assign(m, 0);
    t.basis.resize(m);
    t.allowed.assign(total, true);

    std::size_t slack_at = split;
    for (std::size_t i = 0; i < m; ++i) {
        const LinearConstraint& row = sys.rows[i];
        bool flip = row.rhs < 0;
        Rational sign = flip ? -1 : 1;
        for (int j = 0; j < sys.num_vars; ++j) {
            t.rows[i][2 * static_cast<std::size_t>(j)] = sign * row.coeffs[static_cast<std::size_t>(j)];
            t.rows[i][2 * static_cast<std::size_t>(j) + 1] = -sign * row.coeffs[static_cast<std::size_t>(j)];
        }
        t.rhs[i] = sign * row.rhs;
        if (row.relation != Relation::equal) {
            Rational s = row.relation == Relation::less_equal ? 1 : -1;
            t.rows[i][slack_at++] = sign * s;
        }
        std::size_t art = split + n_slack + i;
        t.rows[i][art] = 1;
        t.basis[i] = art;
    }

    // Phase 1: minimize the sum of artificials.
    t.cost.assign(total, 0);
    t.cost_rhs = 0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < split + n_slack; ++j) t.cost[j] -= t.rows[i][j];
        t.cost_rhs -= t.rhs[i];
    }
    t.minimize();
    if (t.cost_rhs != 0) return std::nullopt;  // -objective != 0 => infeasible

    // Drive leftover artificials out of the basis (degenerate pivots: their
    // rows have rhs 0).  A row that is zero on every real column is
    // redundant and gets dropped, so no artificial can re-enter later.
    for (std::size_t i = 0; i < t.rows.size();) {
        if (t.basis[i] < split + n_slack) {
            ++i;
            continue;
        }
        std::size_t piv = total;
        for (std::size_t j = 0; j < split + n_slack; ++j) {
            if (t.rows[i][j] != 0) {
                piv = j;
                break;
            }
        }
        if (piv == total) {
            t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
            t.rhs.erase(t.rhs.begin() + static_cast<std::ptrdiff_t>(i));
            t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
            continue;
        }
        t.pivot(i, piv);
        ++i;
    }
    for (std::size_t j = split + n_slack; j < total; ++j) t.allowed[j] = false;

    // Phase 2.
    if (sys.objective) {
        t.cost.assign(total, 0);
        t.cost_rhs = 0;
        for (int j = 0; j < sys.num_vars; ++j) {
            t.cost[2 * static_cast<std::size_t>(j)] = (*sys.objective)[static_cast<std::size_t>(j)];
            t.cost[2 * static_cast<std::size_t>(j) + 1] = -(*sys.objective)[static_cast<std::size_t>(j)];
        }
        for (std::size_t i = 0; i < t.rows.size(); ++i) {
            if (t.cost[t.basis[i]] == 0) continue;
            Rational f = t.cost[t.basis[i]];
            for (std::size_t j = 0; j < total; ++j) t.cost[j] -= f * t.rows[i][j];
            t.cost_rhs -= f * t.rhs[i];
        }
        t.minimize();  // if unbounded, the current vertex is still feasible
    }

    std::vector<Rational> point(static_cast<std::size_t>(sys.num_vars), 0);
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        if (t.basis[i] < split) {
            std::size_t j = t.basis[i] / 2;
            if (t.basis[i] % 2 == 0)
                point[j] += t.rhs[i];
            else
                point[j] -= t.rhs[i];
        }
    }
    return point;
}

std::vector<std::uint64_t> scale_to_naturals(const std::vector<Rational>& v) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    BigInt lcm = 1;
    for (const Rational& r : v) {
        if (r < 0) throw std::invalid_argument("scale_to_naturals: negative entry");
        lcm = boost::multiprecision::lcm(lcm, denominator(r));
    }
    std::vector<BigInt> ints;
    ints.reserve(v.size());
    BigInt gcd = 0;
    for (const Rational& r : v) {
        BigInt scaled = numerator(r) * (lcm / denominator(r));
        gcd = boost::multiprecision::gcd(gcd, scaled);
        ints.push_back(std::move(scaled));
    }
    std::vector<std::uint64_t> out(v.size(), 0);
    if (gcd == 0) return out;  // all-zero input
    for (std::size_t i = 0; i < ints.size(); ++i) {
        BigInt q = ints[i] / gcd;
        if (q > std::numeric_limits<std::uint64_t>::max())
            throw std::overflow_error("scale_to_naturals: entry exceeds 64 bits");
        out[i] = static_cast<std::uint64_t>(q);
    }
    return out;
}

std::optional<std::vector<std::uint64_t>> find_dual_coefficients(
    const std::vector<std::vector<std::int64_t>>& d) {
    if (d.empty() || d.front().empty())
        throw std::invalid_argument("find_dual_coefficients: empty matrix");
    std::size_t m = d.size(), k = d.front().size();
    for (const auto& row : d)
        if (row.size() != k) throw std::invalid_argument("find_dual_coefficients: ragged matrix");

    LinearSystem sys;
    sys.num_vars = static_cast<int>(m);
    for (std::size_t i = 0; i < m; ++i) {
        LinearConstraint row;
        row.coeffs.assign(m, 0);
        row.coeffs[i] = 1;
        row.relation = Relation::greater_equal;
        row.rhs = 0;
        sys.rows.push_back(std::move(row));
    }
    for (std::size_t a = 0; a < k; ++a) {
        LinearConstraint row;
        row.coeffs.reserve(m);
        for (std::size_t i = 0; i < m; ++i) row.coeffs.emplace_back(d[i][a]);
        row.relation = Relation::less_equal;
        row.rhs = -1;
        sys.rows.push_back(std::move(row));
    }
    auto point = solve(sys);
    if (!point) return std::nullopt;
    return scale_to_naturals(*point);
}

namespace {

void write_term(std::ostream& out, bool& first, std::int64_t coeff, std::uint64_t var) {
    if (coeff == 0) return;
    if (first) {
        if (coeff < 0) out << "- ";
        first = false;
    } else {
        out << (coeff < 0 ? " - " : " + ");
    }
    std::int64_t mag = coeff < 0 ? -coeff : coeff;
    if (mag != 1) out << mag << " ";
    out << "x_" << var;
}

}  // namespace

void export_lp(const Family& fc, const WeightFn& w, std::ostream& out) {
    int n = fc.universe_size();
    if (n < 1 || !(fc.union_of_members() == SetWord::full_set(n)))
        throw std::invalid_argument("export_lp: the union of Fc must be the whole universe");
    ShareTable table = build_share_table(w, SetWord::full_set(n));
    std::uint64_t subsets = std::uint64_t{1} << n;

    out << "\\ 0-1 feasibility: union-closed extension with negative share\n";
    out << "Minimize\n obj: 0 x_0\nSubject To\n";

    for (std::uint64_t a = 0; a < subsets; ++a) {
        for (std::uint64_t b = a + 1; b < subsets; ++b) {
            std::uint64_t u = a | b;
            out << " u_" << a << "_" << b << ": ";
            bool first = true;
            if (u == a) {          // x_a + x_b - x_a = x_b
                write_term(out, first, 1, b);
            } else if (u == b) {
                write_term(out, first, 1, a);
            } else {
                write_term(out, first, 1, a);
                write_term(out, first, 1, b);
                write_term(out, first, -1, u);
            }
            out << " <= 1\n";
        }
    }
    for (const SetWord& a : fc) {
        for (std::uint64_t b = 0; b < subsets; ++b) {
            std::uint64_t u = a.bits() | b;
            if (u == b) continue;
            out << " c_" << a.bits() << "_" << b << ": x_" << b << " - x_" << u << " <= 0\n";
        }
    }
    out << " share: ";
    bool first = true;
    for (std::uint64_t a = 0; a < subsets; ++a) write_term(out, first, table[a], a);
    out << " <= -1\nBinary\n";
    for (std::uint64_t a = 0; a < subsets; ++a) out << " x_" << a << "\n";
    out << "End\n";
}

void export_lp_file(const Family& fc, const WeightFn& w, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("export_lp: cannot open " + path);
    export_lp(fc, w, out);
    if (!out.flush()) throw std::runtime_error("export_lp: write failed for " + path);
}

}  // namespace fc
