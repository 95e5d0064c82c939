#include "fc/classify.hpp"

#include <algorithm>

#include "fc/linear.hpp"
#include "fc/rational.hpp"
#include "fc/search.hpp"

namespace fc {

namespace {

Family strip_empty(const Family& f) {
    return f.without(SetWord::empty_set(f.universe_size()));
}

// One row per witness family, one column per element of x.
std::vector<std::vector<std::int64_t>> count_matrix(const std::vector<Family>& witnesses,
                                                    const SetWord& x) {
    std::vector<int> elems = x.elements();
    std::vector<std::vector<std::int64_t>> d;
    d.reserve(witnesses.size());
    for (const Family& fi : witnesses) {
        std::vector<std::int64_t> row;
        row.reserve(elems.size());
        for (int a : elems)
            row.push_back(2 * static_cast<std::int64_t>(cnt(a, fi)) -
                          static_cast<std::int64_t>(fi.size()));
        d.push_back(std::move(row));
    }
    return d;
}

WeightFn lift_weights(const std::vector<std::uint64_t>& on_x, const SetWord& x, int n) {
    std::vector<std::uint64_t> w(static_cast<std::size_t>(n), 0);
    std::vector<int> elems = x.elements();
    for (std::size_t i = 0; i < elems.size(); ++i)
        w[static_cast<std::size_t>(elems[i])] = on_x[i];
    return WeightFn(std::move(w));
}

}  // namespace

FCStatus classify(const Family& fc, const ClassifyOptions& options) {
    Family stripped = strip_empty(fc);
    Family normalized = closure(stripped);
    SetWord x = normalized.union_of_members();
    int n = fc.universe_size();

    if (x.empty()) {
        // No element is available to be abundant; the empty extension family
        // is a vacuous witness.
        NonFCCertificate cert{normalized, {{Family(n), 1}}};
        return FCStatus::make_nonfc(std::move(cert));
    }

    std::size_t k = static_cast<std::size_t>(x.size());
    std::vector<Family> collected;

    for (std::uint64_t iteration = 0; iteration < options.max_iterations; ++iteration) {
        // Phase 1: candidate weight function, smallest total weight first.
        LinearSystem sys;
        sys.num_vars = static_cast<int>(k);
        for (std::size_t j = 0; j < k; ++j) {
            LinearConstraint row;
            row.coeffs.assign(k, 0);
            row.coeffs[j] = 1;
            row.relation = Relation::greater_equal;
            row.rhs = 0;
            sys.rows.push_back(std::move(row));
        }
        {
            LinearConstraint row;
            row.coeffs.assign(k, 1);
            row.relation = Relation::greater_equal;
            row.rhs = 1;
            sys.rows.push_back(std::move(row));
        }
        for (const auto& d_row : count_matrix(collected, x)) {
            LinearConstraint row;
            row.coeffs.assign(d_row.begin(), d_row.end());
            row.relation = Relation::greater_equal;
            row.rhs = 0;
            sys.rows.push_back(std::move(row));
        }
        sys.objective = std::vector<Rational>(k, 1);

        auto point = solve(sys);
        if (!point) {
            auto coeffs = find_dual_coefficients(count_matrix(collected, x));
            if (!coeffs)
                throw std::logic_error("classify: infeasible system without dual witness");
            NonFCCertificate cert{normalized, {}};
            for (std::size_t i = 0; i < collected.size(); ++i)
                if ((*coeffs)[i] > 0) cert.witnesses.emplace_back(collected[i], (*coeffs)[i]);
            return FCStatus::make_nonfc(std::move(cert));
        }

        WeightFn w = lift_weights(scale_to_naturals(*point), x, n);

        // Phase 2: search for a union-closed extension with negative share.
        auto extension = find_negative_extension(stripped, w);
        if (!extension) return FCStatus::make_fc(FCCertificate{fc, std::move(w)});
        collected.push_back(std::move(*extension));
    }
    throw resource_limit_error("classify: iteration cap exceeded");
}

bool verify_fc(const FCCertificate& cert) {
    if (cert.weight.universe_size() != cert.family.universe_size()) return false;
    if (!is_weight_fn_on(cert.weight, cert.family.union_of_members())) return false;
    return !ssn(cert.family, cert.weight);
}

bool verify_nonfc(const NonFCCertificate& cert) {
    if (!is_union_closed(cert.family)) return false;
    bool some_positive = false;
    for (const auto& [fi, ci] : cert.witnesses) {
        if (fi.universe_size() != cert.family.universe_size()) return false;
        if (!uce_contains(cert.family, fi)) return false;
        if (ci > 0) some_positive = true;
    }
    if (!some_positive) return false;
    for (int a : cert.family.union_of_members().elements()) {
        BigInt total = 0;
        for (const auto& [fi, ci] : cert.witnesses)
            total += BigInt(ci) * (2 * static_cast<std::int64_t>(cnt(a, fi)) -
                                   static_cast<std::int64_t>(fi.size()));
        if (total >= 0) return false;
    }
    return true;
}

Family expand_counterexample(const NonFCCertificate& cert, int d) {
    if (d < 1) throw std::invalid_argument("expand_counterexample: d must be positive");
    if (!verify_nonfc(cert))
        throw std::invalid_argument("expand_counterexample: certificate does not verify");

    const Family& base = cert.family;
    int n0 = base.universe_size();
    SetWord x = base.union_of_members();

    BigInt c_total = 0;
    for (const auto& [fi, ci] : cert.witnesses) c_total += ci;
    BigInt fresh_big = c_total * d + 1;
    if (n0 + fresh_big > SetWord::max_universe)
        throw std::overflow_error(
            "expand_counterexample: extended universe exceeds machine word; "
            "a certificate with smaller coefficients is needed");
    int fresh = static_cast<int>(fresh_big);
    int n = n0 + fresh;

    std::uint64_t bd = ((fresh == 64 ? 0 : std::uint64_t{1} << fresh) - 1) << n0;
    std::vector<SetWord> members;
    for (const SetWord& a : base) members.emplace_back(a.bits(), n);

    // Punctured blocks: witness F_i repeated c_i·d times, each copy joined
    // with B^d minus one distinct fresh element.
    int s = 0;
    for (const auto& [fi, ci] : cert.witnesses) {
        for (std::uint64_t rep = 0; rep < ci * static_cast<std::uint64_t>(d); ++rep, ++s) {
            std::uint64_t bds = bd & ~(std::uint64_t{1} << (n0 + s));
            for (const SetWord& a : fi) members.emplace_back(a.bits() | bds, n);
        }
    }
    // Top block over the whole powerset of ⋃family.
    std::uint64_t sub = 0;
    do {
        members.emplace_back(sub | bd, n);
        sub = (sub - x.bits()) & x.bits();
    } while (sub != 0);

    return Family(std::move(members), n);
}

int find_sufficient_d(const NonFCCertificate& cert) {
    if (!verify_nonfc(cert))
        throw std::invalid_argument("find_sufficient_d: certificate does not verify");
    int cap = static_cast<int>(cert.family.size()) + 2;
    for (int d = 1; d <= cap; ++d)
        if (check_counterexample(cert.family, expand_counterexample(cert, d))) return d;
    throw std::logic_error("find_sufficient_d: no d within the theoretical bound");
}

bool check_counterexample(const Family& fc, const Family& fd) {
    if (fd.universe_size() < fc.universe_size()) return false;
    for (const SetWord& a : fc)
        if (!fd.contains(SetWord(a.bits(), fd.universe_size()))) return false;
    if (!is_union_closed(fd)) return false;
    for (int a : fc.union_of_members().elements())
        if (2 * cnt(a, fd) >= static_cast<int>(fd.size())) return false;
    return true;
}

}  // namespace fc
