#include "fc/weights.hpp"

#include <limits>
#include <stdexcept>

namespace fc {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("weight sum overflow");
    return r;
}

std::int64_t checked_add_signed(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("share sum overflow");
    return r;
}

// 2w(A) − w(X) as a checked signed value.
std::int64_t share_value(std::uint64_t weight_a, std::uint64_t weight_x) {
    constexpr std::uint64_t lim = std::uint64_t{1} << 62;
    if (weight_a >= lim || weight_x >= lim) throw std::overflow_error("share overflow");
    return 2 * static_cast<std::int64_t>(weight_a) - static_cast<std::int64_t>(weight_x);
}

void check_overlap_free(const SetWord& k, const SetWord& s, const char* what) {
    if (!k.intersect(s).empty())
        throw std::invalid_argument(std::string(what) + ": K and S overlap");
}

}  // namespace

WeightFn::WeightFn(std::vector<std::uint64_t> weights) : weights_(std::move(weights)) {
    if (weights_.size() > SetWord::max_universe)
        throw std::invalid_argument("WeightFn: too many entries");
}

bool is_weight_fn_on(const WeightFn& w, const SetWord& domain) {
    if (domain.universe_size() > w.universe_size())
        throw std::invalid_argument("is_weight_fn_on: domain exceeds weight vector");
    for (int e : domain.elements())
        if (w[e] > 0) return true;
    return false;
}

std::uint64_t set_weight(const WeightFn& w, const SetWord& a) {
    if (a.universe_size() > w.universe_size())
        throw std::invalid_argument("set_weight: set exceeds weight vector");
    std::uint64_t sum = 0;
    for (int e : a.elements()) sum = checked_add(sum, w[e]);
    return sum;
}

std::uint64_t family_weight(const WeightFn& w, const Family& f) {
    std::uint64_t sum = 0;
    for (const SetWord& a : f) sum = checked_add(sum, set_weight(w, a));
    return sum;
}

std::int64_t set_share(const WeightFn& w, const SetWord& a, const SetWord& x) {
    if (!a.subset_of(x)) throw std::invalid_argument("set_share: A not a subset of X");
    return share_value(set_weight(w, a), set_weight(w, x));
}

std::int64_t family_share(const WeightFn& w, const Family& f, const SetWord& x) {
    std::int64_t sum = 0;
    for (const SetWord& a : f) sum = checked_add_signed(sum, set_share(w, a, x));
    return sum;
}

ShareTable::ShareTable(std::vector<std::int64_t> shares, SetWord domain)
    : shares_(std::move(shares)), domain_(domain) {}

ShareTable build_share_table(const WeightFn& w, const SetWord& x) {
    int n = x.universe_size();
    if (n > 16) throw std::invalid_argument("build_share_table: universe too large");
    std::uint64_t wx = set_weight(w, x);
    std::vector<std::int64_t> shares(std::size_t{1} << n);
    for (std::uint64_t bits = 0; bits < shares.size(); ++bits) {
        SetWord a(bits & x.bits(), n);
        shares[bits] = share_value(set_weight(w, a), wx);
    }
    return ShareTable(std::move(shares), x);
}

Family hypercube(const SetWord& k, const SetWord& s) {
    check_overlap_free(k, s, "hypercube");
    int n = k.universe_size();
    std::vector<SetWord> members;
    // Subsets of S via the subset-enumeration loop over the mask.
    std::uint64_t sub = 0;
    do {
        members.emplace_back(k.bits() | sub, n);
        sub = (sub - s.bits()) & s.bits();
    } while (sub != 0);
    return Family(std::move(members), n);
}

std::int64_t hyper_share(const SetWord& k, const SetWord& s, const Family& f,
                         const WeightFn& w, const SetWord& x) {
    check_overlap_free(k, s, "hyper_share");
    SetWord cube = k.union_with(s);
    std::int64_t sum = 0;
    for (const SetWord& a : f)
        if (k.subset_of(a) && a.subset_of(cube))
            sum = checked_add_signed(sum, set_share(w, a, x));
    return sum;
}

Family project(const SetWord& k, const SetWord& s, const Family& f) {
    check_overlap_free(k, s, "project");
    SetWord cube = k.union_with(s);
    std::vector<SetWord> members;
    for (const SetWord& a : f)
        if (k.subset_of(a) && a.subset_of(cube))
            members.push_back(a.minus(k));
    return Family(std::move(members), f.universe_size());
}

}  // namespace fc
