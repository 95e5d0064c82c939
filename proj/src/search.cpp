#include "fc/search.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace fc {

bool uce_contains(const Family& fc, const Family& f) {
    SetWord x = fc.union_of_members();
    for (const SetWord& a : f)
        if (!a.subset_of(x)) return false;
    return is_union_closed_for(fc, f);
}

namespace {

// Candidate families live in a bitset over all 2^n subsets, indexed by the
// subset's element bitmask.  One word suffices for the n ≤ 6 workload; the
// generic variant covers n ≤ 16 best-effort.
struct SmallCandidate {
    std::uint64_t words = 0;
    explicit SmallCandidate(std::size_t) {}
    bool contains(std::uint32_t a) const { return (words >> a) & 1; }
    void add(std::uint32_t a) { words |= std::uint64_t{1} << a; }
    template <class Fn>
    void for_each_member(Fn&& fn) const {
        for (std::uint64_t b = words; b != 0; b &= b - 1)
            fn(static_cast<std::uint32_t>(std::countr_zero(b)));
    }
};

struct BigCandidate {
    std::vector<std::uint64_t> words;
    explicit BigCandidate(std::size_t subsets) : words((subsets + 63) / 64, 0) {}
    bool contains(std::uint32_t a) const { return (words[a >> 6] >> (a & 63)) & 1; }
    void add(std::uint32_t a) { words[a >> 6] |= std::uint64_t{1} << (a & 63); }
    template <class Fn>
    void for_each_member(Fn&& fn) const {
        for (std::size_t i = 0; i < words.size(); ++i)
            for (std::uint64_t b = words[i]; b != 0; b &= b - 1)
                fn(static_cast<std::uint32_t>(i * 64 + std::countr_zero(b)));
    }
};

struct SearchContext {
    int n = 0;
    SetWord x;
    std::vector<std::int64_t> share;        // by subset bitmask
    std::vector<std::uint32_t> fc_members;  // closure(Fc), as bitmasks
    std::vector<std::uint32_t> neg_sets;    // negative-share subsets of X
    std::vector<std::int64_t> neg_share;
    std::vector<std::int64_t> suffix_sum;   // Σ of neg_share from index i on
};

SearchContext make_context(const Family& fc, const WeightFn& w) {
    SearchContext ctx;
    ctx.x = fc.union_of_members();
    ctx.n = fc.universe_size();
    if (ctx.n > 16) throw std::invalid_argument("ssn: universe too large");
    if (!is_weight_fn_on(w, ctx.x))
        throw std::invalid_argument("ssn: w is not a weight function on the union of Fc");
    if (set_weight(w, ctx.x) > (std::uint64_t{1} << 45))
        throw std::overflow_error("ssn: weights too large");

    ShareTable table = build_share_table(w, ctx.x);
    ctx.share.resize(std::size_t{1} << ctx.n);
    for (std::size_t a = 0; a < ctx.share.size(); ++a)
        ctx.share[a] = table[a];

    for (const SetWord& a : closure(fc))
        ctx.fc_members.push_back(static_cast<std::uint32_t>(a.bits()));

    // All subsets of X with negative share, most negative first so the
    // share-sum prune fires early.  Ties resolved by the set order.
    std::uint64_t sub = 0;
    do {
        if (ctx.share[sub] < 0) ctx.neg_sets.push_back(static_cast<std::uint32_t>(sub));
        sub = (sub - ctx.x.bits()) & ctx.x.bits();
    } while (sub != 0);
    std::sort(ctx.neg_sets.begin(), ctx.neg_sets.end(),
              [&](std::uint32_t a, std::uint32_t b) {
                  if (ctx.share[a] != ctx.share[b]) return ctx.share[a] < ctx.share[b];
                  int pa = std::popcount(a), pb = std::popcount(b);
                  return pa != pb ? pa < pb : a < b;
              });
    ctx.neg_share.resize(ctx.neg_sets.size());
    for (std::size_t i = 0; i < ctx.neg_sets.size(); ++i)
        ctx.neg_share[i] = ctx.share[ctx.neg_sets[i]];
    ctx.suffix_sum.assign(ctx.neg_sets.size() + 1, 0);
    for (std::size_t i = ctx.neg_sets.size(); i-- > 0;)
        ctx.suffix_sum[i] = ctx.suffix_sum[i + 1] + ctx.neg_share[i];
    return ctx;
}

// Insert h and close for closure(Fc), updating the cached share.  One round
// of unions suffices because the candidate is union-closed for a union-closed
// Fc at every node.
template <class Candidate>
void insert_close_candidate(const SearchContext& ctx, Candidate& ft, std::int64_t& s_t,
                            std::uint32_t h) {
    std::vector<std::uint32_t> added;
    added.push_back(h);
    ft.for_each_member([&](std::uint32_t b) {
        if (std::uint32_t u = b | h; !ft.contains(u)) added.push_back(u);
    });
    for (std::uint32_t c : ctx.fc_members)
        if (std::uint32_t u = c | h; !ft.contains(u)) added.push_back(u);
    for (std::uint32_t u : added) {
        if (!ft.contains(u)) {
            ft.add(u);
            s_t += ctx.share[u];
        }
    }
}

template <class Candidate, bool Paranoid>
bool ssn_rec(const SearchContext& ctx, std::size_t i, const Candidate& ft, std::int64_t s_t,
             Candidate* witness) {
    if constexpr (Paranoid) {
        std::int64_t fresh = 0;
        ft.for_each_member([&](std::uint32_t b) { fresh += ctx.share[b]; });
        if (fresh != s_t)
            throw std::logic_error("ssn: cached candidate share diverged");
    }
    if (i == ctx.neg_sets.size()) {
        if (s_t < 0) {
            if (witness) *witness = ft;
            return true;
        }
        return false;
    }
    if (s_t + ctx.suffix_sum[i] >= 0) return false;
    if (ssn_rec<Candidate, Paranoid>(ctx, i + 1, ft, s_t, witness)) return true;
    std::uint32_t h = ctx.neg_sets[i];
    if (ft.contains(h)) return false;
    Candidate extended = ft;
    std::int64_t s_extended = s_t;
    insert_close_candidate(ctx, extended, s_extended, h);
    return ssn_rec<Candidate, Paranoid>(ctx, i + 1, extended, s_extended, witness);
}

template <bool Paranoid>
bool run_ssn(const SearchContext& ctx, Family* witness_out) {
    std::size_t subsets = std::size_t{1} << ctx.n;
    bool found;
    Family witness(ctx.n);
    if (ctx.n <= 6) {
        SmallCandidate ft(subsets), wit(subsets);
        found = ssn_rec<SmallCandidate, Paranoid>(ctx, 0, ft, 0, witness_out ? &wit : nullptr);
        if (found && witness_out) {
            std::vector<SetWord> members;
            wit.for_each_member([&](std::uint32_t b) { members.emplace_back(b, ctx.n); });
            witness = Family(std::move(members), ctx.n);
        }
    } else {
        BigCandidate ft(subsets), wit(subsets);
        found = ssn_rec<BigCandidate, Paranoid>(ctx, 0, ft, 0, witness_out ? &wit : nullptr);
        if (found && witness_out) {
            std::vector<SetWord> members;
            wit.for_each_member([&](std::uint32_t b) { members.emplace_back(b, ctx.n); });
            witness = Family(std::move(members), ctx.n);
        }
    }
    if (found && witness_out) *witness_out = std::move(witness);
    return found;
}

}  // namespace

bool ssn(const Family& fc, const WeightFn& w) {
    return run_ssn<false>(make_context(fc, w), nullptr);
}

std::optional<Family> find_negative_extension(const Family& fc, const WeightFn& w) {
    Family witness(fc.universe_size());
    if (run_ssn<false>(make_context(fc, w), &witness)) return witness;
    return std::nullopt;
}

namespace detail {

bool ssn_paranoid(const Family& fc, const WeightFn& w) {
    return run_ssn<true>(make_context(fc, w), nullptr);
}

}  // namespace detail

}  // namespace fc
