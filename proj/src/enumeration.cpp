#include "fc/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "fc/covering.hpp"
#include "fc/irreducible.hpp"

namespace fc {

PartitionList partition_signature(const Family& f, int m) {
    PartitionList counts(static_cast<std::size_t>(m) + 1, 0);
    for (const SetWord& a : f) {
        if (a.size() > m)
            throw std::invalid_argument("partition_signature: member larger than m");
        ++counts[static_cast<std::size_t>(a.size())];
    }
    return counts;
}

bool pointwise_leq(const PartitionList& l1, const PartitionList& l2) {
    if (l1.size() != l2.size())
        throw std::invalid_argument("pointwise_leq: length mismatch");
    for (std::size_t i = 0; i < l1.size(); ++i)
        if (l1[i] > l2[i]) return false;
    return true;
}

std::vector<SetWord> subsets_of_size(int n, int m) {
    std::vector<SetWord> out;
    if (m > n || m < 0) return out;
    std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t bits = 0; bits < limit; ++bits)
        if (std::popcount(bits) == m) out.emplace_back(bits, n);
    return out;  // equal cardinality, so ascending bits is the canonical order
}

IncPredicate pred_true() {
    return {[](const Family&) { return true; },
            [](const Family&, const SetWord&) { return true; }, true};
}

IncPredicate pred_irreducible() {
    return {[](const Family& f) { return is_irreducible(f); },
            [](const Family& f, const SetWord& a) { return !is_dependent(a, f); }, true};
}

IncPredicate pred_not_fc_covered(const Collection& fcs) {
    return {[&fcs](const Family& f) { return !fc_covered(f, fcs); },
            [&fcs](const Family& f, const SetWord& a) { return !fc_covered(f.with(a), fcs); },
            true};
}

IncPredicate pred_and(IncPredicate a, IncPredicate b) {
    return {[a = a.full, b = b.full](const Family& f) { return a(f) && b(f); },
            [a = a.inc, b = b.inc](const Family& f, const SetWord& s) {
                return a(f, s) && b(f, s);
            },
            a.injective_invariant && b.injective_invariant};
}

Collection filtered_product(const Collection& c, std::span<const SetWord> sets,
                            const IncPredicate& q) {
    std::vector<Family> out;
    for (const Family& f : c)
        for (const SetWord& a : sets)
            if (!f.contains(a) && q.inc(f, a)) out.push_back(f.with(a));
    return Collection(std::move(out));
}

std::vector<PartitionList> enum_rec_trace(const PartitionList& l) {
    std::vector<PartitionList> trace;
    PartitionList cur = l;
    while (!cur.empty()) {
        if (cur.back() == 0)
            cur.pop_back();
        else
            --cur.back();
        trace.push_back(cur);
    }
    return trace;
}

}  // namespace fc
