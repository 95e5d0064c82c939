#pragma once

// L-partitioned family enumeration: incremental predicates, filtered
// products, the simple recursive enumerator and the dynamic-programming
// enumerator over the lattice of partition lists.

#include <algorithm>
#include <functional>
#include <utility>
#include <vector>

#include "fc/family.hpp"

namespace fc {

/// counts[i] = number of members with exactly i elements.
using PartitionList = std::vector<int>;

/// counts[i] = |{A ∈ F : |A| = i}| for 0 ≤ i ≤ m; every member must have at
/// most m elements.
PartitionList partition_signature(const Family& f, int m);

/// ∀i: l1[i] ≤ l2[i]; lists must have equal length.
bool pointwise_leq(const PartitionList& l1, const PartitionList& l2);

/// All m-element subsets of [n] in canonical order (empty when m > n).
std::vector<SetWord> subsets_of_size(int n, int m);

/// A predicate P together with its incremental form: for A ∉ F no smaller
/// than any member, P(F ∪ {A}) ⟺ P(F) ∧ inc(F, A).
struct IncPredicate {
    std::function<bool(const Family&)> full;
    std::function<bool(const Family&, const SetWord&)> inc;
    bool injective_invariant = false;
};

IncPredicate pred_true();
IncPredicate pred_irreducible();
IncPredicate pred_not_fc_covered(const Collection& fcs);
IncPredicate pred_and(IncPredicate a, IncPredicate b);

/// {F ∪ {A} : F ∈ C, A ∈ sets, A ∉ F, q.inc(F, A)}, deduplicated and sorted.
Collection filtered_product(const Collection& c, std::span<const SetWord> sets,
                            const IncPredicate& q);

/// Recursion over partition lists: empty list yields v0, a trailing zero is
/// dropped, otherwise upd is applied to the value for the decremented list.
template <class V, class Upd>
V enum_rec(const PartitionList& l, const V& v0, Upd&& upd) {
    PartitionList cur = l;
    while (!cur.empty()) {
        if (cur.back() == 0) {
            cur.pop_back();
            continue;
        }
        PartitionList dec = cur;
        --dec.back();
        V below = enum_rec(dec, v0, upd);
        return upd(below, cur);
    }
    return v0;
}

/// The sequence of lists visited by enum_rec's recursive calls, in order
/// (the initial list excluded, the empty list included).
std::vector<PartitionList> enum_rec_trace(const PartitionList& l);

/// Lattice traversal: starting at the all-zero list, repeatedly increment a
/// position at or after the last nonzero one.  Lists failing stop or
/// exceeding lmax are not entered.  Every surviving list is paired with its
/// value; the result is sorted by list.
template <class V, class Upd, class Stop>
std::vector<std::pair<PartitionList, V>> enum_dp(const V& v0, Upd&& upd, Stop&& stop,
                                                 const PartitionList& lmax) {
    std::vector<std::pair<PartitionList, V>> result;
    struct Rec {
        std::vector<std::pair<PartitionList, V>>& result;
        Upd& upd;
        Stop& stop;
        const PartitionList& lmax;
        void walk(const PartitionList& l, std::size_t m, const V& v) {
            result.emplace_back(l, v);
            for (std::size_t i = m; i < l.size(); ++i) {
                PartitionList next = l;
                ++next[i];
                if (stop(next) || !pointwise_leq(next, lmax)) continue;
                walk(next, i, upd(v, static_cast<int>(i)));
            }
        }
    } rec{result, upd, stop, lmax};
    rec.walk(PartitionList(lmax.size(), 0), 0, v0);
    std::sort(result.begin(), result.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return result;
}

}  // namespace fc
