#include "fc/covering.hpp"

#include "fc/irreducible.hpp"
#include "fc/iso.hpp"

namespace fc {

namespace {

bool subset_of_family(const Family& small, const Family& big) {
    for (const SetWord& a : small)
        if (!big.contains(a)) return false;
    return true;
}

}  // namespace

bool fc_covered(const Family& f, const Family& fc) {
    Family cl = closure(f);
    for (const Perm& p : all_permutations(f.universe_size()))
        if (subset_of_family(apply_perm(p, fc), cl)) return true;
    return false;
}

bool fc_covered(const Family& f, const Collection& fcs) {
    Family cl = closure(f);
    for (const Family& fc : fcs)
        for (const Perm& p : all_permutations(f.universe_size()))
            if (subset_of_family(apply_perm(p, fc), cl)) return true;
    return false;
}

bool fc_covered(const Collection& c, const Collection& fcs) {
    for (const Family& f : c)
        if (!fc_covered(f, fcs)) return false;
    return true;
}

namespace {

bool nonfc_covered_against_closure(const Family& cl_f, const Family& nc) {
    SetWord empty = SetWord::empty_set(cl_f.universe_size());
    Family cl_nc = closure(nc);
    for (const Perm& p : all_permutations(cl_f.universe_size())) {
        Family image = apply_perm(p, cl_nc).with(empty);
        if (subset_of_family(cl_f, image)) return true;
    }
    return false;
}

}  // namespace

bool nonfc_covered(const Family& f, const Family& nc) {
    return nonfc_covered_against_closure(closure(f), nc);
}

bool nonfc_covered(const Family& f, const Collection& ncs) {
    Family cl = closure(f);
    for (const Family& nc : ncs)
        if (nonfc_covered_against_closure(cl, nc)) return true;
    return false;
}

bool nonfc_covered(const Collection& c, const Collection& ncs) {
    for (const Family& f : c)
        if (!nonfc_covered(f, ncs)) return false;
    return true;
}

bool covered(const Family& f, const Collection& fcs, const Collection& ncs) {
    Family cl = closure(f);
    for (const Family& fc : fcs)
        for (const Perm& p : all_permutations(f.universe_size()))
            if (subset_of_family(apply_perm(p, fc), cl)) return true;
    for (const Family& nc : ncs)
        if (nonfc_covered_against_closure(cl, nc)) return true;
    return false;
}

bool covered(const Collection& c, const Collection& fcs, const Collection& ncs) {
    for (const Family& f : c)
        if (!covered(f, fcs, ncs)) return false;
    return true;
}

bool is_minimal_fc(const Family& f, const FcOracle& oracle) {
    if (!is_irreducible(f) || !oracle(f)) return false;
    for (const SetWord& a : f)
        if (oracle(f.without(a))) return false;
    return true;
}

bool is_maximal_nonfc(const Family& f, const FcOracle& oracle) {
    if (!is_union_closed(f) || oracle(f)) return false;
    SetWord x = f.union_of_members();
    std::uint64_t sub = 0;
    do {
        SetWord a(sub, f.universe_size());
        if (!a.empty() && !f.contains(a) && !oracle(f.with(a))) return false;
        sub = (sub - x.bits()) & x.bits();
    } while (sub != 0);
    return true;
}

}  // namespace fc
