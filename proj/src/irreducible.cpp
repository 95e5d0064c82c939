#include "fc/irreducible.hpp"

#include <algorithm>

namespace fc {

bool is_dependent(const SetWord& a, const Family& f) {
    std::uint64_t joined = 0;
    bool any = false;
    for (const SetWord& b : f) {
        if (b.subset_of(a)) {
            joined |= b.bits();
            any = true;
        }
    }
    return any && joined == a.bits();
}

bool is_irreducible(const Family& f) {
    for (const SetWord& a : f)
        if (is_dependent(a, f.without(a))) return false;
    return true;
}

Family reduce(const Family& f) {
    const std::vector<SetWord>& members = f.members();
    std::vector<bool> removed(members.size(), false);
    // Larger sets first; a dependence witness uses only strict subsets, and
    // those are never removed before the set under test.
    for (std::size_t i = members.size(); i-- > 0;) {
        std::vector<SetWord> others;
        others.reserve(members.size());
        for (std::size_t j = 0; j < members.size(); ++j)
            if (j != i && !removed[j]) others.push_back(members[j]);
        if (is_dependent(members[i], Family(std::move(others), f.universe_size())))
            removed[i] = true;
    }
    std::vector<SetWord> kept;
    for (std::size_t i = 0; i < members.size(); ++i)
        if (!removed[i]) kept.push_back(members[i]);
    return Family(std::move(kept), f.universe_size());
}

}  // namespace fc
