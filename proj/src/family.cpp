#include "fc/family.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace fc {

namespace {

void check_same_universe(int a, int b, const char* what) {
    if (a != b)
        throw std::invalid_argument(std::string(what) + ": universe size mismatch (" +
                                    std::to_string(a) + " vs " + std::to_string(b) + ")");
}

}  // namespace

SetWord::SetWord(std::uint64_t bits, int universe_size) : bits_(bits), n_(universe_size) {
    if (universe_size < 0 || universe_size > max_universe)
        throw std::invalid_argument("SetWord: universe size out of range: " +
                                    std::to_string(universe_size));
    if (universe_size < 64 && (bits >> universe_size) != 0)
        throw std::invalid_argument("SetWord: bits outside universe [" +
                                    std::to_string(universe_size) + ")");
}

SetWord SetWord::full_set(int universe_size) {
    if (universe_size < 0 || universe_size > max_universe)
        throw std::invalid_argument("SetWord: universe size out of range");
    std::uint64_t bits = universe_size == 64 ? ~std::uint64_t{0}
                                             : (std::uint64_t{1} << universe_size) - 1;
    return SetWord(bits, universe_size);
}

SetWord SetWord::from_elements(std::span<const int> elements, int universe_size) {
    std::uint64_t bits = 0;
    for (int e : elements) {
        if (e < 0 || e >= universe_size)
            throw std::invalid_argument("SetWord: element " + std::to_string(e) +
                                        " outside universe [" + std::to_string(universe_size) + ")");
        bits |= std::uint64_t{1} << e;
    }
    return SetWord(bits, universe_size);
}

SetWord SetWord::from_elements(std::initializer_list<int> elements, int universe_size) {
    return from_elements(std::span<const int>(elements.begin(), elements.size()), universe_size);
}

int SetWord::size() const { return std::popcount(bits_); }

bool SetWord::contains(int element) const {
    return element >= 0 && element < n_ && ((bits_ >> element) & 1) != 0;
}

bool SetWord::subset_of(const SetWord& other) const {
    check_same_universe(n_, other.n_, "subset_of");
    return (bits_ & ~other.bits_) == 0;
}

std::vector<int> SetWord::elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1)
        out.push_back(std::countr_zero(b));
    return out;
}

SetWord SetWord::union_with(const SetWord& other) const {
    check_same_universe(n_, other.n_, "union_with");
    return SetWord(bits_ | other.bits_, n_);
}

SetWord SetWord::intersect(const SetWord& other) const {
    check_same_universe(n_, other.n_, "intersect");
    return SetWord(bits_ & other.bits_, n_);
}

SetWord SetWord::minus(const SetWord& other) const {
    check_same_universe(n_, other.n_, "minus");
    return SetWord(bits_ & ~other.bits_, n_);
}

bool set_less(const SetWord& a, const SetWord& b) {
    int sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    return a.bits() < b.bits();
}

Family::Family(std::vector<SetWord> members, int universe_size)
    : members_(std::move(members)), n_(universe_size) {
    for (const SetWord& a : members_)
        check_same_universe(a.universe_size(), n_, "Family");
    std::sort(members_.begin(), members_.end(), set_less);
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Family::contains(const SetWord& a) const {
    return std::binary_search(members_.begin(), members_.end(), a, set_less);
}

SetWord Family::union_of_members() const {
    std::uint64_t bits = 0;
    for (const SetWord& a : members_) bits |= a.bits();
    return SetWord(bits, n_);
}

Family Family::with(const SetWord& a) const {
    check_same_universe(a.universe_size(), n_, "Family::with");
    if (contains(a)) return *this;
    Family out = *this;
    out.members_.insert(
        std::upper_bound(out.members_.begin(), out.members_.end(), a, set_less), a);
    return out;
}

Family Family::without(const SetWord& a) const {
    Family out(n_);
    out.members_.reserve(members_.size());
    for (const SetWord& b : members_)
        if (!(b == a)) out.members_.push_back(b);
    return out;
}

bool family_less(const Family& a, const Family& b) {
    return std::lexicographical_compare(a.members().begin(), a.members().end(),
                                        b.members().begin(), b.members().end(), set_less);
}

Collection::Collection(std::vector<Family> families) : families_(std::move(families)) {
    std::sort(families_.begin(), families_.end(), family_less);
    families_.erase(std::unique(families_.begin(), families_.end()), families_.end());
}

bool Collection::contains(const Family& f) const {
    return std::binary_search(families_.begin(), families_.end(), f, family_less);
}

Family sum_fam(const Family& f1, const Family& f2) {
    check_same_universe(f1.universe_size(), f2.universe_size(), "sum_fam");
    std::vector<SetWord> out;
    out.reserve(f1.size() * f2.size());
    for (const SetWord& a : f1)
        for (const SetWord& b : f2)
            out.push_back(a.union_with(b));
    return Family(std::move(out), f1.universe_size());
}

Family closure(const Family& f) {
    // Fold insert-and-close over the members; each step keeps the running
    // family union-closed, so the result is the minimal union-closed
    // superfamily.
    Family acc(f.universe_size());
    for (const SetWord& a : f) acc = insert_close(a, acc);
    return acc;
}

Family insert_close_for(const Family& fc, const SetWord& a, const Family& f) {
    check_same_universe(fc.universe_size(), f.universe_size(), "insert_close_for");
    check_same_universe(a.universe_size(), f.universe_size(), "insert_close_for");
    std::vector<SetWord> out(f.members());
    out.push_back(a);
    for (const SetWord& b : f) out.push_back(a.union_with(b));
    for (const SetWord& b : fc) out.push_back(a.union_with(b));
    return Family(std::move(out), f.universe_size());
}

Family insert_close(const SetWord& a, const Family& f) {
    return insert_close_for(Family(f.universe_size()), a, f);
}

bool is_union_closed_for(const Family& fc, const Family& f) {
    check_same_universe(fc.universe_size(), f.universe_size(), "is_union_closed_for");
    for (const SetWord& a : f) {
        for (const SetWord& b : f)
            if (!f.contains(a.union_with(b))) return false;
        for (const SetWord& b : fc)
            if (!f.contains(a.union_with(b))) return false;
    }
    return true;
}

bool is_union_closed(const Family& f) {
    return is_union_closed_for(Family(f.universe_size()), f);
}

int cnt(int element, const Family& f) {
    int count = 0;
    for (const SetWord& a : f)
        if (a.contains(element)) ++count;
    return count;
}

bool is_frankl(const Family& f) {
    SetWord support = f.union_of_members();
    for (int e : support.elements())
        if (2 * cnt(e, f) >= static_cast<int>(f.size())) return true;
    return false;
}

}  // namespace fc
