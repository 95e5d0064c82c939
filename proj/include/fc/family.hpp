#pragma once

// Bitmask representation of sets and set families over a universe [n] =
// {0, ..., n-1}, with union-closure operations and the Frankl condition.
//
// Sets are compared first by cardinality, then by numeric bitmask value;
// families keep their members strictly increasing under that order, so
// equal families are representationally identical.

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace fc {

/// One subset of the universe [n], encoded as an n-bit mask.
/// Element i is a member iff bit i is set.  The universe size travels with
/// the value and is checked at module boundaries.
class SetWord {
  public:
    static constexpr int max_universe = 64;

    SetWord() = default;
    SetWord(std::uint64_t bits, int universe_size);

    static SetWord empty_set(int universe_size) { return SetWord(0, universe_size); }
    static SetWord full_set(int universe_size);
    static SetWord from_elements(std::span<const int> elements, int universe_size);
    static SetWord from_elements(std::initializer_list<int> elements, int universe_size);

    std::uint64_t bits() const { return bits_; }
    int universe_size() const { return n_; }

    int size() const;                         // |A|
    bool empty() const { return bits_ == 0; }
    bool contains(int element) const;
    bool subset_of(const SetWord& other) const;
    std::vector<int> elements() const;

    SetWord union_with(const SetWord& other) const;
    SetWord intersect(const SetWord& other) const;
    SetWord minus(const SetWord& other) const;

    friend bool operator==(const SetWord& a, const SetWord& b) {
        return a.bits_ == b.bits_ && a.n_ == b.n_;
    }

  private:
    std::uint64_t bits_ = 0;
    int n_ = 0;
};

/// Canonical set order: by cardinality, then by bitmask value.
bool set_less(const SetWord& a, const SetWord& b);

/// A family over [n]: a sorted, duplicate-free sequence of SetWords.
class Family {
  public:
    Family() = default;
    explicit Family(int universe_size) : n_(universe_size) {}
    Family(std::vector<SetWord> members, int universe_size);

    int universe_size() const { return n_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const std::vector<SetWord>& members() const { return members_; }

    bool contains(const SetWord& a) const;
    SetWord union_of_members() const;         // ⋃F (∅ for the empty family)

    Family with(const SetWord& a) const;      // F ∪ {A}
    Family without(const SetWord& a) const;   // F ∖ {A}

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    friend bool operator==(const Family& a, const Family& b) {
        return a.n_ == b.n_ && a.members_ == b.members_;
    }

  private:
    std::vector<SetWord> members_;
    int n_ = 0;
};

/// Family order: lexicographic on the sorted member sequences under set_less.
bool family_less(const Family& a, const Family& b);

/// A sorted, duplicate-free sequence of families.
class Collection {
  public:
    Collection() = default;
    explicit Collection(std::vector<Family> families);

    std::size_t size() const { return families_.size(); }
    bool empty() const { return families_.empty(); }
    const std::vector<Family>& families() const { return families_; }
    bool contains(const Family& f) const;

    auto begin() const { return families_.begin(); }
    auto end() const { return families_.end(); }

    friend bool operator==(const Collection& a, const Collection& b) {
        return a.families_ == b.families_;
    }

  private:
    std::vector<Family> families_;
};

/// {A ∪ B : A ∈ F1, B ∈ F2}.
Family sum_fam(const Family& f1, const Family& f2);

/// Minimal union-closed superfamily of F.
Family closure(const Family& f);

/// F ∪ {A} ∪ (F ⊎ {A}) ∪ (Fc ⊎ {A}).  When Fc is union-closed and F is
/// union-closed for Fc, this equals the union-closure of F ∪ {A} for Fc.
Family insert_close_for(const Family& fc, const SetWord& a, const Family& f);

/// insert_close_for with Fc = ∅.
Family insert_close(const SetWord& a, const Family& f);

/// true iff F ⊎ F ⊆ F and F ⊎ Fc ⊆ F.
bool is_union_closed_for(const Family& fc, const Family& f);

/// is_union_closed_for with Fc = ∅.
bool is_union_closed(const Family& f);

/// Number of members of F containing the given element.
int cnt(int element, const Family& f);

/// true iff some element of ⋃F occurs in at least half of F's members.
bool is_frankl(const Family& f);

}  // namespace fc
