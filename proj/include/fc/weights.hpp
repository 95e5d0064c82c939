#pragma once

// Weight functions, set/family weights and shares, the precomputed share
// lookup table used by the negative-share search, and the hypercube
// machinery (hyper-shares and projections).
//
// Weights are naturals and shares are signed integers; all accumulation is
// overflow-checked and throws rather than wrapping.

#include <cstdint>
#include <vector>

#include "fc/family.hpp"

namespace fc {

/// Nonnegative integer weight per element of [n].
class WeightFn {
  public:
    WeightFn() = default;
    explicit WeightFn(std::vector<std::uint64_t> weights);

    int universe_size() const { return static_cast<int>(weights_.size()); }
    std::uint64_t operator[](int element) const { return weights_[static_cast<std::size_t>(element)]; }
    const std::vector<std::uint64_t>& weights() const { return weights_; }

    friend bool operator==(const WeightFn& a, const WeightFn& b) {
        return a.weights_ == b.weights_;
    }

  private:
    std::vector<std::uint64_t> weights_;
};

/// true iff some element of the domain has positive weight.
bool is_weight_fn_on(const WeightFn& w, const SetWord& domain);

/// Σ_{a ∈ A} w(a).
std::uint64_t set_weight(const WeightFn& w, const SetWord& a);

/// Σ_{A ∈ F} set_weight(w, A).
std::uint64_t family_weight(const WeightFn& w, const Family& f);

/// 2·w(A) − w(X).  Requires A ⊆ X.
std::int64_t set_share(const WeightFn& w, const SetWord& a, const SetWord& x);

/// Σ_{A ∈ F} set_share(w, A, X).
std::int64_t family_share(const WeightFn& w, const Family& f, const SetWord& x);

/// O(1) share lookup for every subset of the universe, indexed by bitmask.
/// Entry A holds 2·w(A ∩ X) − w(X).
class ShareTable {
  public:
    ShareTable(std::vector<std::int64_t> shares, SetWord domain);

    std::int64_t operator[](std::uint64_t set_bits) const { return shares_[set_bits]; }
    std::int64_t at(const SetWord& a) const { return shares_[a.bits()]; }
    const SetWord& domain() const { return domain_; }

  private:
    std::vector<std::int64_t> shares_;
    SetWord domain_;
};

ShareTable build_share_table(const WeightFn& w, const SetWord& x);

/// hc(K, S) = {A : K ⊆ A ⊆ K ∪ S}.  Requires K ∩ S = ∅.
Family hypercube(const SetWord& k, const SetWord& s);

/// Σ_{A ∈ hc(K,S) ∩ F} set_share(w, A, X).  Requires K ∩ S = ∅.
std::int64_t hyper_share(const SetWord& k, const SetWord& s, const Family& f,
                         const WeightFn& w, const SetWord& x);

/// {A − K : A ∈ hc(K,S) ∩ F}.  Requires K ∩ S = ∅.
Family project(const SetWord& k, const SetWord& s, const Family& f);

}  // namespace fc
