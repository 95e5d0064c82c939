#pragma once

// FC-status decision for arbitrary families, with machine-checkable
// certificates for both outcomes.
//
// The decision procedure alternates two phases: an exact LP builds a
// candidate weight function consistent with all counterexample families seen
// so far, and the negative-share search either accepts the weight (FC) or
// produces a new counterexample family.  When the LP becomes infeasible the
// dual system yields the nonFC witness coefficients.

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "fc/family.hpp"
#include "fc/weights.hpp"

namespace fc {

/// Thrown when a configured resource cap is exhausted.
struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Witness that `family` is FC: a weight function on ⋃family under which no
/// union-closed extension has negative share.
struct FCCertificate {
    Family family;
    WeightFn weight;
};

/// Witness that `family` (union-closed) is nonFC: extension families F_i and
/// coefficients c_i making every element's weighted occurrence count deficit
/// strictly negative.
struct NonFCCertificate {
    Family family;
    std::vector<std::pair<Family, std::uint64_t>> witnesses;
};

class FCStatus {
  public:
    static FCStatus make_fc(FCCertificate cert) { return FCStatus(std::move(cert)); }
    static FCStatus make_nonfc(NonFCCertificate cert) { return FCStatus(std::move(cert)); }

    bool is_fc() const { return std::holds_alternative<FCCertificate>(v_); }
    const FCCertificate& fc_certificate() const { return std::get<FCCertificate>(v_); }
    const NonFCCertificate& nonfc_certificate() const { return std::get<NonFCCertificate>(v_); }

  private:
    explicit FCStatus(FCCertificate c) : v_(std::move(c)) {}
    explicit FCStatus(NonFCCertificate c) : v_(std::move(c)) {}
    std::variant<FCCertificate, NonFCCertificate> v_;
};

struct ClassifyOptions {
    std::uint64_t max_iterations = 10000;
};

/// Decides the FC status of an arbitrary family.  The returned certificate
/// always passes its verifier.
FCStatus classify(const Family& fc, const ClassifyOptions& options = {});

/// true iff the weight is a weight function on ⋃family and the negative-share
/// search comes up empty.
bool verify_fc(const FCCertificate& cert);

/// Direct check of the three nonFC-witness conditions plus union-closedness
/// of the certified family; no search involved.
bool verify_nonfc(const NonFCCertificate& cert);

/// Builds the explicit union-closed counterexample family over an extended
/// universe from a verified nonFC certificate: the certified family, one
/// punctured block per repeated witness, and a full block over the fresh
/// elements.  Throws std::overflow_error when the extended universe does not
/// fit a machine word.
Family expand_counterexample(const NonFCCertificate& cert, int d);

/// Smallest d for which expand_counterexample yields a family where every
/// element of ⋃family is non-abundant.
int find_sufficient_d(const NonFCCertificate& cert);

/// F^d is union-closed, contains Fc, and every element of ⋃Fc occurs in
/// strictly fewer than half of its members.
bool check_counterexample(const Family& fc, const Family& fd);

}  // namespace fc
