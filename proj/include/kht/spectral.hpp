#pragma once

#include <stdexcept>

#include "kht/domains.hpp"
#include "kht/rational.hpp"
#include "kht/signatures.hpp"
#include "kht/weights.hpp"

namespace kht {

struct ProfileMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// c_s(j) = prod_{k != j} (s_j - s_k + (a/2)(k-j+1)) / (s_j - s_k + (a/2)(k-j)).
/// Zero exactly when s + eps_j is not a signature, positive otherwise.
Rational c_plain(const Signature& s, int j, const Rational& a);

/// c'_s(j) = prod_{k != j} (s_j - s_k + (a/2)(k-j-1)) / (s_j - s_k + (a/2)(k-j)).
/// Zero exactly when s_j == s_{j+1} for some j < r; positive when s - eps_j is
/// a signature. Note it does NOT vanish when the only obstruction is s_r == 0
/// at j == r: the sum rule sum_j c'_s(j) == r needs these analytic values, and
/// tau() drops such terms by shift validity (their companion factor
/// (a/2)(r-j) + s_j is zero there anyway).
Rational c_prime(const Signature& s, int j, const Rational& a);

/// Scalar by which sum_i M_i M_i* acts on P_s; tau(0) = 0.
Rational tau(const Signature& s, const WeightSequence& w);

/// Scalar by which sum_i M_i* M_i acts on P_s, proved for boundary profile {1}.
Rational delta_case_i(const Signature& s, const WeightSequence& w);
/// Proved for boundary profile {1,k}, 2 <= k <= r.
Rational delta_case_ii(const Signature& s, const WeightSequence& w);
/// Conjectured general formula; agrees with the proved cases on profiles of
/// size <= 2 and is the only source for larger profiles.
Rational delta_conjecture(const Signature& s, const WeightSequence& w);

enum class DeltaSource { CaseI, CaseII, Conjecture };
const char* to_string(DeltaSource source);

struct DeltaValue {
    Rational value;
    DeltaSource source;
    bool conjectural;  // true when only the conjecture covers this signature
};

/// Dispatches on the boundary profile: the proved case formula when one
/// applies, the conjecture (tagged conjectural) otherwise.
DeltaValue delta(const Signature& s, const WeightSequence& w);

/// delta - tau at s = (l,0,...,0) for Bergman weights, returned both as
/// computed from this module's formulas and as the literal expression printed
/// in the source material (the two disagree; see eta comparison outputs).
struct EtaGap {
    Rational derived;
    Rational paper_printed;
};
EtaGap eta_gap(long l, const Rational& nu, const DomainSpec& spec);

/// Symbolic limit of the derived gap as l -> infinity:
/// (r-1)(d/r - a/2)/(nu - a/2).  Zero exactly when r = 1.
Rational eta_limit(const Rational& nu, const DomainSpec& spec);

}  // namespace kht
