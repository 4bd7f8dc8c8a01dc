#pragma once

#include <map>
#include <vector>

#include "kht/oracle/polynomial.hpp"
#include "kht/rational.hpp"
#include "kht/signatures.hpp"
#include "kht/weights.hpp"

namespace kht::oracle {

/// Exact-rational gold path, TypeI(2,2) only, grades <= 4.  Isotypic pieces
/// come from the determinant-harmonic decomposition instead of random
/// orbits, so every number here is exact and independently derived.
namespace exact {

using RPoly = std::map<MultiIndex, Rational>;  // 4 variables z11,z12,z21,z22

RPoly det_poly();
Rational rp_fock_inner(const RPoly& p, const RPoly& q);
RPoly rp_mul(const RPoly& p, const RPoly& q);
RPoly rp_mult_var(const RPoly& p, int i);
RPoly rp_derivative(const RPoly& p, int i);

/// Exact basis of P_(s1,s2): det^{s2} times a basis of the harmonic space
/// H_{s1-s2} (the Fock orthocomplement of det * P_{k-2} in degree k).
std::vector<RPoly> isotypic_basis(const Signature& s);

/// Scalar of sum_i M_i* M_i on P_s, measured by direct Hilbert-space
/// algebra from the weight sequence; throws if the action is not exactly
/// scalar on the conical vector.
Rational exact_delta(const WeightSequence& w, const Signature& s);

/// Scalar of sum_i M_i M_i* on P_s.
Rational exact_tau(const WeightSequence& w, const Signature& s);

}  // namespace exact

}  // namespace kht::oracle
