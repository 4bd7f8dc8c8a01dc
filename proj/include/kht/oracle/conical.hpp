#pragma once

#include <vector>

#include "kht/domains.hpp"
#include "kht/oracle/polynomial.hpp"
#include "kht/signatures.hpp"

namespace kht::oracle {

/// The defining matrix Z of the domain expressed in the orthonormal ambient
/// coordinates: an n x m (TypeI), symmetric n x n (TypeII) or antisymmetric
/// n x n (TypeIII) matrix of linear polynomials.
std::vector<std::vector<Polynomial>> defining_matrix(const DomainSpec& spec);

/// Delta_j: leading principal j x j minor (TypeI/II) or the Pfaffian of the
/// leading principal 2j x 2j block (TypeIII).  1 <= j <= rank.  TypeIV has
/// no polynomial model here and throws.
Polynomial conical_minor(const DomainSpec& spec, int j);

/// Delta_s = Delta_1^{s_1 - s_2} ... Delta_r^{s_r}, the conical highest
/// weight vector of P_s.
Polynomial conical_polynomial(const DomainSpec& spec, const Signature& s);

}  // namespace kht::oracle
