#pragma once

#include <Eigen/Dense>
#include <map>
#include <stdexcept>
#include <vector>

#include "kht/domains.hpp"
#include "kht/oracle/fock.hpp"
#include "kht/oracle/haar.hpp"
#include "kht/parallel.hpp"
#include "kht/signatures.hpp"

namespace kht::oracle {

struct InstabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Orthonormal (Fock) basis of P_s inside the degree-|s| coordinate space.
struct IsotypicBasis {
    Signature s;
    Eigen::MatrixXcd basis;  // gb.size() x dim, orthonormal columns
    int dim = 0;
};

/// Fock-coordinate columns of Delta_s composed with `num_samples` Haar
/// group elements.  Column i depends only on (seed, i), so Serial and
/// Parallel execution produce identical matrices.
Eigen::MatrixXcd orbit_columns(const DomainSpec& spec, const Signature& s,
                               const GradeBasis& gb, int num_samples,
                               const SeedPair& seed, Execution exec);

/// Orbit span + SVD rank cut at tol x sigma_max, with a mandatory stability
/// check against a second, independently derived seed.  Throws
/// InstabilityError when the two measured dimensions disagree.
IsotypicBasis build_isotypic(const DomainSpec& spec, const Signature& s,
                             const GradeBasis& gb, int num_samples, double tol,
                             const SeedPair& seed, Execution exec);

/// All isotypic bases of one grade, keyed by signature in descending-lex
/// order (the natural Signature ordering).
std::map<Signature, IsotypicBasis> grade_decomposition(const DomainSpec& spec, int grade,
                                                       const GradeBasis& gb, double tol,
                                                       const SeedPair& seed, Execution exec);

}  // namespace kht::oracle
