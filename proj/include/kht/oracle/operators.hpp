#pragma once

#include <Eigen/Dense>
#include <map>
#include <vector>

#include "kht/oracle/isotypic.hpp"
#include "kht/oracle/polynomial.hpp"
#include "kht/weights.hpp"

namespace kht::oracle {

struct ResidualError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonScalarBlockError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Measured action of a self-adjoint combination on one P_s block: the
/// scalar plus the largest deviation from scalar (including coupling into
/// other same-grade blocks, which must vanish by Schur).
struct ScalarBlock {
    double scalar = 0.0;
    double offscalar_residual = 0.0;
};

/// Brute-force model of the tuple (M_1,...,M_d) on the weighted space,
/// truncated at max_weight.  Builds isotypic bases for all grades up to
/// max_weight + 1 and the per-coordinate blocks between consecutive grades
/// in the weighted orthonormal bases.
class Oracle {
public:
    Oracle(DomainSpec spec, WeightSequence weights, int max_weight, double tol,
           SeedPair seed, Execution exec);

    const DomainSpec& domain() const { return spec_; }
    const WeightSequence& weights() const { return weights_; }
    int max_weight() const { return max_weight_; }
    const SeedPair& seed() const { return seed_; }

    int dim(const Signature& s) const;
    const IsotypicBasis& isotypic(const Signature& s) const;

    /// Block of M_i from the grade-n weighted ONB to grade n+1.
    const Eigen::MatrixXcd& block(int i, int grade) const;

    /// Scalar of sum_i A_i A_i^H on P_s (Lemma: tau).  |s| <= max_weight.
    ScalarBlock measured_tau(const Signature& s) const;
    /// Scalar of sum_i A_i^H A_i on P_s (delta).  |s| <= max_weight.
    ScalarBlock measured_delta(const Signature& s) const;

    /// M_i* p for p in P_s via the ratio formula: sum_j (a_{s-e_j}/a_s)
    /// times the projection of dp/dz_i onto P_{s-e_j}.
    Polynomial adjoint_via_formula(const Polynomial& p, const Signature& s, int i) const;
    /// M_i* p computed from the assembled blocks (the Gram-based route).
    Polynomial adjoint_via_gram(const Polynomial& p, const Signature& s, int i) const;

    const GradeBasis& grade_basis(int n) const { return grades_.at(n); }

private:
    struct GradeFrame {
        Eigen::MatrixXcd fock;             // concatenated isotypic columns
        std::vector<Signature> col_sig;    // signature of each column
        std::vector<double> col_weight;    // a_s per column
        std::map<Signature, std::pair<int, int>> span;  // s -> [offset, dim)
    };

    Eigen::VectorXcd weighted_coords(const Polynomial& p, int grade) const;
    Polynomial from_weighted(const Eigen::VectorXcd& x, int grade) const;

    DomainSpec spec_;
    WeightSequence weights_;
    int max_weight_;
    double tol_;
    SeedPair seed_;
    std::vector<GradeBasis> grades_;
    std::vector<std::map<Signature, IsotypicBasis>> decomp_;
    std::vector<GradeFrame> frames_;
    // blocks_[n][i]: grade n -> n+1, for n <= max_weight.
    std::vector<std::vector<Eigen::MatrixXcd>> blocks_;
};

}  // namespace kht::oracle
