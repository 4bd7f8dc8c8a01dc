#pragma once

#include <Eigen/Dense>
#include <map>
#include <vector>

#include "kht/oracle/polynomial.hpp"

namespace kht::oracle {

/// Fock-orthonormal monomial frame {z^alpha / sqrt(alpha!) : |alpha| = n}
/// for fixed degree and variable count, in a deterministic order.
struct GradeBasis {
    int nvars = 0;
    int degree = 0;
    std::vector<MultiIndex> mono;
    std::map<MultiIndex, int> index;

    static GradeBasis make(int nvars, int degree);
    int size() const { return static_cast<int>(mono.size()); }
};

/// Coordinates of a degree-homogeneous polynomial in the Fock-orthonormal
/// frame (coefficient times sqrt(alpha!)).  Terms of other degrees are
/// rejected.
Eigen::VectorXcd fock_coordinates(const Polynomial& p, const GradeBasis& gb);

Polynomial from_fock(const Eigen::VectorXcd& v, const GradeBasis& gb);

/// Multiplication by z_i as a matrix from the degree-n frame to the
/// degree-(n+1) frame; entries sqrt(alpha_i + 1).  Its adjoint is d/dz_i.
Eigen::MatrixXcd mult_by_variable(int i, const GradeBasis& from, const GradeBasis& to);

}  // namespace kht::oracle
