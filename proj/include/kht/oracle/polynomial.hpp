#pragma once

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <vector>

namespace kht::oracle {

using Complex = std::complex<double>;
/// Exponent multi-index over the d orthonormal coordinates.
using MultiIndex = std::vector<int>;

/// Finitely supported exponent -> coefficient map.  Zero coefficients are
/// pruned on the fly (below a fixed 1e-300 magnitude floor only, so genuine
/// cancellation must be cleaned by prune()).
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial constant(int nvars, Complex c);
    static Polynomial variable(int nvars, int i, Complex c = Complex(1, 0));

    int nvars() const { return nvars_; }
    const std::map<MultiIndex, Complex>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    int degree() const;

    void add_term(const MultiIndex& alpha, Complex c);
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(Complex c);
    Polynomial operator*(const Polynomial& other) const;

    Polynomial derivative(int i) const;
    /// p(Uz): substitutes variable i by the linear form sum_j U(i,j) z_j.
    Polynomial compose_linear(const Eigen::MatrixXcd& u) const;
    /// Drops coefficients with |c| <= eps.
    void prune(double eps = 0.0);

private:
    int nvars_ = 0;
    std::map<MultiIndex, Complex> terms_;
};

Polynomial pow(const Polynomial& p, int e);

/// Fischer-Fock inner product: sum_alpha p_alpha conj(q_alpha) alpha!.
Complex fock_inner(const Polynomial& p, const Polynomial& q);

}  // namespace kht::oracle
