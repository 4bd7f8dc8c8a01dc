#include "kht/oracle/fock.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace kht::oracle {

namespace {

void enumerate(int nvars, int pos, int remaining, MultiIndex& cur,
               std::vector<MultiIndex>& out) {
    if (pos == nvars - 1) {
        cur[pos] = remaining;
        out.push_back(cur);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur[pos] = e;
        enumerate(nvars, pos + 1, remaining - e, cur, out);
    }
}

double sqrt_factorial(const MultiIndex& alpha) {
    double lg = 0.0;
    for (int e : alpha) lg += std::lgamma(static_cast<double>(e) + 1.0);
    return std::exp(0.5 * lg);
}

}  // namespace

GradeBasis GradeBasis::make(int nvars, int degree) {
    if (nvars <= 0 || degree < 0) throw std::invalid_argument("GradeBasis: bad parameters");
    GradeBasis gb;
    gb.nvars = nvars;
    gb.degree = degree;
    MultiIndex cur(nvars, 0);
    enumerate(nvars, 0, degree, cur, gb.mono);
    for (int k = 0; k < static_cast<int>(gb.mono.size()); ++k) gb.index[gb.mono[k]] = k;
    return gb;
}

Eigen::VectorXcd fock_coordinates(const Polynomial& p, const GradeBasis& gb) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(gb.size());
    for (const auto& [alpha, c] : p.terms()) {
        int deg = std::accumulate(alpha.begin(), alpha.end(), 0);
        if (deg != gb.degree) throw std::invalid_argument("fock_coordinates: degree mismatch");
        v(gb.index.at(alpha)) = c * sqrt_factorial(alpha);
    }
    return v;
}

Polynomial from_fock(const Eigen::VectorXcd& v, const GradeBasis& gb) {
    if (v.size() != gb.size()) throw std::invalid_argument("from_fock: size mismatch");
    Polynomial p(gb.nvars);
    for (int k = 0; k < gb.size(); ++k) {
        if (v(k) == Complex(0, 0)) continue;
        p.add_term(gb.mono[k], v(k) / sqrt_factorial(gb.mono[k]));
    }
    return p;
}

Eigen::MatrixXcd mult_by_variable(int i, const GradeBasis& from, const GradeBasis& to) {
    if (from.nvars != to.nvars || to.degree != from.degree + 1)
        throw std::invalid_argument("mult_by_variable: incompatible grades");
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(to.size(), from.size());
    for (int j = 0; j < from.size(); ++j) {
        MultiIndex beta = from.mono[j];
        beta[i] += 1;
        m(to.index.at(beta), j) = std::sqrt(static_cast<double>(beta[i]));
    }
    return m;
}

}  // namespace kht::oracle
