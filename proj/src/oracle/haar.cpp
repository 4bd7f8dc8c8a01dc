#include "kht/oracle/haar.hpp"

#include <cmath>
#include <stdexcept>

#include "kht/oracle/conical.hpp"

namespace kht::oracle {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

std::mt19937_64 sample_engine(const SeedPair& seed, std::uint64_t index) {
    std::uint64_t state = splitmix64(seed.hi ^ splitmix64(seed.lo + index));
    return std::mt19937_64(state);
}

Eigen::MatrixXcd haar_unitary(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::MatrixXcd g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(i, j) = Complex(re, im);
        }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j) {
        const Complex djj = r(j, j);
        const double mag = std::abs(djj);
        if (mag > 0) q.col(j) *= djj / mag;
    }
    return q;
}

Eigen::MatrixXcd induced_coordinate_map(const DomainSpec& spec,
                                        const Eigen::MatrixXcd& u,
                                        const Eigen::MatrixXcd& v) {
    const auto z = defining_matrix(spec);
    const auto coords = ambient_coordinates(spec);
    const int d = spec.dim;
    const int rows = static_cast<int>(z.size());
    const int cols = static_cast<int>(z[0].size());
    const double sqrt2 = std::sqrt(2.0);

    // w = u z v^H (TypeI) or u z v^T (TypeII/III, with v = u), entrywise
    // linear in z.
    std::vector<std::vector<Polynomial>> w(rows, std::vector<Polynomial>(cols, Polynomial(d)));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            Polynomial acc(d);
            for (int k = 0; k < rows; ++k)
                for (int l = 0; l < cols; ++l) {
                    Complex coef = u(i, k);
                    coef *= (spec.kind == DomainKind::TypeI) ? std::conj(v(j, l)) : v(j, l);
                    if (coef == Complex(0, 0)) continue;
                    Polynomial term = z[k][l];
                    term *= coef;
                    acc += term;
                }
            w[i][j] = acc;
        }

    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (int q = 0; q < d; ++q) {
        Polynomial wq = w[coords[q].row - 1][coords[q].col - 1];
        if (coords[q].scaled) wq *= Complex(sqrt2, 0);
        for (const auto& [alpha, c] : wq.terms()) {
            for (int k = 0; k < d; ++k)
                if (alpha[k] == 1) {
                    m(q, k) = c;
                    break;
                }
        }
    }
    return m;
}

Eigen::MatrixXcd sample_group_element(const DomainSpec& spec, const SeedPair& seed,
                                      std::uint64_t index) {
    if (spec.kind == DomainKind::TypeIV)
        throw std::invalid_argument("sample_group_element: TypeIV unsupported");
    auto rng = sample_engine(seed, index);
    const Eigen::MatrixXcd u = haar_unitary(spec.n, rng);
    const Eigen::MatrixXcd v =
        (spec.kind == DomainKind::TypeI) ? haar_unitary(spec.m, rng) : u;
    return induced_coordinate_map(spec, u, v);
}

}  // namespace kht::oracle
