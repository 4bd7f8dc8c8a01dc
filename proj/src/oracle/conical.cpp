#include "kht/oracle/conical.hpp"

#include <cmath>
#include <stdexcept>

namespace kht::oracle {

namespace {

// Determinant of the leading j x j block, Laplace expansion along the first
// column.  Block sizes stay tiny (rank <= 4 in practice).
Polynomial block_det(const std::vector<std::vector<Polynomial>>& z,
                     std::vector<int> rows, std::vector<int> cols, int nvars) {
    if (rows.empty()) return Polynomial::constant(nvars, Complex(1, 0));
    Polynomial det(nvars);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::vector<int> sub_rows;
        for (std::size_t k = 0; k < rows.size(); ++k)
            if (k != i) sub_rows.push_back(rows[k]);
        std::vector<int> sub_cols(cols.begin() + 1, cols.end());
        Polynomial term = z[rows[i]][cols[0]] * block_det(z, sub_rows, sub_cols, nvars);
        term *= Complex((i % 2 == 0) ? 1.0 : -1.0, 0);
        det += term;
    }
    return det;
}

// Pfaffian of the antisymmetric block on `idx`, expansion along the first row.
Polynomial block_pfaffian(const std::vector<std::vector<Polynomial>>& z,
                          std::vector<int> idx, int nvars) {
    if (idx.empty()) return Polynomial::constant(nvars, Complex(1, 0));
    Polynomial pf(nvars);
    for (std::size_t k = 1; k < idx.size(); ++k) {
        std::vector<int> rest;
        for (std::size_t t = 1; t < idx.size(); ++t)
            if (t != k) rest.push_back(idx[t]);
        Polynomial term = z[idx[0]][idx[k]] * block_pfaffian(z, rest, nvars);
        term *= Complex((k % 2 == 1) ? 1.0 : -1.0, 0);
        pf += term;
    }
    return pf;
}

}  // namespace

std::vector<std::vector<Polynomial>> defining_matrix(const DomainSpec& spec) {
    if (spec.kind == DomainKind::TypeIV)
        throw std::invalid_argument("defining_matrix: TypeIV has no matrix model");
    const auto coords = ambient_coordinates(spec);
    const int d = spec.dim;
    const int rows = spec.n;
    const int cols = (spec.kind == DomainKind::TypeI) ? spec.m : spec.n;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

    std::vector<std::vector<Polynomial>> z(
        rows, std::vector<Polynomial>(cols, Polynomial(d)));
    for (int k = 0; k < d; ++k) {
        const auto& c = coords[k];
        const int i = c.row - 1;
        const int j = c.col - 1;
        const Complex scale(c.scaled ? inv_sqrt2 : 1.0, 0);
        switch (spec.kind) {
            case DomainKind::TypeI:
                z[i][j] = Polynomial::variable(d, k, scale);
                break;
            case DomainKind::TypeII:
                z[i][j] = Polynomial::variable(d, k, scale);
                if (i != j) z[j][i] = z[i][j];
                break;
            case DomainKind::TypeIII:
                z[i][j] = Polynomial::variable(d, k, scale);
                z[j][i] = Polynomial::variable(d, k, -scale);
                break;
            case DomainKind::TypeIV:
                break;  // unreachable
        }
    }
    return z;
}

Polynomial conical_minor(const DomainSpec& spec, int j) {
    if (j < 1 || j > spec.rank) throw std::invalid_argument("conical_minor: j out of range");
    const auto z = defining_matrix(spec);
    const int d = spec.dim;
    if (spec.kind == DomainKind::TypeIII) {
        std::vector<int> idx;
        for (int k = 0; k < 2 * j; ++k) idx.push_back(k);
        return block_pfaffian(z, idx, d);
    }
    std::vector<int> idx;
    for (int k = 0; k < j; ++k) idx.push_back(k);
    return block_det(z, idx, idx, d);
}

Polynomial conical_polynomial(const DomainSpec& spec, const Signature& s) {
    if (s.rank() != spec.rank)
        throw std::invalid_argument("conical_polynomial: rank mismatch");
    Polynomial p = Polynomial::constant(spec.dim, Complex(1, 0));
    for (int j = 1; j <= spec.rank; ++j) {
        const int e = s.part(j) - (j < spec.rank ? s.part(j + 1) : 0);
        if (e > 0) p = p * pow(conical_minor(spec, j), e);
    }
    return p;
}

}  // namespace kht::oracle
