#include "kht/oracle/exact.hpp"

#include <numeric>
#include <stdexcept>

namespace kht::oracle::exact {

namespace {

constexpr int kVars = 4;  // z11, z12, z21, z22

Rational factorial_of(const MultiIndex& alpha) {
    Rational f = 1;
    for (int e : alpha)
        for (int k = 2; k <= e; ++k) f *= k;
    return f;
}

int degree_of(const MultiIndex& alpha) {
    return std::accumulate(alpha.begin(), alpha.end(), 0);
}

std::vector<MultiIndex> monomials(int degree) {
    std::vector<MultiIndex> out;
    MultiIndex cur(kVars, 0);
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == kVars - 1) {
            cur[pos] = rem;
            out.push_back(cur);
            return;
        }
        for (int e = rem; e >= 0; --e) {
            cur[pos] = e;
            self(self, pos + 1, rem - e);
        }
    };
    rec(rec, 0, degree);
    return out;
}

void rp_add_scaled(RPoly& p, const RPoly& q, const Rational& c) {
    if (c == 0) return;
    for (const auto& [alpha, v] : q) {
        Rational& slot = p[alpha];
        slot += c * v;
        if (slot == 0) p.erase(alpha);
    }
}

bool rp_zero(const RPoly& p) { return p.empty(); }

/// Solves the square rational system m x = rhs by Gaussian elimination.
std::vector<Rational> solve(std::vector<std::vector<Rational>> m,
                            std::vector<Rational> rhs) {
    const int n = static_cast<int>(m.size());
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (m[row][col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) throw std::runtime_error("exact solve: singular system");
        std::swap(m[col], m[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        const Rational inv = Rational(1) / m[col][col];
        for (int c = col; c < n; ++c) m[col][c] *= inv;
        rhs[col] *= inv;
        for (int row = 0; row < n; ++row) {
            if (row == col || m[row][col] == 0) continue;
            const Rational f = m[row][col];
            for (int c = col; c < n; ++c) m[row][c] -= f * m[col][c];
            rhs[row] -= f * rhs[col];
        }
    }
    return rhs;
}

/// Nullspace basis of the (rows x cols) rational matrix.
std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> m,
                                             int cols) {
    const int rows = static_cast<int>(m.size());
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pr = -1;
        for (int r = row; r < rows; ++r)
            if (m[r][col] != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(m[row], m[pr]);
        const Rational inv = Rational(1) / m[row][col];
        for (int c = col; c < cols; ++c) m[row][c] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Rational f = m[r][col];
            for (int c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free] = 1;
        for (int r = 0; r < static_cast<int>(pivot_col.size()); ++r)
            v[pivot_col[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Fock orthocomplement of det * P_{k-2} inside degree-k polynomials.
std::vector<RPoly> harmonic_basis(int k) {
    const auto monos = monomials(k);
    if (k < 2) {
        std::vector<RPoly> out;
        for (const auto& alpha : monos) out.push_back(RPoly{{alpha, Rational(1)}});
        return out;
    }
    const auto lower = monomials(k - 2);
    const RPoly det = det_poly();
    // Row per lower monomial q: constraint <p, det * z^q>_F = 0.
    std::vector<std::vector<Rational>> m;
    for (const auto& q : lower) {
        RPoly dq = rp_mul(det, RPoly{{q, Rational(1)}});
        std::vector<Rational> row(monos.size(), Rational(0));
        for (std::size_t c = 0; c < monos.size(); ++c) {
            auto it = dq.find(monos[c]);
            if (it != dq.end()) row[c] = it->second * factorial_of(monos[c]);
        }
        m.push_back(std::move(row));
    }
    std::vector<RPoly> out;
    for (const auto& v : nullspace(std::move(m), static_cast<int>(monos.size()))) {
        RPoly p;
        for (std::size_t c = 0; c < monos.size(); ++c)
            if (v[c] != 0) p[monos[c]] = v[c];
        out.push_back(std::move(p));
    }
    return out;
}

RPoly project(const std::vector<RPoly>& basis, const RPoly& q) {
    const int n = static_cast<int>(basis.size());
    std::vector<std::vector<Rational>> gram(n, std::vector<Rational>(n));
    std::vector<Rational> rhs(n);
    for (int u = 0; u < n; ++u) {
        rhs[u] = rp_fock_inner(basis[u], q);
        for (int v = 0; v < n; ++v) gram[u][v] = rp_fock_inner(basis[u], basis[v]);
    }
    const auto coef = solve(std::move(gram), std::move(rhs));
    RPoly out;
    for (int u = 0; u < n; ++u) rp_add_scaled(out, basis[u], coef[u]);
    return out;
}

std::vector<Signature> rank2_signatures(int grade) {
    std::vector<Signature> out;
    for (int s2 = grade / 2; s2 >= 0; --s2) out.emplace_back(std::vector<int>{grade - s2, s2});
    return out;
}

/// M_i* q for q of degree n+1: f = sum_{w,t} (a_w / a_t) proj_w(d/dz_i q_t),
/// which is the unique solution of <f,g>_H = <q, z_i g>_H for all degree-n g.
RPoly weighted_adjoint(const WeightSequence& w, const RPoly& q, int grade_q, int i) {
    RPoly f;
    for (const Signature& t : rank2_signatures(grade_q)) {
        const RPoly qt = project(isotypic_basis(t), q);
        if (rp_zero(qt)) continue;
        const RPoly dqt = rp_derivative(qt, i);
        if (rp_zero(dqt)) continue;
        const Rational inv_at = Rational(1) / w.weight(t);
        for (const Signature& s : rank2_signatures(grade_q - 1)) {
            RPoly part = project(isotypic_basis(s), dqt);
            if (rp_zero(part)) continue;
            rp_add_scaled(f, part, w.weight(s) * inv_at);
        }
    }
    return f;
}

RPoly conical_rational(const Signature& s) {
    RPoly p{{MultiIndex(kVars, 0), Rational(1)}};
    const RPoly z11{{MultiIndex{1, 0, 0, 0}, Rational(1)}};
    for (int e = 0; e < s.part(1) - s.part(2); ++e) p = rp_mul(p, z11);
    for (int e = 0; e < s.part(2); ++e) p = rp_mul(p, det_poly());
    return p;
}

Rational scalar_ratio(const RPoly& image, const RPoly& p) {
    const Rational lambda = rp_fock_inner(image, p) / rp_fock_inner(p, p);
    RPoly resid = image;
    rp_add_scaled(resid, p, -lambda);
    if (!rp_zero(resid))
        throw std::runtime_error("exact oracle: action is not scalar on P_s");
    return lambda;
}

void check_spec(const WeightSequence& w, const Signature& s) {
    const DomainSpec& d = w.domain();
    if (d.kind != DomainKind::TypeI || d.n != 2 || d.m != 2)
        throw std::invalid_argument("exact oracle supports TypeI(2,2) only");
    if (s.rank() != 2 || s.weight() > 3)
        throw std::invalid_argument("exact oracle supports |s| <= 3");
}

}  // namespace

RPoly det_poly() {
    return RPoly{{MultiIndex{1, 0, 0, 1}, Rational(1)},
                 {MultiIndex{0, 1, 1, 0}, Rational(-1)}};
}

Rational rp_fock_inner(const RPoly& p, const RPoly& q) {
    Rational acc = 0;
    for (const auto& [alpha, c] : p) {
        auto it = q.find(alpha);
        if (it != q.end()) acc += c * it->second * factorial_of(alpha);
    }
    return acc;
}

RPoly rp_mul(const RPoly& p, const RPoly& q) {
    RPoly out;
    for (const auto& [a, ca] : p)
        for (const auto& [b, cb] : q) {
            MultiIndex sum(kVars);
            for (int k = 0; k < kVars; ++k) sum[k] = a[k] + b[k];
            Rational& slot = out[sum];
            slot += ca * cb;
            if (slot == 0) out.erase(sum);
        }
    return out;
}

RPoly rp_mult_var(const RPoly& p, int i) {
    RPoly out;
    for (const auto& [alpha, c] : p) {
        MultiIndex beta = alpha;
        beta[i] += 1;
        out[beta] = c;
    }
    return out;
}

RPoly rp_derivative(const RPoly& p, int i) {
    RPoly out;
    for (const auto& [alpha, c] : p) {
        if (alpha[i] == 0) continue;
        MultiIndex beta = alpha;
        beta[i] -= 1;
        out[beta] = c * alpha[i];
    }
    return out;
}

std::vector<RPoly> isotypic_basis(const Signature& s) {
    if (s.rank() != 2) throw std::invalid_argument("exact isotypic_basis: rank 2 only");
    std::vector<RPoly> out;
    RPoly det_pow{{MultiIndex(kVars, 0), Rational(1)}};
    for (int e = 0; e < s.part(2); ++e) det_pow = rp_mul(det_pow, det_poly());
    for (const RPoly& h : harmonic_basis(s.part(1) - s.part(2)))
        out.push_back(rp_mul(det_pow, h));
    return out;
}

Rational exact_delta(const WeightSequence& w, const Signature& s) {
    check_spec(w, s);
    const RPoly p = conical_rational(s);
    RPoly image;
    for (int i = 0; i < kVars; ++i)
        rp_add_scaled(image, weighted_adjoint(w, rp_mult_var(p, i), s.weight() + 1, i),
                      Rational(1));
    return scalar_ratio(image, p);
}

Rational exact_tau(const WeightSequence& w, const Signature& s) {
    check_spec(w, s);
    if (s.is_zero()) return 0;
    const RPoly p = conical_rational(s);
    RPoly image;
    for (int i = 0; i < kVars; ++i)
        rp_add_scaled(image, rp_mult_var(weighted_adjoint(w, p, s.weight(), i), i),
                      Rational(1));
    return scalar_ratio(image, p);
}

}  // namespace kht::oracle::exact
