#include "kht/oracle/polynomial.hpp"

#include <cmath>
#include <stdexcept>

namespace kht::oracle {

Polynomial Polynomial::constant(int nvars, Complex c) {
    Polynomial p(nvars);
    p.add_term(MultiIndex(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int i, Complex c) {
    if (i < 0 || i >= nvars) throw std::out_of_range("variable index");
    Polynomial p(nvars);
    MultiIndex alpha(static_cast<std::size_t>(nvars), 0);
    alpha[static_cast<std::size_t>(i)] = 1;
    p.add_term(alpha, c);
    return p;
}

int Polynomial::degree() const {
    int deg = -1;
    for (const auto& [alpha, c] : terms_) {
        int total = 0;
        for (int e : alpha) total += e;
        deg = std::max(deg, total);
    }
    return deg;
}

void Polynomial::add_term(const MultiIndex& alpha, Complex c) {
    auto [it, inserted] = terms_.try_emplace(alpha, c);
    if (!inserted) {
        it->second += c;
        if (std::abs(it->second) < 1e-300) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    for (const auto& [alpha, c] : other.terms_) add_term(alpha, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    for (const auto& [alpha, c] : other.terms_) add_term(alpha, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(Complex c) {
    if (c == Complex(0, 0)) {
        terms_.clear();
        return *this;
    }
    for (auto& [alpha, coeff] : terms_) coeff *= c;
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    Polynomial out(nvars_);
    MultiIndex merged(static_cast<std::size_t>(nvars_), 0);
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : other.terms_) {
            for (std::size_t k = 0; k < merged.size(); ++k) merged[k] = a[k] + b[k];
            out.add_term(merged, ca * cb);
        }
    return out;
}

Polynomial Polynomial::derivative(int i) const {
    Polynomial out(nvars_);
    std::size_t idx = static_cast<std::size_t>(i);
    for (const auto& [alpha, c] : terms_) {
        if (alpha[idx] == 0) continue;
        MultiIndex beta = alpha;
        beta[idx] -= 1;
        out.add_term(beta, c * static_cast<double>(alpha[idx]));
    }
    return out;
}

Polynomial Polynomial::compose_linear(const Eigen::MatrixXcd& u) const {
    std::vector<Polynomial> forms;
    forms.reserve(static_cast<std::size_t>(nvars_));
    for (int i = 0; i < nvars_; ++i) {
        Polynomial form(nvars_);
        MultiIndex alpha(static_cast<std::size_t>(nvars_), 0);
        for (int j = 0; j < nvars_; ++j) {
            if (u(i, j) == Complex(0, 0)) continue;
            alpha[static_cast<std::size_t>(j)] = 1;
            form.add_term(alpha, u(i, j));
            alpha[static_cast<std::size_t>(j)] = 0;
        }
        forms.push_back(std::move(form));
    }
    Polynomial out(nvars_);
    for (const auto& [alpha, c] : terms_) {
        Polynomial term = Polynomial::constant(nvars_, c);
        for (int i = 0; i < nvars_; ++i)
            for (int e = 0; e < alpha[static_cast<std::size_t>(i)]; ++e)
                term = term * forms[static_cast<std::size_t>(i)];
        out += term;
    }
    return out;
}

void Polynomial::prune(double eps) {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = (std::abs(it->second) <= eps) ? terms_.erase(it) : std::next(it);
}

Polynomial pow(const Polynomial& p, int e) {
    Polynomial out = Polynomial::constant(p.nvars(), Complex(1, 0));
    for (int k = 0; k < e; ++k) out = out * p;
    return out;
}

Complex fock_inner(const Polynomial& p, const Polynomial& q) {
    Complex total(0, 0);
    const auto& qt = q.terms();
    for (const auto& [alpha, c] : p.terms()) {
        auto it = qt.find(alpha);
        if (it == qt.end()) continue;
        double fact = 1.0;
        for (int e : alpha)
            for (int l = 2; l <= e; ++l) fact *= l;
        total += c * std::conj(it->second) * fact;
    }
    return total;
}

}  // namespace kht::oracle
