#include "kht/oracle/operators.hpp"

#include <cmath>
#include <string>

namespace kht::oracle {

namespace {

constexpr int kOracleMaxDim = 10;
constexpr int kOracleMaxGrade = 6;

}  // namespace

Oracle::Oracle(DomainSpec spec, WeightSequence weights, int max_weight, double tol,
               SeedPair seed, Execution exec)
    : spec_(spec),
      weights_(std::move(weights)),
      max_weight_(max_weight),
      tol_(tol),
      seed_(seed) {
    if (spec_.kind == DomainKind::TypeIV)
        throw std::invalid_argument("Oracle: TypeIV has no conical model");
    if (spec_.dim > kOracleMaxDim || max_weight_ > kOracleMaxGrade)
        throw std::invalid_argument("Oracle: domain or grade beyond desk scale");

    for (int n = 0; n <= max_weight_ + 1; ++n) {
        grades_.push_back(GradeBasis::make(spec_.dim, n));
        decomp_.push_back(
            grade_decomposition(spec_, n, grades_[n], 1e-9, seed_, exec));

        GradeFrame frame;
        int total = 0;
        for (const auto& [s, basis] : decomp_[n]) total += basis.dim;
        if (total != grades_[n].size())
            throw ResidualError("incomplete isotypic decomposition at grade " +
                                std::to_string(n));
        frame.fock.resize(grades_[n].size(), total);
        int offset = 0;
        for (const auto& [s, basis] : decomp_[n]) {
            frame.fock.middleCols(offset, basis.dim) = basis.basis;
            const double a_s = to_double(weights_.weight(s));
            for (int c = 0; c < basis.dim; ++c) {
                frame.col_sig.push_back(s);
                frame.col_weight.push_back(a_s);
            }
            frame.span[s] = {offset, basis.dim};
            offset += basis.dim;
        }
        frames_.push_back(std::move(frame));
    }

    for (int n = 0; n <= max_weight_; ++n) {
        const GradeFrame& lo = frames_[n];
        const GradeFrame& hi = frames_[n + 1];
        std::vector<Eigen::MatrixXcd> per_coord(spec_.dim);
        std::vector<double> residuals(spec_.dim, 0.0);
        parallel_for(exec, static_cast<std::size_t>(spec_.dim), [&](std::size_t i) {
            const Eigen::MatrixXcd s_i =
                mult_by_variable(static_cast<int>(i), grades_[n], grades_[n + 1]);
            const Eigen::MatrixXcd raw = hi.fock.adjoint() * (s_i * lo.fock);
            // Expansion residual: z_i * (grade-n vector) must lie in the
            // span of the grade-(n+1) frame.
            residuals[i] = (s_i * lo.fock - hi.fock * raw).cwiseAbs().maxCoeff();
            Eigen::MatrixXcd a = raw;
            for (int c = 0; c < a.cols(); ++c)
                for (int r = 0; r < a.rows(); ++r)
                    a(r, c) *= std::sqrt(lo.col_weight[c] / hi.col_weight[r]);
            per_coord[i] = std::move(a);
        });
        for (double resid : residuals)
            if (resid > 1e-8)
                throw ResidualError("mult expansion residual " + std::to_string(resid) +
                                    " at grade " + std::to_string(n));
        blocks_.push_back(std::move(per_coord));
    }
}

int Oracle::dim(const Signature& s) const { return isotypic(s).dim; }

const IsotypicBasis& Oracle::isotypic(const Signature& s) const {
    return decomp_.at(s.weight()).at(s);
}

const Eigen::MatrixXcd& Oracle::block(int i, int grade) const {
    return blocks_.at(grade).at(i);
}

namespace {

ScalarBlock block_scalar(const Eigen::MatrixXcd& x, int offset, int dim) {
    double scalar = 0.0;
    for (int k = 0; k < dim; ++k) scalar += x(offset + k, offset + k).real();
    scalar /= dim;
    // Deviation over the full rows of this block: the block must be scalar
    // and decoupled from the other same-grade pieces.
    double resid = 0.0;
    for (int k = 0; k < dim; ++k)
        for (int c = 0; c < x.cols(); ++c) {
            Complex v = x(offset + k, c);
            if (c == offset + k) v -= scalar;
            resid = std::max(resid, std::abs(v));
        }
    return {scalar, resid};
}

}  // namespace

ScalarBlock Oracle::measured_tau(const Signature& s) const {
    const int n = s.weight();
    if (n > max_weight_) throw std::invalid_argument("measured_tau: grade beyond truncation");
    const auto [offset, dim] = frames_[n].span.at(s);
    if (n == 0) return {0.0, 0.0};
    Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(frames_[n].fock.cols(),
                                                frames_[n].fock.cols());
    for (int i = 0; i < spec_.dim; ++i) {
        const Eigen::MatrixXcd& a = blocks_[n - 1][i];
        x += a * a.adjoint();
    }
    return block_scalar(x, offset, dim);
}

ScalarBlock Oracle::measured_delta(const Signature& s) const {
    const int n = s.weight();
    if (n > max_weight_) throw std::invalid_argument("measured_delta: grade beyond truncation");
    const auto [offset, dim] = frames_[n].span.at(s);
    Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(frames_[n].fock.cols(),
                                                frames_[n].fock.cols());
    for (int i = 0; i < spec_.dim; ++i) {
        const Eigen::MatrixXcd& a = blocks_[n][i];
        x += a.adjoint() * a;
    }
    return block_scalar(x, offset, dim);
}

Eigen::VectorXcd Oracle::weighted_coords(const Polynomial& p, int grade) const {
    const GradeFrame& frame = frames_.at(grade);
    const Eigen::VectorXcd v = fock_coordinates(p, grades_[grade]);
    Eigen::VectorXcd x = frame.fock.adjoint() * v;
    for (int j = 0; j < x.size(); ++j) x(j) /= std::sqrt(frame.col_weight[j]);
    return x;
}

Polynomial Oracle::from_weighted(const Eigen::VectorXcd& x, int grade) const {
    const GradeFrame& frame = frames_.at(grade);
    Eigen::VectorXcd scaled = x;
    for (int j = 0; j < scaled.size(); ++j) scaled(j) *= std::sqrt(frame.col_weight[j]);
    return from_fock(frame.fock * scaled, grades_[grade]);
}

Polynomial Oracle::adjoint_via_formula(const Polynomial& p, const Signature& s,
                                       int i) const {
    const int n = s.weight();
    if (n == 0) return Polynomial(spec_.dim);
    const Polynomial dp = p.derivative(i);
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(grades_[n - 1].size());
    const Eigen::VectorXcd dv =
        dp.empty() ? Eigen::VectorXcd::Zero(grades_[n - 1].size())
                   : fock_coordinates(dp, grades_[n - 1]);
    for (int j = 1; j <= spec_.rank; ++j) {
        const auto down = shift_down(s, j);
        if (!down) continue;
        const IsotypicBasis& basis = decomp_.at(n - 1).at(*down);
        const double ratio = to_double(weights_.ratio_down(s, j));
        v += ratio * (basis.basis * (basis.basis.adjoint() * dv));
    }
    return from_fock(v, grades_[n - 1]);
}

Polynomial Oracle::adjoint_via_gram(const Polynomial& p, const Signature& s,
                                    int i) const {
    const int n = s.weight();
    if (n == 0) return Polynomial(spec_.dim);
    const Eigen::VectorXcd x = weighted_coords(p, n);
    const Eigen::VectorXcd y = blocks_.at(n - 1).at(i).adjoint() * x;
    return from_weighted(y, n - 1);
}

}  // namespace kht::oracle
