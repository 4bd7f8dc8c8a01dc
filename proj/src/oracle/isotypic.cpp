#include "kht/oracle/isotypic.hpp"

#include <string>

#include "kht/oracle/conical.hpp"

namespace kht::oracle {

Eigen::MatrixXcd orbit_columns(const DomainSpec& spec, const Signature& s,
                               const GradeBasis& gb, int num_samples,
                               const SeedPair& seed, Execution exec) {
    const Polynomial delta_s = conical_polynomial(spec, s);
    Eigen::MatrixXcd cols(gb.size(), num_samples);
    parallel_for(exec, static_cast<std::size_t>(num_samples), [&](std::size_t i) {
        const Eigen::MatrixXcd k = sample_group_element(spec, seed, i);
        Polynomial rotated = delta_s.compose_linear(k);
        rotated.prune(1e-14);
        cols.col(static_cast<Eigen::Index>(i)) = fock_coordinates(rotated, gb);
    });
    return cols;
}

namespace {

std::pair<Eigen::MatrixXcd, int> rank_cut(const Eigen::MatrixXcd& cols, double tol) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(cols, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    const double cutoff = tol * sv(0);
    int rank = 0;
    while (rank < sv.size() && sv(rank) > cutoff) ++rank;
    return {svd.matrixU().leftCols(rank), rank};
}

}  // namespace

IsotypicBasis build_isotypic(const DomainSpec& spec, const Signature& s,
                             const GradeBasis& gb, int num_samples, double tol,
                             const SeedPair& seed, Execution exec) {
    if (s.weight() != gb.degree)
        throw std::invalid_argument("build_isotypic: grade/signature mismatch");
    auto [basis, dim] = rank_cut(orbit_columns(spec, s, gb, num_samples, seed, exec), tol);

    // The measured rank is the source of truth; demand it is reproducible
    // from a disjoint random stream before trusting it.
    const SeedPair check{seed.hi + 0x517cc1b727220a95ULL, seed.lo};
    auto [basis2, dim2] =
        rank_cut(orbit_columns(spec, s, gb, num_samples, check, exec), tol);
    if (dim != dim2)
        throw InstabilityError("isotypic dimension unstable at s=" + to_string(s) + ": " +
                               std::to_string(dim) + " vs " + std::to_string(dim2));
    (void)basis2;
    return IsotypicBasis{s, std::move(basis), dim};
}

std::map<Signature, IsotypicBasis> grade_decomposition(const DomainSpec& spec, int grade,
                                                       const GradeBasis& gb, double tol,
                                                       const SeedPair& seed, Execution exec) {
    std::map<Signature, IsotypicBasis> out;
    const int num_samples = 2 * gb.size();
    for (const Signature& s : signatures_of_weight(spec.rank, grade))
        out.emplace(s, build_isotypic(spec, s, gb, num_samples, tol, seed, exec));
    return out;
}

}  // namespace kht::oracle
