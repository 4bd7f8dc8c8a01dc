#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>

#include "kht/domains.hpp"

namespace kht::oracle {

/// Seed material for a fully reproducible oracle run.  Every sampled group
/// element is a pure function of (pair, index), so a run is deterministic
/// regardless of how samples are scheduled across threads.
struct SeedPair {
    std::uint64_t hi = 0;
    std::uint64_t lo = 1;

    bool operator==(const SeedPair&) const = default;
};

/// Deterministically derived engine for sample `index` of a run.
std::mt19937_64 sample_engine(const SeedPair& seed, std::uint64_t index);

/// Haar-distributed n x n unitary: QR of a complex Ginibre matrix with the
/// R diagonal phase-normalized.
Eigen::MatrixXcd haar_unitary(int n, std::mt19937_64& rng);

/// The d x d matrix of the K-action z -> u z v* (TypeI) or z -> u z u^t
/// (TypeII/III) on the orthonormal ambient coordinates.  Unitary on C^d.
Eigen::MatrixXcd induced_coordinate_map(const DomainSpec& spec,
                                        const Eigen::MatrixXcd& u,
                                        const Eigen::MatrixXcd& v);

/// Haar sample of the induced action, derived from (seed, index).
Eigen::MatrixXcd sample_group_element(const DomainSpec& spec, const SeedPair& seed,
                                      std::uint64_t index);

}  // namespace kht::oracle
