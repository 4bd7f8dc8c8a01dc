#pragma once

#include <json.hpp>
#include <vector>

#include "kht/oracle/operators.hpp"
#include "kht/spectral.hpp"

namespace kht::oracle {

struct SignatureReport {
    Signature s;
    int dim = 0;
    double tau_measured = 0.0;
    double tau_formula = 0.0;
    double delta_measured = 0.0;
    double delta_case = 0.0;         // value from the proved case dispatch
    const char* delta_case_name = "";
    double delta_conjecture = 0.0;
    double max_offscalar_residual = 0.0;
};

struct VerifyReport {
    DomainSpec domain;
    std::string weights;
    SeedPair seed;
    double tol = 0.0;
    std::vector<SignatureReport> per_signature;
    bool passed = false;
    double max_deviation = 0.0;

    nlohmann::ordered_json to_json() const;
};

/// Runs the oracle over every |s| <= max_weight and compares the measured
/// block scalars with the closed forms.  `passed` requires every relative
/// deviation and every off-scalar residual to stay within tol.
VerifyReport verify_run(const DomainSpec& spec, const WeightSequence& w, int max_weight,
                        double tol, const SeedPair& seed, Execution exec);

}  // namespace kht::oracle
