#include "kht/oracle/report.hpp"

#include <algorithm>
#include <cmath>

namespace kht::oracle {

namespace {

double rel_dev(double measured, double expected) {
    const double scale = std::max(1.0, std::abs(expected));
    return std::abs(measured - expected) / scale;
}

}  // namespace

VerifyReport verify_run(const DomainSpec& spec, const WeightSequence& w, int max_weight,
                        double tol, const SeedPair& seed, Execution exec) {
    Oracle oracle(spec, w, max_weight, tol, seed, exec);
    VerifyReport report;
    report.domain = spec;
    report.weights = w.description();
    report.seed = seed;
    report.tol = tol;

    double worst = 0.0;
    for (const Signature& s : enumerate_signatures(spec.rank, max_weight)) {
        SignatureReport row;
        row.s = s;
        row.dim = oracle.dim(s);
        const ScalarBlock mt = oracle.measured_tau(s);
        const ScalarBlock md = oracle.measured_delta(s);
        row.tau_measured = mt.scalar;
        row.delta_measured = md.scalar;
        row.max_offscalar_residual = std::max(mt.offscalar_residual, md.offscalar_residual);
        row.tau_formula = to_double(tau(s, w));
        const DeltaValue dv = delta(s, w);
        row.delta_case = to_double(dv.value);
        row.delta_case_name = to_string(dv.source);
        row.delta_conjecture = to_double(delta_conjecture(s, w));

        worst = std::max(worst, rel_dev(row.tau_measured, row.tau_formula));
        worst = std::max(worst, rel_dev(row.delta_measured, row.delta_conjecture));
        worst = std::max(worst, row.max_offscalar_residual);
        report.per_signature.push_back(std::move(row));
    }
    report.max_deviation = worst;
    report.passed = worst <= tol;
    return report;
}

nlohmann::ordered_json VerifyReport::to_json() const {
    nlohmann::ordered_json j;
    j["domain"] = kht::to_string(domain);
    j["weights"] = weights;
    j["seed"] = {seed.hi, seed.lo};
    j["tol"] = fmt15(tol);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : per_signature) {
        nlohmann::ordered_json r;
        r["s"] = row.s.parts();
        r["dim"] = row.dim;
        r["tau_measured"] = fmt15(row.tau_measured);
        r["tau_formula"] = fmt15(row.tau_formula);
        r["delta_measured"] = fmt15(row.delta_measured);
        r["delta_case"] = row.delta_case_name;
        r["delta_case_value"] = fmt15(row.delta_case);
        r["delta_conjecture"] = fmt15(row.delta_conjecture);
        r["max_offscalar_residual"] = fmt15(row.max_offscalar_residual);
        rows.push_back(std::move(r));
    }
    j["per_signature"] = std::move(rows);
    j["max_deviation"] = fmt15(max_deviation);
    j["passed"] = passed;
    return j;
}

}  // namespace kht::oracle
