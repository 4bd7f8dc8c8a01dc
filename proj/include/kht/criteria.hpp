#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kht/domains.hpp"
#include "kht/rational.hpp"
#include "kht/signatures.hpp"
#include "kht/weights.hpp"

namespace kht {

enum class Decision { Holds, Fails, EvidenceOnly };
const char* to_string(Decision d);

struct Witness {
    Signature signature;
    double value = 0.0;
    std::string value_exact;  // num/den form when available
};

/// Outcome of one decision procedure.  EvidenceOnly verdicts always carry the
/// truncation that was examined; Holds/Fails carry a closed-form note or a
/// witness.
struct Verdict {
    std::string criterion;
    Decision decision = Decision::EvidenceOnly;
    int truncation = -1;
    std::optional<double> bound;
    std::optional<std::string> bound_exact;
    std::optional<Witness> witness;
    std::vector<std::string> notes;

    nlohmann::ordered_json to_json() const;
    int exit_code() const;  // 0 Holds, 1 Fails, 2 EvidenceOnly
};

/// Theorem 3.4 / Corollary 3.5: sup of the boundedness ratios over |s| <=
/// max_weight; closed-form Holds for Bergman-family weights in the continuous
/// Wallach range, EvidenceOnly for custom sources.
Verdict boundedness_sup(const WeightSequence& w, int max_weight);

/// Theorem 3.6 / Corollary 3.7: inf over s != 0 of the summed ratios.
Verdict closed_range_inf(const WeightSequence& w, int max_weight);

/// Corollary 4.4: essential normality holds iff r = 1; attaches the symbolic
/// limit of the derived eta gap.
Verdict essential_normality(const Rational& nu, const DomainSpec& spec);

/// Theorem 4.1: with Hardy weights, delta equals r exactly on every P_s.
Verdict hardy_identity_check(const DomainSpec& spec, int max_weight);

/// Theorem 5.1: unitary equivalence iff a_s = b_s for all s.
Verdict unitary_equivalence(const WeightSequence& w1, const WeightSequence& w2,
                            int max_weight);

/// Theorem 5.5(v) / Corollary 5.6: similarity iff the weight ratio is bounded
/// above and below.  trust_envelope upgrades a bounded EvidenceOnly envelope
/// to Holds for rule-based sources (user's explicit opt-in).
Verdict similarity(const WeightSequence& w1, const WeightSequence& w2, int max_weight,
                   bool trust_envelope = false);

/// Log-log slope of (nu1)_t/(nu2)_t over s = (t,0,...,0), t <= t_max;
/// approaches nu1 - nu2 (Corollary 5.6's Gamma asymptotic).
double similarity_ratio_slope(const Rational& nu1, const Rational& nu2,
                              const DomainSpec& spec, int t_max);

}  // namespace kht
