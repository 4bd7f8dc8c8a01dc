#include "kht/criteria.hpp"

#include <algorithm>
#include <cmath>

#include "kht/spectral.hpp"

namespace kht {

const char* to_string(Decision d) {
    switch (d) {
        case Decision::Holds: return "holds";
        case Decision::Fails: return "fails";
        case Decision::EvidenceOnly: return "evidence-only";
    }
    return "?";
}

nlohmann::ordered_json Verdict::to_json() const {
    nlohmann::ordered_json j;
    j["criterion"] = criterion;
    j["decision"] = to_string(decision);
    j["truncation"] = truncation;
    if (bound) {
        j["bound"] = *bound;
        if (bound_exact) j["bound_exact"] = *bound_exact;
    } else {
        j["bound"] = nullptr;
    }
    if (witness) {
        j["witness"] = {{"signature", kht::to_string(witness->signature)},
                        {"value", witness->value}};
        if (!witness->value_exact.empty())
            j["witness"]["value_exact"] = witness->value_exact;
    } else {
        j["witness"] = nullptr;
    }
    j["notes"] = notes;
    return j;
}

int Verdict::exit_code() const {
    switch (decision) {
        case Decision::Holds: return 0;
        case Decision::Fails: return 1;
        case Decision::EvidenceOnly: return 2;
    }
    return 2;
}

namespace {

void require_operator_level(const WeightSequence& w) {
    if (w.parametric() && !w.in_continuous_wallach())
        throw std::invalid_argument(
            "nu is not above the continuous Wallach threshold; "
            "operator-level criteria are undefined");
}

/// Boundedness ratio (a_{s-eps_j}/a_s) * ((d/r)_s / (d/r)_{s-eps_j}).
Rational a_ratio(const WeightSequence& w, const Signature& s, int j) {
    const DomainSpec& D = w.domain();
    return w.ratio_down(s, j) * (D.d_over_r() - D.half_a() * (j - 1) + s.part(j) - 1);
}

}  // namespace

Verdict boundedness_sup(const WeightSequence& w, int max_weight) {
    if (max_weight < 1) throw std::invalid_argument("max_weight must be >= 1");
    require_operator_level(w);
    const DomainSpec& D = w.domain();

    Rational sup = 0;
    std::optional<Witness> witness;
    for (const auto& s : enumerate_signatures(D.rank, max_weight)) {
        if (s.is_zero()) continue;
        for (int j = 1; j <= D.rank; ++j) {
            if (!shift_down(s, j)) continue;
            Rational ratio = a_ratio(w, s, j);
            if (!witness || ratio > sup) {
                sup = ratio;
                witness = Witness{s, to_double(ratio), to_fraction_string(ratio)};
            }
        }
    }

    Verdict v;
    v.criterion = "bounded";
    v.truncation = max_weight;
    v.witness = witness;
    if (w.parametric()) {
        Rational eps = w.nu() - D.wallach_edge();
        Rational closed = std::max(Rational(1), Rational(1 + D.b) / eps);
        v.decision = Decision::Holds;
        v.bound = to_double(closed);
        v.bound_exact = to_fraction_string(closed);
        v.notes.push_back("closed-form sup bound max{1,(1+b)/(nu-(a/2)(r-1))} = " +
                          to_fraction_string(closed));
        v.notes.push_back("truncated sup = " + to_fraction_string(sup));
    } else {
        v.decision = Decision::EvidenceOnly;
        v.bound = to_double(sup);
        v.bound_exact = to_fraction_string(sup);
        v.notes.push_back("non-parametric source: sup over |s| <= " +
                          std::to_string(max_weight) + " only");
    }
    return v;
}

Verdict closed_range_inf(const WeightSequence& w, int max_weight) {
    if (max_weight < 1) throw std::invalid_argument("max_weight must be >= 1");
    require_operator_level(w);
    const DomainSpec& D = w.domain();

    std::optional<Rational> inf;
    std::optional<Witness> witness;
    std::vector<Rational> grade_min(static_cast<std::size_t>(max_weight + 1), Rational(-1));
    for (const auto& s : enumerate_signatures(D.rank, max_weight)) {
        if (s.is_zero()) continue;
        Rational sum = 0;
        for (int j = 1; j <= D.rank; ++j)
            if (shift_down(s, j)) sum += a_ratio(w, s, j);
        if (!inf || sum < *inf) {
            inf = sum;
            witness = Witness{s, to_double(sum), to_fraction_string(sum)};
        }
        auto& gm = grade_min[static_cast<std::size_t>(s.weight())];
        if (gm < 0 || sum < gm) gm = sum;
    }

    Verdict v;
    v.criterion = "closed-range";
    v.truncation = max_weight;
    v.witness = witness;
    v.bound = to_double(*inf);
    v.bound_exact = to_fraction_string(*inf);
    if (w.parametric()) {
        Rational eps = w.nu() - D.wallach_edge();
        Rational lower = (eps <= D.b + 1) ? Rational(1) : 1 / eps;
        v.decision = Decision::Holds;
        v.notes.push_back("closed-form lower bound (1 if nu-(a/2)(r-1) <= b+1, else its "
                          "reciprocal) = " + to_fraction_string(lower));
        v.notes.push_back("truncated inf = " + to_fraction_string(*inf));
    } else {
        v.decision = Decision::EvidenceOnly;
        // Trend across the last grades shows whether the inf keeps sinking.
        int mid = std::max(1, max_weight / 2);
        if (grade_min[static_cast<std::size_t>(mid)] >= 0 &&
            grade_min[static_cast<std::size_t>(max_weight)] >= 0)
            v.notes.push_back("grade-min trend: " +
                              fmt15(to_double(grade_min[static_cast<std::size_t>(mid)])) +
                              " at |s|=" + std::to_string(mid) + " -> " +
                              fmt15(to_double(grade_min[static_cast<std::size_t>(max_weight)])) +
                              " at |s|=" + std::to_string(max_weight));
    }
    return v;
}

Verdict essential_normality(const Rational& nu, const DomainSpec& spec) {
    if (nu <= spec.wallach_edge())
        throw std::invalid_argument("nu must exceed the continuous Wallach threshold");
    Rational limit = eta_limit(nu, spec);
    Verdict v;
    v.criterion = "ess-normal";
    v.truncation = 0;
    v.decision = (spec.rank == 1) ? Decision::Holds : Decision::Fails;
    v.bound = to_double(limit);
    v.bound_exact = to_fraction_string(limit);
    v.notes.push_back("limit of the derived eta gap = (r-1)(d/r-a/2)/(nu-a/2) = " +
                      to_fraction_string(limit));
    return v;
}

Verdict hardy_identity_check(const DomainSpec& spec, int max_weight) {
    WeightSequence hardy = WeightSequence::hardy(spec);
    Rational max_dev = 0;
    std::optional<Witness> witness;
    for (const auto& s : enumerate_signatures(spec.rank, max_weight)) {
        Rational dev = abs(delta_conjecture(s, hardy) - spec.rank);
        if (dev > max_dev) {
            max_dev = dev;
            witness = Witness{s, to_double(dev), to_fraction_string(dev)};
        }
    }
    Verdict v;
    v.criterion = "hardy-identity";
    v.truncation = max_weight;
    v.decision = (max_dev == 0) ? Decision::Holds : Decision::Fails;
    v.bound = to_double(max_dev);
    v.bound_exact = to_fraction_string(max_dev);
    v.witness = witness;
    v.notes.push_back("max |delta(s) - r| over |s| <= " + std::to_string(max_weight) +
                      " in exact arithmetic");
    return v;
}

Verdict unitary_equivalence(const WeightSequence& w1, const WeightSequence& w2,
                            int max_weight) {
    if (w1.domain().rank != w2.domain().rank)
        throw std::invalid_argument("weight sequences have different ranks");
    Verdict v;
    v.criterion = "unitary-equiv";
    v.truncation = max_weight;
    if (w1.same_source(w2)) {
        v.decision = Decision::Holds;
        v.notes.push_back("identical weight sources");
        return v;
    }
    for (const auto& s : enumerate_signatures(w1.domain().rank, max_weight)) {
        Rational x = w1.weight(s), y = w2.weight(s);
        if (x != y) {
            v.decision = Decision::Fails;
            v.witness = Witness{s, to_double(x - y),
                                to_fraction_string(x) + " != " + to_fraction_string(y)};
            return v;
        }
    }
    if (w1.parametric() && w2.parametric()) {
        // Equal nu would have matched same_source; equality through the
        // truncation plus equal parameters is exact.
        v.decision = Decision::Holds;
        v.notes.push_back("parametric sources with equal weights");
        return v;
    }
    v.decision = Decision::EvidenceOnly;
    v.notes.push_back("all weights agree through the truncation");
    return v;
}

double similarity_ratio_slope(const Rational& nu1, const Rational& nu2,
                              const DomainSpec& spec, int t_max) {
    double a = to_double(spec.a);
    double n1 = to_double(nu1), n2 = to_double(nu2);
    // Least-squares fit of log(ratio) against log(t) over the upper half of
    // the range, where the Gamma asymptotic t^(nu1-nu2) dominates.
    int t_lo = std::max(2, t_max / 2);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int count = 0;
    for (int t = t_lo; t <= t_max; ++t) {
        std::vector<int> parts(static_cast<std::size_t>(spec.rank), 0);
        parts[0] = t;
        Signature s(std::move(parts));
        double x = std::log(static_cast<double>(t));
        double y = log_pochhammer(n1, s, a) - log_pochhammer(n2, s, a);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        ++count;
    }
    return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

Verdict similarity(const WeightSequence& w1, const WeightSequence& w2, int max_weight,
                   bool trust_envelope) {
    if (w1.domain().rank != w2.domain().rank)
        throw std::invalid_argument("weight sequences have different ranks");
    Verdict v;
    v.criterion = "similar";
    v.truncation = max_weight;

    std::optional<Rational> lo, hi;
    std::optional<Witness> witness;
    for (const auto& s : enumerate_signatures(w1.domain().rank, max_weight)) {
        Rational ratio = w2.weight(s) / w1.weight(s);
        if (!lo || ratio < *lo) lo = ratio;
        if (!hi || ratio > *hi) {
            hi = ratio;
            witness = Witness{s, to_double(ratio), to_fraction_string(ratio)};
        }
    }
    v.witness = witness;
    v.bound = to_double(*hi);
    v.bound_exact = to_fraction_string(*hi);
    v.notes.push_back("ratio envelope [" + to_fraction_string(*lo) + ", " +
                      to_fraction_string(*hi) + "] over |s| <= " + std::to_string(max_weight));

    if (w1.same_source(w2)) {
        v.decision = Decision::Holds;
        v.notes.push_back("identical weight sources");
        return v;
    }
    if (w1.parametric() && w2.parametric()) {
        double slope = similarity_ratio_slope(w2.nu(), w1.nu(), w1.domain(),
                                              std::max(max_weight, 200));
        v.notes.push_back("log-log ratio slope over s=(t,0,...): " + fmt15(slope) +
                          " (Gamma asymptotic predicts nu2-nu1 = " +
                          to_fraction_string(w2.nu() - w1.nu()) + ")");
        v.decision = (w1.nu() == w2.nu()) ? Decision::Holds : Decision::Fails;
        return v;
    }
    if (trust_envelope) {
        v.decision = Decision::Holds;
        v.notes.push_back("bounded envelope upgraded to holds (trust-envelope)");
    } else {
        v.decision = Decision::EvidenceOnly;
    }
    return v;
}

}  // namespace kht
