#include "kht/spectral.hpp"

namespace kht {

Rational c_plain(const Signature& s, int j, const Rational& a) {
    Rational half = a / 2;
    Rational product = 1;
    for (int k = 1; k <= s.rank(); ++k) {
        if (k == j) continue;
        Rational diff = s.part(j) - s.part(k);
        product *= (diff + half * (k - j + 1)) / (diff + half * (k - j));
    }
    return product;
}

Rational c_prime(const Signature& s, int j, const Rational& a) {
    Rational half = a / 2;
    Rational product = 1;
    for (int k = 1; k <= s.rank(); ++k) {
        if (k == j) continue;
        Rational diff = s.part(j) - s.part(k);
        product *= (diff + half * (k - j - 1)) / (diff + half * (k - j));
    }
    return product;
}

Rational tau(const Signature& s, const WeightSequence& w) {
    if (s.is_zero()) return 0;
    const DomainSpec& D = w.domain();
    const int r = D.rank;
    Rational total = 0;
    for (int j = 1; j <= r; ++j) {
        if (!shift_down(s, j)) continue;  // c'_s(j) vanishes
        Rational poch_ratio = D.d_over_r() - D.half_a() * (j - 1) + s.part(j) - 1;
        Rational mid_num = D.half_a() * (r - j) + s.part(j);
        Rational mid = mid_num / (D.b + mid_num);
        total += w.ratio_down(s, j) * poch_ratio * mid * c_prime(s, j, D.a);
    }
    return total;
}

Rational delta_case_i(const Signature& s, const WeightSequence& w) {
    auto profile = boundary_profile(s);
    if (classify_boundary(profile) != BoundaryCase::Single)
        throw ProfileMismatchError("boundary profile of " + to_string(s) + " is not {1}");
    const DomainSpec& D = w.domain();
    return w.ratio_up(s, 1) * D.rank * (D.d_over_r() + s.part(1));
}

Rational delta_case_ii(const Signature& s, const WeightSequence& w) {
    auto profile = boundary_profile(s);
    if (classify_boundary(profile) != BoundaryCase::Pair)
        throw ProfileMismatchError("boundary profile of " + to_string(s) + " is not {1,k}");
    const DomainSpec& D = w.domain();
    const int r = D.rank;
    const int k = profile[1];
    Rational gap = s.part(1) - s.part(k);
    Rational den = gap + D.half_a() * (k - 1);
    Rational term1 =
        w.ratio_up(s, 1) * (k - 1) * (D.d_over_r() + s.part(1)) * (gap + D.a * r / 2) / den;
    Rational term2 = w.ratio_up(s, k) * (r - k + 1) *
                     (D.d_over_r() - D.half_a() * (k - 1) + s.part(k)) * gap / den;
    return term1 + term2;
}

Rational delta_conjecture(const Signature& s, const WeightSequence& w) {
    const DomainSpec& D = w.domain();
    Rational total = 0;
    for (int j = 1; j <= D.rank; ++j) {
        if (!shift_up(s, j)) continue;  // c_s(j) vanishes
        Rational poch_ratio = D.d_over_r() - D.half_a() * (j - 1) + s.part(j);
        total += w.ratio_up(s, j) * poch_ratio * c_plain(s, j, D.a);
    }
    return total;
}

const char* to_string(DeltaSource source) {
    switch (source) {
        case DeltaSource::CaseI: return "case-i";
        case DeltaSource::CaseII: return "case-ii";
        case DeltaSource::Conjecture: return "conjecture";
    }
    return "?";
}

DeltaValue delta(const Signature& s, const WeightSequence& w) {
    switch (classify_boundary(boundary_profile(s))) {
        case BoundaryCase::Single:
            return {delta_case_i(s, w), DeltaSource::CaseI, false};
        case BoundaryCase::Pair:
            return {delta_case_ii(s, w), DeltaSource::CaseII, false};
        case BoundaryCase::General:
            return {delta_conjecture(s, w), DeltaSource::Conjecture, true};
    }
    throw std::logic_error("unreachable");
}

EtaGap eta_gap(long l, const Rational& nu, const DomainSpec& spec) {
    std::vector<int> parts(static_cast<std::size_t>(spec.rank), 0);
    parts[0] = static_cast<int>(l);
    Signature s(std::move(parts));
    WeightSequence w = WeightSequence::bergman(spec, nu);
    EtaGap gap;
    gap.derived = delta(s, w).value - tau(s, w);

    const int r = spec.rank;
    const Rational dr = spec.d_over_r();
    const Rational half = spec.half_a();
    // Literal printed expression, kept verbatim so the discrepancy with the
    // derived gap stays observable.
    Rational first = (dr + l) * (l + spec.a * r / 2) / ((nu + l) * (l + spec.a * r / 2));
    Rational second = Rational(l) * (r - 1) * (dr - half) / ((nu - half) * (l + half));
    Rational third = (l == 0) ? Rational(0) : Rational(l) / (nu + l - 1);
    gap.paper_printed = first + second - third;
    return gap;
}

Rational eta_limit(const Rational& nu, const DomainSpec& spec) {
    return Rational(spec.rank - 1) * (spec.d_over_r() - spec.half_a()) /
           (nu - spec.half_a());
}

}  // namespace kht
