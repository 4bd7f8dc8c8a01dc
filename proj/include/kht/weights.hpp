#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

#include "kht/domains.hpp"
#include "kht/rational.hpp"
#include "kht/signatures.hpp"

namespace kht {

struct ZeroFactorError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MissingTableEntryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonPositiveWeightError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Generalized Pochhammer symbol (nu)_s = prod_j (nu - (a/2)(j-1))_{s_j},
/// exact rational.  Throws ZeroFactorError when a product factor vanishes.
Rational pochhammer(const Rational& nu, const Signature& s, const Rational& a);

/// log (nu)_s via lgamma; valid when every nu - (a/2)(j-1) > 0.
double log_pochhammer(double nu, const Signature& s, double a);

enum class WeightKind { Bergman, Hardy, ClassicalBergman, CustomTable, CustomRule };

/// Positive weights a_s with a_0 = 1 defining the kernel
/// K^(a) = sum_s a_s K_s and the norm ||p||^2 = ||p||^2_F / a_s on P_s.
/// Immutable after construction; the rule memo table is internally locked.
class WeightSequence {
public:
    static WeightSequence bergman(const DomainSpec& spec, Rational nu);
    static WeightSequence hardy(const DomainSpec& spec);
    static WeightSequence classical_bergman(const DomainSpec& spec);
    static WeightSequence table(const DomainSpec& spec, std::map<Signature, Rational> values);
    static WeightSequence rule(const DomainSpec& spec, std::string name,
                               std::function<Rational(const Signature&)> fn);

    Rational weight(const Signature& s) const;
    /// a_{s-eps_j} / a_s; requires s - eps_j to be a signature.
    Rational ratio_down(const Signature& s, int j) const;
    /// a_s / a_{s+eps_j}; requires s + eps_j to be a signature.
    Rational ratio_up(const Signature& s, int j) const;

    /// True for the Bergman family (Bergman/Hardy/ClassicalBergman), where
    /// criteria may be decided in closed form.
    bool parametric() const;
    /// The Bergman parameter (d/r for Hardy); parametric sources only.
    const Rational& nu() const;
    bool in_continuous_wallach() const;

    WeightKind kind() const { return kind_; }
    const DomainSpec& domain() const { return domain_; }
    /// CLI-grammar description, e.g. "bergman:3", "hardy", "rule:fock".
    std::string description() const;

    /// Structural identity (same source and parameters), used for the exact
    /// branch of the unitary-equivalence criterion.
    bool same_source(const WeightSequence& other) const;

private:
    WeightSequence(const DomainSpec& spec, WeightKind kind);

    DomainSpec domain_;
    WeightKind kind_;
    Rational nu_;  // Bergman family
    std::map<Signature, Rational> table_;
    std::string rule_name_;
    std::function<Rational(const Signature&)> rule_;
    // Memo shared between copies so a sequence stays cheap to pass by value.
    struct Memo {
        std::mutex lock;
        std::map<Signature, Rational> values;
    };
    std::shared_ptr<Memo> memo_;
};

/// ||p||^2_{H(a)} = ||p||^2_F / a_s.
Rational norm_squared_on_ps(const WeightSequence& w, const Rational& fock_norm_sq,
                            const Signature& s);

/// Parses the CLI grammar: "bergman:3.0", "hardy", "classical-bergman",
/// "table:<csv path>", "rule:<builtin name>".
WeightSequence parse_weights(const DomainSpec& spec, std::string_view text);

/// Named builtin rules available to "rule:<name>":
///   fock        a_s = 1
///   dr-2pow     a_s = (d/r)_s * 2^|s|
///   dr-invfactsq a_s = (d/r)_s / (|s|!)^2
///   dr-factsq   a_s = (d/r)_s * (|s|!)^2
std::function<Rational(const Signature&)> builtin_rule(const DomainSpec& spec,
                                                       std::string_view name);

}  // namespace kht
