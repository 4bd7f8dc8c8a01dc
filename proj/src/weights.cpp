#include "kht/weights.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace kht {

Rational pochhammer(const Rational& nu, const Signature& s, const Rational& a) {
    Rational product = 1;
    for (int j = 1; j <= s.rank(); ++j) {
        Rational base = nu - (a / 2) * (j - 1);
        for (int l = 1; l <= s.part(j); ++l) {
            Rational factor = base + (l - 1);
            if (factor == 0)
                throw ZeroFactorError("pochhammer factor vanishes at j=" + std::to_string(j) +
                                      ", l=" + std::to_string(l));
            product *= factor;
        }
    }
    return product;
}

double log_pochhammer(double nu, const Signature& s, double a) {
    double total = 0.0;
    for (int j = 1; j <= s.rank(); ++j) {
        double base = nu - 0.5 * a * (j - 1);
        if (s.part(j) > 0)
            total += std::lgamma(base + s.part(j)) - std::lgamma(base);
    }
    return total;
}

WeightSequence::WeightSequence(const DomainSpec& spec, WeightKind kind)
    : domain_(spec), kind_(kind), memo_(std::make_shared<Memo>()) {}

WeightSequence WeightSequence::bergman(const DomainSpec& spec, Rational nu) {
    WeightSequence w(spec, WeightKind::Bergman);
    w.nu_ = std::move(nu);
    return w;
}

WeightSequence WeightSequence::hardy(const DomainSpec& spec) {
    WeightSequence w(spec, WeightKind::Hardy);
    w.nu_ = spec.d_over_r();
    return w;
}

WeightSequence WeightSequence::classical_bergman(const DomainSpec& spec) {
    WeightSequence w(spec, WeightKind::ClassicalBergman);
    w.nu_ = spec.wallach_edge() + spec.d_over_r();
    return w;
}

WeightSequence WeightSequence::table(const DomainSpec& spec,
                                     std::map<Signature, Rational> values) {
    WeightSequence w(spec, WeightKind::CustomTable);
    Signature zero(std::vector<int>(static_cast<std::size_t>(spec.rank), 0));
    auto it = values.find(zero);
    if (it == values.end())
        values.emplace(zero, 1);
    else if (it->second != 1)
        throw NonPositiveWeightError("custom table must have a_0 = 1");
    for (const auto& [s, v] : values)
        if (v <= 0)
            throw NonPositiveWeightError("non-positive table weight at " + to_string(s));
    w.table_ = std::move(values);
    return w;
}

WeightSequence WeightSequence::rule(const DomainSpec& spec, std::string name,
                                    std::function<Rational(const Signature&)> fn) {
    WeightSequence w(spec, WeightKind::CustomRule);
    w.rule_name_ = std::move(name);
    w.rule_ = std::move(fn);
    return w;
}

Rational WeightSequence::weight(const Signature& s) const {
    if (s.rank() != domain_.rank)
        throw std::invalid_argument("signature rank " + std::to_string(s.rank()) +
                                    " does not match domain rank " +
                                    std::to_string(domain_.rank));
    switch (kind_) {
        case WeightKind::Bergman:
        case WeightKind::Hardy:
        case WeightKind::ClassicalBergman:
            return pochhammer(nu_, s, domain_.a);
        case WeightKind::CustomTable: {
            auto it = table_.find(s);
            if (it == table_.end())
                throw MissingTableEntryError("no table weight for " + to_string(s));
            return it->second;
        }
        case WeightKind::CustomRule: {
            std::lock_guard guard(memo_->lock);
            auto it = memo_->values.find(s);
            if (it != memo_->values.end()) return it->second;
            Rational v = rule_(s);
            if (s.is_zero() && v != 1)
                throw NonPositiveWeightError("rule must return a_0 = 1");
            if (v <= 0)
                throw NonPositiveWeightError("rule returned non-positive weight at " +
                                             to_string(s));
            memo_->values.emplace(s, v);
            return v;
        }
    }
    throw std::logic_error("unreachable");
}

Rational WeightSequence::ratio_down(const Signature& s, int j) const {
    auto down = shift_down(s, j);
    if (!down) throw std::invalid_argument("s - eps_j is not a signature");
    if (parametric()) {
        // Telescoped Pochhammer ratio: 1 / (nu - (a/2)(j-1) + s_j - 1).
        Rational factor = nu_ - domain_.half_a() * (j - 1) + s.part(j) - 1;
        if (factor == 0) throw ZeroFactorError("weight ratio factor vanishes");
        return 1 / factor;
    }
    return weight(*down) / weight(s);
}

Rational WeightSequence::ratio_up(const Signature& s, int j) const {
    auto up = shift_up(s, j);
    if (!up) throw std::invalid_argument("s + eps_j is not a signature");
    if (parametric()) {
        Rational factor = nu_ - domain_.half_a() * (j - 1) + s.part(j);
        if (factor == 0) throw ZeroFactorError("weight ratio factor vanishes");
        return 1 / factor;
    }
    return weight(s) / weight(*up);
}

bool WeightSequence::parametric() const {
    return kind_ == WeightKind::Bergman || kind_ == WeightKind::Hardy ||
           kind_ == WeightKind::ClassicalBergman;
}

const Rational& WeightSequence::nu() const {
    if (!parametric()) throw std::logic_error("nu() on a non-parametric weight sequence");
    return nu_;
}

bool WeightSequence::in_continuous_wallach() const {
    return parametric() && nu_ > domain_.wallach_edge();
}

std::string WeightSequence::description() const {
    switch (kind_) {
        case WeightKind::Bergman:
            return "bergman:" + to_fraction_string(nu_);
        case WeightKind::Hardy:
            return "hardy";
        case WeightKind::ClassicalBergman:
            return "classical-bergman";
        case WeightKind::CustomTable:
            return "table";
        case WeightKind::CustomRule:
            return "rule:" + rule_name_;
    }
    return {};
}

bool WeightSequence::same_source(const WeightSequence& other) const {
    if (domain_.rank != other.domain_.rank) return false;
    if (parametric() && other.parametric()) return nu_ == other.nu_;
    if (kind_ != other.kind_) return false;
    if (kind_ == WeightKind::CustomTable) return table_ == other.table_;
    if (kind_ == WeightKind::CustomRule) return rule_name_ == other.rule_name_;
    return false;
}

Rational norm_squared_on_ps(const WeightSequence& w, const Rational& fock_norm_sq,
                            const Signature& s) {
    if (fock_norm_sq <= 0)
        throw std::invalid_argument("Fock norm must be positive");
    return fock_norm_sq / w.weight(s);
}

std::function<Rational(const Signature&)> builtin_rule(const DomainSpec& spec,
                                                       std::string_view name) {
    auto factorial_sq = [](int n) {
        Rational f = 1;
        for (int i = 2; i <= n; ++i) f *= i;
        return f * f;
    };
    if (name == "fock")
        return [](const Signature&) { return Rational(1); };
    if (name == "dr-2pow")
        return [spec](const Signature& s) {
            Rational pow2 = 1;
            for (int i = 0; i < s.weight(); ++i) pow2 *= 2;
            return pochhammer(spec.d_over_r(), s, spec.a) * pow2;
        };
    if (name == "dr-invfactsq")
        return [spec, factorial_sq](const Signature& s) {
            return pochhammer(spec.d_over_r(), s, spec.a) / factorial_sq(s.weight());
        };
    if (name == "dr-factsq")
        return [spec, factorial_sq](const Signature& s) {
            return pochhammer(spec.d_over_r(), s, spec.a) * factorial_sq(s.weight());
        };
    throw std::invalid_argument("unknown builtin rule '" + std::string(name) + "'");
}

namespace {

std::map<Signature, Rational> load_weight_table(const DomainSpec& spec,
                                                const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open weight table '" + path + "'");
    std::map<Signature, Rational> values;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (first) {  // header row: s1..sr,a_s
            first = false;
            if (!cells.empty() && cells[0] == "s1") continue;
        }
        if (static_cast<int>(cells.size()) != spec.rank + 1)
            throw std::runtime_error("weight table row needs " + std::to_string(spec.rank) +
                                     " parts plus a_s: '" + line + "'");
        std::vector<int> parts;
        for (int i = 0; i < spec.rank; ++i) parts.push_back(std::stoi(cells[static_cast<std::size_t>(i)]));
        values.emplace(Signature(std::move(parts)),
                       rational_from_decimal(cells[static_cast<std::size_t>(spec.rank)]));
    }
    return values;
}

}  // namespace

WeightSequence parse_weights(const DomainSpec& spec, std::string_view text) {
    if (text == "hardy") return WeightSequence::hardy(spec);
    if (text == "classical-bergman") return WeightSequence::classical_bergman(spec);
    if (text.starts_with("bergman:"))
        return WeightSequence::bergman(spec, rational_from_decimal(text.substr(8)));
    if (text.starts_with("table:"))
        return WeightSequence::table(spec, load_weight_table(spec, std::string(text.substr(6))));
    if (text.starts_with("rule:")) {
        std::string name(text.substr(5));
        return WeightSequence::rule(spec, name, builtin_rule(spec, name));
    }
    throw std::invalid_argument("unknown weight spec '" + std::string(text) + "'");
}

}  // namespace kht
