#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kht {

/// Non-increasing tuple of non-negative integers indexing the Peter-Weyl
/// pieces P_s.  Context-free value: rank compatibility with a domain is
/// checked at the point of use.
class Signature {
public:
    Signature() = default;
    explicit Signature(std::vector<int> parts);

    /// Returns nullopt instead of throwing when parts are not a signature.
    static std::optional<Signature> try_make(std::vector<int> parts);

    int rank() const { return static_cast<int>(parts_.size()); }
    int weight() const { return weight_; }
    /// 1-based part access, matching the formulas' s_j.
    int part(int j) const { return parts_.at(static_cast<std::size_t>(j - 1)); }
    const std::vector<int>& parts() const { return parts_; }
    bool is_zero() const { return weight_ == 0; }

    bool operator==(const Signature& o) const { return parts_ == o.parts_; }
    auto operator<=>(const Signature& o) const { return parts_ <=> o.parts_; }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// s + eps_j (1-based j); nullopt when the result is not a signature.
std::optional<Signature> shift_up(const Signature& s, int j);
/// s - eps_j; nullopt when the result is not a signature.
std::optional<Signature> shift_down(const Signature& s, int j);

/// All signatures with |s| <= max_weight in graded-lex order
/// (grade first, then lexicographically descending).
std::vector<Signature> enumerate_signatures(int r, int max_weight);
/// Signatures with |s| == weight, lexicographically descending.
std::vector<Signature> signatures_of_weight(int r, int weight);

/// { j : s + eps_j is a signature }.  Always contains 1.
std::vector<int> boundary_profile(const Signature& s);

enum class BoundaryCase { Single, Pair, General };
BoundaryCase classify_boundary(const std::vector<int>& profile);

/// Text form "[s1,s2,...,sr]".
Signature parse_signature(std::string_view text);
std::string to_string(const Signature& s);

}  // namespace kht
