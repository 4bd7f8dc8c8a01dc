#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kht/rational.hpp"

namespace kht {

enum class DomainKind { TypeI, TypeII, TypeIII, TypeIV };

/// An irreducible classical Cartan domain with its numerical invariants
/// (r, a, b, d).  Immutable value type; d = r + (a/2)r(r-1) + rb holds
/// exactly for every constructed instance.
struct DomainSpec {
    DomainKind kind = DomainKind::TypeI;
    int n = 0;       // TypeI(n,m), TypeII(n), TypeIII(n); unused for TypeIV
    int m = 0;       // TypeI only
    int rank = 0;    // r
    Rational a;      // characteristic multiplicity (half-integer arithmetic for TypeII)
    int b = 0;       // characteristic multiplicity
    int dim = 0;     // complex dimension d

    Rational half_a() const { return a / 2; }
    Rational d_over_r() const { return Rational(dim) / rank; }
    /// Edge of the continuous Wallach range, (a/2)(r-1).
    Rational wallach_edge() const { return half_a() * (rank - 1); }

    bool operator==(const DomainSpec&) const = default;
};

DomainSpec make_type_i(int n, int m);
DomainSpec make_type_ii(int n);
DomainSpec make_type_iii(int n);
DomainSpec make_type_iv(int d);

/// Parses the compact grammar "I:2,2", "II:3", "III:5", "IV:6".
DomainSpec parse_domain(std::string_view text);
std::string to_string(const DomainSpec& spec);

/// One orthonormal linear coordinate expressed through a matrix entry.
/// For TypeII/III the off-diagonal coordinate is sqrt(2)*z_{row,col};
/// TypeIV coordinates are plain z_k (col == 0).
struct CoordinateDescriptor {
    int row = 0;  // 1-based
    int col = 0;  // 1-based; 0 for TypeIV plain coordinates
    bool scaled = false;
    std::string label;
};

/// Exactly spec.dim descriptors; the corresponding matrix-space vectors are
/// orthonormal under tr(AB*).
std::vector<CoordinateDescriptor> ambient_coordinates(const DomainSpec& spec);

}  // namespace kht
