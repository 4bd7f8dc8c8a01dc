#include "kht/domains.hpp"

#include <cassert>
#include <charconv>
#include <stdexcept>

namespace kht {

namespace {

void check_dimension(const DomainSpec& s) {
    Rational d = Rational(s.rank) + s.half_a() * s.rank * (s.rank - 1) + Rational(s.rank) * s.b;
    assert(d == s.dim);
    (void)d;
}

int parse_int(std::string_view text, std::string_view what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw std::invalid_argument("bad " + std::string(what) + " '" + std::string(text) + "'");
    return value;
}

}  // namespace

DomainSpec make_type_i(int n, int m) {
    if (n < 1 || m < n)
        throw std::invalid_argument("TypeI requires m >= n >= 1");
    DomainSpec s;
    s.kind = DomainKind::TypeI;
    s.n = n;
    s.m = m;
    s.rank = n;
    s.a = 2;
    s.b = m - n;
    s.dim = n * m;
    check_dimension(s);
    return s;
}

DomainSpec make_type_ii(int n) {
    if (n < 1) throw std::invalid_argument("TypeII requires n >= 1");
    DomainSpec s;
    s.kind = DomainKind::TypeII;
    s.n = n;
    s.rank = n;
    s.a = 1;
    s.b = 0;
    s.dim = n * (n + 1) / 2;
    check_dimension(s);
    return s;
}

DomainSpec make_type_iii(int n) {
    if (n < 2) throw std::invalid_argument("TypeIII requires n >= 2");
    DomainSpec s;
    s.kind = DomainKind::TypeIII;
    s.n = n;
    s.rank = n / 2;
    s.a = 4;
    s.b = (n % 2 == 0) ? 0 : 2;
    s.dim = n * (n - 1) / 2;
    check_dimension(s);
    return s;
}

DomainSpec make_type_iv(int d) {
    if (d < 5) throw std::invalid_argument("TypeIV requires d >= 5");
    DomainSpec s;
    s.kind = DomainKind::TypeIV;
    s.rank = 2;
    s.a = d - 2;
    s.b = 0;
    s.dim = d;
    check_dimension(s);
    return s;
}

DomainSpec parse_domain(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("domain spec '" + std::string(text) +
                                    "' lacks ':' (expected e.g. I:2,2)");
    std::string_view type = text.substr(0, colon);
    std::string_view args = text.substr(colon + 1);
    if (type == "I") {
        auto comma = args.find(',');
        if (comma == std::string_view::npos)
            throw std::invalid_argument("TypeI needs two sizes, e.g. I:2,2");
        return make_type_i(parse_int(args.substr(0, comma), "TypeI n"),
                           parse_int(args.substr(comma + 1), "TypeI m"));
    }
    if (type == "II") return make_type_ii(parse_int(args, "TypeII n"));
    if (type == "III") return make_type_iii(parse_int(args, "TypeIII n"));
    if (type == "IV") return make_type_iv(parse_int(args, "TypeIV d"));
    throw std::invalid_argument("unknown domain type '" + std::string(type) +
                                "' (classical types are I..IV)");
}

std::string to_string(const DomainSpec& spec) {
    switch (spec.kind) {
        case DomainKind::TypeI:
            return "I:" + std::to_string(spec.n) + "," + std::to_string(spec.m);
        case DomainKind::TypeII:
            return "II:" + std::to_string(spec.n);
        case DomainKind::TypeIII:
            return "III:" + std::to_string(spec.n);
        case DomainKind::TypeIV:
            return "IV:" + std::to_string(spec.dim);
    }
    return {};
}

std::vector<CoordinateDescriptor> ambient_coordinates(const DomainSpec& spec) {
    std::vector<CoordinateDescriptor> out;
    out.reserve(spec.dim);
    auto entry = [](int i, int j, bool scaled) {
        CoordinateDescriptor c;
        c.row = i;
        c.col = j;
        c.scaled = scaled;
        c.label = (scaled ? "sqrt2*z" : "z") + std::to_string(i) + std::to_string(j);
        return c;
    };
    switch (spec.kind) {
        case DomainKind::TypeI:
            for (int i = 1; i <= spec.n; ++i)
                for (int j = 1; j <= spec.m; ++j) out.push_back(entry(i, j, false));
            break;
        case DomainKind::TypeII:
            for (int i = 1; i <= spec.n; ++i)
                for (int j = i; j <= spec.n; ++j) out.push_back(entry(i, j, i != j));
            break;
        case DomainKind::TypeIII:
            for (int i = 1; i <= spec.n; ++i)
                for (int j = i + 1; j <= spec.n; ++j) out.push_back(entry(i, j, true));
            break;
        case DomainKind::TypeIV:
            for (int k = 1; k <= spec.dim; ++k) {
                CoordinateDescriptor c;
                c.row = k;
                c.label = "z" + std::to_string(k);
                out.push_back(c);
            }
            break;
    }
    assert(static_cast<int>(out.size()) == spec.dim);
    return out;
}

}  // namespace kht
