#include "kht/signatures.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace kht {

namespace {

bool valid_parts(const std::vector<int>& parts) {
    if (parts.empty()) return false;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) return false;
        if (i > 0 && parts[i] > parts[i - 1]) return false;
    }
    return true;
}

}  // namespace

Signature::Signature(std::vector<int> parts) : parts_(std::move(parts)) {
    if (!valid_parts(parts_))
        throw std::invalid_argument("parts are not non-increasing non-negative");
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::optional<Signature> Signature::try_make(std::vector<int> parts) {
    if (!valid_parts(parts)) return std::nullopt;
    return Signature(std::move(parts));
}

std::optional<Signature> shift_up(const Signature& s, int j) {
    if (j < 1 || j > s.rank()) throw std::out_of_range("signature index out of range");
    auto parts = s.parts();
    parts[static_cast<std::size_t>(j - 1)] += 1;
    return Signature::try_make(std::move(parts));
}

std::optional<Signature> shift_down(const Signature& s, int j) {
    if (j < 1 || j > s.rank()) throw std::out_of_range("signature index out of range");
    auto parts = s.parts();
    parts[static_cast<std::size_t>(j - 1)] -= 1;
    return Signature::try_make(std::move(parts));
}

std::vector<Signature> signatures_of_weight(int r, int weight) {
    std::vector<Signature> out;
    std::vector<int> parts(static_cast<std::size_t>(r), 0);
    // Descending-lex partition enumeration of `weight` into at most r parts.
    auto rec = [&](auto&& self, int pos, int remaining, int cap) -> void {
        if (pos == r) {
            if (remaining == 0) out.emplace_back(parts);
            return;
        }
        int hi = std::min(cap, remaining);
        for (int v = hi; v >= 0; --v) {
            if (remaining - v > (r - pos - 1) * v) continue;  // tail cannot absorb the rest
            parts[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, remaining - v, v);
        }
        parts[static_cast<std::size_t>(pos)] = 0;
    };
    rec(rec, 0, weight, weight);
    return out;
}

std::vector<Signature> enumerate_signatures(int r, int max_weight) {
    if (r < 1) throw std::invalid_argument("rank must be positive");
    if (max_weight < 0) throw std::invalid_argument("max_weight must be >= 0");
    std::vector<Signature> out;
    for (int n = 0; n <= max_weight; ++n) {
        auto grade = signatures_of_weight(r, n);
        out.insert(out.end(), grade.begin(), grade.end());
    }
    return out;
}

std::vector<int> boundary_profile(const Signature& s) {
    std::vector<int> profile;
    for (int j = 1; j <= s.rank(); ++j)
        if (shift_up(s, j)) profile.push_back(j);
    return profile;
}

BoundaryCase classify_boundary(const std::vector<int>& profile) {
    if (profile.size() == 1) return BoundaryCase::Single;
    if (profile.size() == 2) return BoundaryCase::Pair;
    return BoundaryCase::General;
}

Signature parse_signature(std::string_view text) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw std::invalid_argument("signature literal must look like [2,1]");
    std::vector<int> parts;
    std::string_view body = text.substr(1, text.size() - 2);
    while (!body.empty()) {
        auto comma = body.find(',');
        std::string_view piece = body.substr(0, comma);
        int value = 0;
        auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (ec != std::errc{} || ptr != piece.data() + piece.size())
            throw std::invalid_argument("bad signature part '" + std::string(piece) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        body = body.substr(comma + 1);
    }
    return Signature(std::move(parts));
}

std::string to_string(const Signature& s) {
    std::string out = "[";
    for (int i = 0; i < s.rank(); ++i) {
        if (i) out += ",";
        out += std::to_string(s.parts()[static_cast<std::size_t>(i)]);
    }
    return out + "]";
}

}  // namespace kht
