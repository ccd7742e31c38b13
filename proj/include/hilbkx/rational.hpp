#ifndef HILBKX_RATIONAL_HPP
#define HILBKX_RATIONAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hilbkx {

// Arbitrary-precision rational, always kept in canonical form
// (gcd(num, den) = 1, den > 0).
using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// "num" or "num/den"; optional leading sign on the numerator only.
inline std::optional<Rational> parse_rational(std::string_view text) {
    auto is_digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string_view num = text, den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!is_digits(den)) return std::nullopt;
    }
    std::string_view unsigned_num = num;
    if (!unsigned_num.empty() && (unsigned_num.front() == '-' || unsigned_num.front() == '+'))
        unsigned_num.remove_prefix(1);
    if (!is_digits(unsigned_num)) return std::nullopt;

    Integer n(std::string(unsigned_num), 10);
    if (!num.empty() && num.front() == '-') n = -n;
    Integer d = 1;
    if (!den.empty()) {
        d = Integer(std::string(den), 10);
        if (d == 0) return std::nullopt;
    }
    Rational r(n, d);
    r.canonicalize();
    return r;
}

// Rendered as "num" for integers and "num/den" otherwise.
inline std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline std::string to_string(const RationalVector& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += to_string(v[i]);
    }
    return out;
}

// Comma-separated list of rationals, e.g. "1,-2,3/4". Empty text is the
// empty vector.
inline RationalVector parse_rational_list(std::string_view text) {
    RationalVector out;
    if (text.empty()) return out;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                          : comma - start);
        while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
        while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
        auto r = parse_rational(piece);
        if (!r) throw std::invalid_argument("not a rational: '" + std::string(piece) + "'");
        out.push_back(*r);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

inline bool is_zero_vector(const RationalVector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace hilbkx

#endif  // HILBKX_RATIONAL_HPP
