#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace extlab {

// Arbitrary-precision signed integer used throughout the library.
// Expression templates are off so that Int deduces and composes like a
// plain value type in generic code.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;

// Floor division; the matching remainder is non-negative whenever b > 0.
inline Int floordiv(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int floormod(const Int& a, const Int& b) { return a - floordiv(a, b) * b; }

inline Int ipow(const Int& base, int exp) {
    Int r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

// Largest e with p^e dividing n. Requires n != 0.
inline int valuation(Int n, const Int& p) {
    int e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

// Strict integer literal: optional sign followed by decimal digits.
inline std::optional<Int> parse_int(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size()) return std::nullopt;
    for (std::size_t j = i; j < text.size(); ++j)
        if (text[j] < '0' || text[j] > '9') return std::nullopt;
    return Int(std::string(text));
}

}  // namespace extlab
