#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "extlab/integer.hpp"
#include "extlab/padic.hpp"

namespace extlab {

// Digit prefix s_0, ..., s_{N-1} of a p-adic unit: 0 < s_0 < p and
// 0 <= s_i < p. Operations state how long a prefix they consume.
class PiUnit {
public:
    PiUnit(Prime p, std::vector<Int> digits);

    const Prime& prime() const { return p_; }
    int precision() const { return static_cast<int>(digits_.size()); }
    const Int& s(int i) const;  // 0-based, i < precision

    // Partial sum s_0 + s_1 p + ... + s_{n-1} p^{n-1}; consumes n digits.
    Int partial_sum(int n) const;

private:
    Prime p_;
    std::vector<Int> digits_;
};

// Normal form m*a1 + k*a2 + sum r_i x_i with 0 <= r_i < p and no trailing
// zero fractional digit.
struct ApiElement {
    Int m;  // coefficient of a1
    Int k;  // coefficient of a2
    std::vector<Int> r;

    int length() const { return static_cast<int>(r.size()); }

    friend bool operator==(const ApiElement& a, const ApiElement& b) {
        return a.m == b.m && a.k == b.k && a.r == b.r;
    }
    friend bool operator!=(const ApiElement& a, const ApiElement& b) { return !(a == b); }
};

bool field_less(const ApiElement& a, const ApiElement& b);

// Rendering "m*a1 + k*a2 + [r_1,...,r_n]".
std::string to_string(const ApiElement& x);
std::ostream& operator<<(std::ostream& os, const ApiElement& x);

// 1-based fractional positions that emit a carry in the base-p addition of
// two fractional digit strings, in ascending order.
using CarrySet = std::vector<int>;

// The rank-2 group generated by a1, a2 and x_n = p^{-n}(a1 + pi_n a2),
// presented through the normal form above. Every operation needs the pi
// prefix to cover the fractional positions it touches and throws
// std::invalid_argument otherwise.
class ApiGroup {
public:
    explicit ApiGroup(PiUnit pi) : pi_(std::move(pi)) {}

    const PiUnit& pi() const { return pi_; }
    const Prime& prime() const { return pi_.prime(); }

    // Carries propagate from the highest fractional index downward using
    // p x_{i+1} = x_i + s_i a2 and p x_1 = a1 + s_0 a2; digits may start
    // out as arbitrary integers.
    ApiElement normal_form(Int m, Int k, std::vector<Int> digits) const;

    ApiElement zero() const { return ApiElement{0, 0, {}}; }
    ApiElement add(const ApiElement& a, const ApiElement& b) const;
    ApiElement neg(const ApiElement& a) const;
    ApiElement scaled(const ApiElement& a, const Int& c) const;

    // Basis helpers: a1, a2 and x_n (n >= 1).
    ApiElement a1(Int coeff = 1) const { return ApiElement{std::move(coeff), 0, {}}; }
    ApiElement a2(Int coeff = 1) const { return ApiElement{0, std::move(coeff), {}}; }
    ApiElement x(int n, Int coeff = 1) const;

    // The quotient map onto Z[1/p]: m + r_1/p + ... + r_n/p^n.
    PInvRational nu(const ApiElement& y) const;

    // Inverse of the a2-embedding: defined exactly on elements k*a2.
    std::optional<Int> mu_inverse(const ApiElement& y) const;

    // Digit transversal: u = m.r_1...r_n picks m*a1 + sum r_i x_i.
    ApiElement transversal_v1(const PInvRational& u) const;
    // Monomial transversal: integers pick k*a1, k/p^n picks k*x_n.
    ApiElement transversal_v2(const PInvRational& u) const;

    // Carry cocycle of the digit transversal: sum of s_{j-1} over carry
    // positions j.
    Int cocycle_v1(const PInvRational& u, const PInvRational& v) const;
    // Four-case cocycle of the monomial transversal.
    Int cocycle_v2(const PInvRational& u, const PInvRational& v) const;

    // a2-coefficient of transversal_v1(u) - transversal_v2(u); the
    // difference lies in <a2> and witnesses the equivalence of the two
    // cocycles. Throws std::logic_error if it does not.
    Int psi_bridge(const PInvRational& u) const;

private:
    // Mixed form u = m.r_1...r_n with 0 <= r_i < p (n = exponent of u).
    void mixed_form(const PInvRational& u, Int& m, std::vector<Int>& frac) const;
    void require_precision(int positions, const char* where) const;

    PiUnit pi_;
};

// Base-p addition of the fractional parts of u and v (padded to equal
// length); the returned positions are where the school algorithm carries.
CarrySet carry_set(const Prime& p, const PInvRational& u, const PInvRational& v);

struct ApiCarrier {
    using value_type = ApiElement;

    ApiGroup group;

    ApiElement add(const ApiElement& a, const ApiElement& b) const { return group.add(a, b); }
    ApiElement neg(const ApiElement& a) const { return group.neg(a); }
    ApiElement zero() const { return group.zero(); }
    bool eq(const ApiElement& a, const ApiElement& b) const { return a == b; }
    bool less(const ApiElement& a, const ApiElement& b) const { return field_less(a, b); }
    std::string str(const ApiElement& a) const { return to_string(a); }
    std::string desc() const { return "A_pi(p=" + group.prime().value().str() + ")"; }
};

}  // namespace extlab
