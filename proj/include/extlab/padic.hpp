#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "extlab/integer.hpp"

namespace extlab {

// Prime modulus fixed for a family of values. Primality is checked at
// construction by trial division, so keep inputs at desk scale.
class Prime {
public:
    explicit Prime(Int value);

    const Int& value() const { return value_; }

    friend bool operator==(const Prime& a, const Prime& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Prime& a, const Prime& b) { return !(a == b); }

private:
    Int value_;
};

// Throws std::invalid_argument unless both operands share the same prime.
void require_same_prime(const Prime& a, const Prime& b, const char* where);

// Finite-precision name of a p-adic integer: digits a_1, ..., a_N standing
// for the truncation of sum_{n<=N} a_n p^(n-1). Digits may be any integers,
// including negative ones.
struct DigitName {
    Prime p;
    std::vector<Int> digits;

    int precision() const { return static_cast<int>(digits.size()); }

    // 1-based digit access, n in [1, precision()].
    const Int& digit(int n) const;

    // The truncated value sum_{n<=N} a_n p^(n-1).
    Int value() const;
};

// Digit-wise sum of two names over the same prime (shorter one zero-padded).
DigitName name_add(const DigitName& a, const DigitName& b);

// Name whose digits all lie in [0, p). Two values of equal precision are
// equal iff they agree digit-wise.
class CanonicalPadic {
public:
    CanonicalPadic(Prime p, std::vector<Int> digits);  // validates digit range

    const Prime& prime() const { return p_; }
    const std::vector<Int>& digits() const { return digits_; }
    int precision() const { return static_cast<int>(digits_.size()); }
    const Int& digit(int n) const;  // 1-based

    DigitName as_name() const { return DigitName{p_, digits_}; }

    friend bool operator==(const CanonicalPadic& a, const CanonicalPadic& b) {
        return a.p_ == b.p_ && a.digits_ == b.digits_;
    }

private:
    Prime p_;
    std::vector<Int> digits_;
};

struct Canonicalized {
    CanonicalPadic value;
    // Digits of `value` are exact mod p^M. Carries only travel toward higher
    // indices, so M always equals the input precision.
    int guaranteed_precision;
    // Completes the identity: input value = output value + carry_out * p^M.
    Int carry_out;
};

// Carry-normalizes a name so that all digits lie in [0, p).
// Requires precision >= 1.
Canonicalized canonicalize(const DigitName& x);

// The integer block alpha|{k,n} = sum_{s=k+1..n} a_s p^(s-k-1).
// Requires 0 <= k <= n <= precision; consumes digits a_{k+1}..a_n.
Int block_value(const DigitName& x, int k, int n);
Int block_value(const CanonicalPadic& x, int k, int n);

// Element k / p^n of Z[1/p] in normal form: n = 0, or p does not divide k.
// Zero is (0, 0).
class PInvRational {
public:
    explicit PInvRational(Prime p) : p_(p), num_(0), exp_(0) {}
    PInvRational(Prime p, Int integer) : p_(p), num_(std::move(integer)), exp_(0) {}

    // Normalizes k / p^n (strips shared powers of p). Requires n >= 0.
    static PInvRational make(const Prime& p, Int k, int n);

    const Prime& prime() const { return p_; }
    const Int& numerator() const { return num_; }
    int exponent() const { return exp_; }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return exp_ == 0; }

    PInvRational operator-() const;
    friend PInvRational operator+(const PInvRational& a, const PInvRational& b);
    friend PInvRational operator-(const PInvRational& a, const PInvRational& b);

    friend bool operator==(const PInvRational& a, const PInvRational& b) {
        return a.p_ == b.p_ && a.num_ == b.num_ && a.exp_ == b.exp_;
    }
    friend bool operator!=(const PInvRational& a, const PInvRational& b) { return !(a == b); }

private:
    Prime p_;
    Int num_;
    int exp_;
};

// Lexicographic on the normal-form fields (numerator, exponent); the
// deterministic element order used by windows and exports.
bool field_less(const PInvRational& a, const PInvRational& b);

// Element i / p^n + Z of the Pruefer group Z(p^inf), stored via its least
// non-negative representative: 0 <= i < p^n, p not dividing i when n >= 1,
// and (0, 0) for zero.
class PruferElement {
public:
    explicit PruferElement(Prime p) : p_(p), res_(0), exp_(0) {}

    // Validates the normal form above.
    static PruferElement make(const Prime& p, Int i, int n);

    const Prime& prime() const { return p_; }
    const Int& residue() const { return res_; }
    int exponent() const { return exp_; }
    bool is_zero() const { return exp_ == 0; }

    // The canonical representative i / p^n in [0, 1).
    PInvRational representative() const { return PInvRational::make(p_, res_, exp_); }

    friend bool operator==(const PruferElement& a, const PruferElement& b) {
        return a.p_ == b.p_ && a.res_ == b.res_ && a.exp_ == b.exp_;
    }
    friend bool operator!=(const PruferElement& a, const PruferElement& b) { return !(a == b); }

private:
    Prime p_;
    Int res_;
    int exp_;
};

bool field_less(const PruferElement& a, const PruferElement& b);

struct PruferSum {
    PruferElement value;
    // 1 iff the canonical representatives satisfy i/p^n + j/p^k >= 1.
    bool overflow;
};

PruferSum prufer_add(const PruferElement& x, const PruferElement& y);
PruferElement prufer_neg(const PruferElement& x);

// Reduction mod Z.
PruferElement to_prufer(const PInvRational& q);

// Textual forms. PInvRational renders as "k/p^n" with the denominator
// evaluated ("3/4"), integers as plain "k"; PruferElement as "i/p^n mod 1";
// DigitName as a comma-separated digit list. Parsers accept the same
// grammar and throw std::invalid_argument on malformed input.
std::string to_string(const PInvRational& x);
std::string to_string(const PruferElement& x);
std::string to_string(const DigitName& x);
std::ostream& operator<<(std::ostream& os, const PInvRational& x);
std::ostream& operator<<(std::ostream& os, const PruferElement& x);
PInvRational parse_pinv(const Prime& p, std::string_view text);
PruferElement parse_prufer(const Prime& p, std::string_view text);
DigitName parse_digit_name(const Prime& p, std::string_view text);

}  // namespace extlab
