#include "extlab/padic.hpp"

#include <ostream>
#include <sstream>
#include <utility>

namespace extlab {

namespace {

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (Int d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

Prime::Prime(Int value) : value_(std::move(value)) {
    if (!is_prime(value_))
        throw std::invalid_argument("Prime: " + value_.str() + " is not prime");
}

void require_same_prime(const Prime& a, const Prime& b, const char* where) {
    if (a != b)
        throw std::invalid_argument(std::string(where) + ": mixed primes " + a.value().str() +
                                    " and " + b.value().str());
}

const Int& DigitName::digit(int n) const {
    if (n < 1 || n > precision()) throw std::out_of_range("DigitName::digit: index out of range");
    return digits[static_cast<std::size_t>(n - 1)];
}

Int DigitName::value() const {
    Int acc = 0;
    for (int n = precision(); n >= 1; --n) acc = acc * p.value() + digit(n);
    return acc;
}

DigitName name_add(const DigitName& a, const DigitName& b) {
    require_same_prime(a.p, b.p, "name_add");
    std::vector<Int> d(std::max(a.digits.size(), b.digits.size()), Int(0));
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i < a.digits.size()) d[i] += a.digits[i];
        if (i < b.digits.size()) d[i] += b.digits[i];
    }
    return DigitName{a.p, std::move(d)};
}

CanonicalPadic::CanonicalPadic(Prime p, std::vector<Int> digits)
    : p_(std::move(p)), digits_(std::move(digits)) {
    for (const Int& d : digits_)
        if (d < 0 || d >= p_.value())
            throw std::invalid_argument("CanonicalPadic: digit " + d.str() + " not in [0, " +
                                        p_.value().str() + ")");
}

const Int& CanonicalPadic::digit(int n) const {
    if (n < 1 || n > precision())
        throw std::out_of_range("CanonicalPadic::digit: index out of range");
    return digits_[static_cast<std::size_t>(n - 1)];
}

Canonicalized canonicalize(const DigitName& x) {
    if (x.precision() < 1) throw std::invalid_argument("canonicalize: precision must be >= 1");
    const Int& p = x.p.value();
    std::vector<Int> out(x.digits.size());
    Int carry = 0;
    for (std::size_t i = 0; i < x.digits.size(); ++i) {
        Int t = x.digits[i] + carry;
        carry = floordiv(t, p);
        out[i] = t - carry * p;
    }
    int m = static_cast<int>(out.size());
    return Canonicalized{CanonicalPadic(x.p, std::move(out)), m, carry};
}

namespace {

Int block_value_impl(const std::vector<Int>& digits, const Int& p, int k, int n) {
    if (k < 0 || k > n || n > static_cast<int>(digits.size()))
        throw std::out_of_range("block_value: need 0 <= k <= n <= precision");
    Int acc = 0;
    for (int s = n; s > k; --s) acc = acc * p + digits[static_cast<std::size_t>(s - 1)];
    return acc;
}

}  // namespace

Int block_value(const DigitName& x, int k, int n) {
    return block_value_impl(x.digits, x.p.value(), k, n);
}

Int block_value(const CanonicalPadic& x, int k, int n) {
    return block_value_impl(x.digits(), x.prime().value(), k, n);
}

PInvRational PInvRational::make(const Prime& p, Int k, int n) {
    if (n < 0) throw std::invalid_argument("PInvRational::make: exponent must be >= 0");
    PInvRational r(p);
    if (k == 0) return r;
    while (n > 0 && k % p.value() == 0) {
        k /= p.value();
        --n;
    }
    r.num_ = std::move(k);
    r.exp_ = n;
    return r;
}

PInvRational PInvRational::operator-() const {
    PInvRational r(p_);
    r.num_ = -num_;
    r.exp_ = exp_;
    return r;
}

PInvRational operator+(const PInvRational& a, const PInvRational& b) {
    require_same_prime(a.p_, b.p_, "PInvRational::operator+");
    int n = std::max(a.exp_, b.exp_);
    Int num = a.num_ * ipow(a.p_.value(), n - a.exp_) + b.num_ * ipow(b.p_.value(), n - b.exp_);
    return PInvRational::make(a.p_, std::move(num), n);
}

PInvRational operator-(const PInvRational& a, const PInvRational& b) { return a + (-b); }

bool field_less(const PInvRational& a, const PInvRational& b) {
    if (a.numerator() != b.numerator()) return a.numerator() < b.numerator();
    return a.exponent() < b.exponent();
}

PruferElement PruferElement::make(const Prime& p, Int i, int n) {
    if (n < 0) throw std::invalid_argument("PruferElement::make: exponent must be >= 0");
    PruferElement r(p);
    if (n == 0) {
        if (i != 0) throw std::invalid_argument("PruferElement::make: exponent 0 requires residue 0");
        return r;
    }
    if (i <= 0 || i >= ipow(p.value(), n) || i % p.value() == 0)
        throw std::invalid_argument("PruferElement::make: residue not in normal form");
    r.res_ = std::move(i);
    r.exp_ = n;
    return r;
}

bool field_less(const PruferElement& a, const PruferElement& b) {
    if (a.residue() != b.residue()) return a.residue() < b.residue();
    return a.exponent() < b.exponent();
}

PruferSum prufer_add(const PruferElement& x, const PruferElement& y) {
    require_same_prime(x.prime(), y.prime(), "prufer_add");
    const Int& p = x.prime().value();
    int n = std::max(x.exponent(), y.exponent());
    Int pn = ipow(p, n);
    Int num = x.residue() * ipow(p, n - x.exponent()) + y.residue() * ipow(p, n - y.exponent());
    bool overflow = num >= pn;
    Int t = num % pn;
    if (t == 0) return PruferSum{PruferElement(x.prime()), overflow};
    int e = valuation(t, p);
    return PruferSum{PruferElement::make(x.prime(), t / ipow(p, e), n - e), overflow};
}

PruferElement prufer_neg(const PruferElement& x) {
    if (x.is_zero()) return x;
    return PruferElement::make(x.prime(), ipow(x.prime().value(), x.exponent()) - x.residue(),
                               x.exponent());
}

PruferElement to_prufer(const PInvRational& q) {
    if (q.exponent() == 0) return PruferElement(q.prime());
    Int pn = ipow(q.prime().value(), q.exponent());
    Int i = floormod(q.numerator(), pn);
    if (i == 0) return PruferElement(q.prime());
    return PruferElement::make(q.prime(), std::move(i), q.exponent());
}

std::string to_string(const PInvRational& x) {
    if (x.exponent() == 0) return x.numerator().str();
    return x.numerator().str() + "/" + ipow(x.prime().value(), x.exponent()).str();
}

std::string to_string(const PruferElement& x) {
    return x.residue().str() + "/" + ipow(x.prime().value(), x.exponent()).str() + " mod 1";
}

std::string to_string(const DigitName& x) {
    std::string out;
    for (int n = 1; n <= x.precision(); ++n) {
        if (n > 1) out += ',';
        out += x.digit(n).str();
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const PInvRational& x) { return os << to_string(x); }
std::ostream& operator<<(std::ostream& os, const PruferElement& x) { return os << to_string(x); }

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
}

// Exponent n with value = p^n, if value is a power of p.
std::optional<int> power_of(const Int& p, Int value) {
    int n = 0;
    while (value > 1) {
        if (value % p != 0) return std::nullopt;
        value /= p;
        ++n;
    }
    return value == 1 ? std::optional<int>(n) : std::nullopt;
}

}  // namespace

PInvRational parse_pinv(const Prime& p, std::string_view text) {
    text = trim(text);
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        auto k = parse_int(text);
        if (!k) throw std::invalid_argument("parse_pinv: bad integer '" + std::string(text) + "'");
        return PInvRational(p, *k);
    }
    auto k = parse_int(trim(text.substr(0, slash)));
    auto d = parse_int(trim(text.substr(slash + 1)));
    if (!k || !d || *d <= 0)
        throw std::invalid_argument("parse_pinv: malformed fraction '" + std::string(text) + "'");
    auto n = power_of(p.value(), *d);
    if (!n)
        throw std::invalid_argument("parse_pinv: denominator " + d->str() + " is not a power of " +
                                    p.value().str());
    return PInvRational::make(p, *k, *n);
}

PruferElement parse_prufer(const Prime& p, std::string_view text) {
    text = trim(text);
    constexpr std::string_view suffix = " mod 1";
    if (text.size() >= suffix.size() && text.substr(text.size() - suffix.size()) == suffix)
        text = text.substr(0, text.size() - suffix.size());
    return to_prufer(parse_pinv(p, text));
}

DigitName parse_digit_name(const Prime& p, std::string_view text) {
    std::vector<Int> digits;
    text = trim(text);
    if (!text.empty()) {
        std::size_t start = 0;
        while (true) {
            auto comma = text.find(',', start);
            auto piece = trim(text.substr(start, comma == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : comma - start));
            auto d = parse_int(piece);
            if (!d)
                throw std::invalid_argument("parse_digit_name: bad digit '" + std::string(piece) +
                                            "'");
            digits.push_back(*d);
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
    }
    return DigitName{p, std::move(digits)};
}

}  // namespace extlab
