#include "extlab/api_group.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace extlab {

PiUnit::PiUnit(Prime p, std::vector<Int> digits) : p_(std::move(p)), digits_(std::move(digits)) {
    if (digits_.empty()) throw std::invalid_argument("PiUnit: need at least one digit");
    if (digits_[0] <= 0 || digits_[0] >= p_.value())
        throw std::invalid_argument("PiUnit: s_0 must lie in (0, p)");
    for (std::size_t i = 1; i < digits_.size(); ++i)
        if (digits_[i] < 0 || digits_[i] >= p_.value())
            throw std::invalid_argument("PiUnit: digit s_" + std::to_string(i) +
                                        " not in [0, p)");
}

const Int& PiUnit::s(int i) const {
    if (i < 0 || i >= precision()) throw std::out_of_range("PiUnit::s: index out of range");
    return digits_[static_cast<std::size_t>(i)];
}

Int PiUnit::partial_sum(int n) const {
    if (n < 0 || n > precision())
        throw std::invalid_argument("PiUnit::partial_sum: prefix longer than precision");
    Int acc = 0;
    for (int i = n - 1; i >= 0; --i) acc = acc * p_.value() + s(i);
    return acc;
}

bool field_less(const ApiElement& a, const ApiElement& b) {
    if (a.m != b.m) return a.m < b.m;
    if (a.k != b.k) return a.k < b.k;
    return a.r < b.r;
}

std::string to_string(const ApiElement& x) {
    std::string out = x.m.str() + "*a1 + " + x.k.str() + "*a2 + [";
    for (int i = 0; i < x.length(); ++i) {
        if (i > 0) out += ',';
        out += x.r[static_cast<std::size_t>(i)].str();
    }
    return out + "]";
}

std::ostream& operator<<(std::ostream& os, const ApiElement& x) { return os << to_string(x); }

void ApiGroup::require_precision(int positions, const char* where) const {
    if (positions > pi_.precision())
        throw std::invalid_argument(std::string(where) + ": pi prefix of length " +
                                    std::to_string(pi_.precision()) + " is too short for " +
                                    std::to_string(positions) + " fractional positions");
}

ApiElement ApiGroup::normal_form(Int m, Int k, std::vector<Int> digits) const {
    require_precision(static_cast<int>(digits.size()), "ApiGroup::normal_form");
    const Int& p = prime().value();
    for (std::size_t pos = digits.size(); pos >= 1; --pos) {
        Int carry = floordiv(digits[pos - 1], p);
        if (carry == 0) continue;
        digits[pos - 1] -= carry * p;
        if (pos >= 2) {
            digits[pos - 2] += carry;
            k += carry * pi_.s(static_cast<int>(pos) - 1);
        } else {
            m += carry;
            k += carry * pi_.s(0);
        }
    }
    while (!digits.empty() && digits.back() == 0) digits.pop_back();
    return ApiElement{std::move(m), std::move(k), std::move(digits)};
}

ApiElement ApiGroup::add(const ApiElement& a, const ApiElement& b) const {
    std::vector<Int> digits(std::max(a.r.size(), b.r.size()), Int(0));
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i < a.r.size()) digits[i] += a.r[i];
        if (i < b.r.size()) digits[i] += b.r[i];
    }
    return normal_form(a.m + b.m, a.k + b.k, std::move(digits));
}

ApiElement ApiGroup::neg(const ApiElement& a) const { return scaled(a, -1); }

ApiElement ApiGroup::scaled(const ApiElement& a, const Int& c) const {
    std::vector<Int> digits;
    digits.reserve(a.r.size());
    for (const Int& d : a.r) digits.push_back(d * c);
    return normal_form(a.m * c, a.k * c, std::move(digits));
}

ApiElement ApiGroup::x(int n, Int coeff) const {
    if (n < 1) throw std::out_of_range("ApiGroup::x: index must be >= 1");
    std::vector<Int> digits(static_cast<std::size_t>(n), Int(0));
    digits.back() = std::move(coeff);
    return normal_form(0, 0, std::move(digits));
}

PInvRational ApiGroup::nu(const ApiElement& y) const {
    PInvRational total(prime(), y.m);
    for (int i = 1; i <= y.length(); ++i)
        total = total + PInvRational::make(prime(), y.r[static_cast<std::size_t>(i - 1)], i);
    return total;
}

std::optional<Int> ApiGroup::mu_inverse(const ApiElement& y) const {
    if (y.m != 0 || !y.r.empty()) return std::nullopt;
    return y.k;
}

void ApiGroup::mixed_form(const PInvRational& u, Int& m, std::vector<Int>& frac) const {
    require_same_prime(u.prime(), prime(), "ApiGroup");
    const Int& p = prime().value();
    const int n = u.exponent();
    Int pn = ipow(p, n);
    m = floordiv(u.numerator(), pn);
    Int f = u.numerator() - m * pn;  // in [0, p^n)
    frac.assign(static_cast<std::size_t>(n), Int(0));
    for (int i = n; i >= 1; --i) {
        frac[static_cast<std::size_t>(i - 1)] = f % p;
        f /= p;
    }
}

ApiElement ApiGroup::transversal_v1(const PInvRational& u) const {
    Int m;
    std::vector<Int> frac;
    mixed_form(u, m, frac);
    require_precision(static_cast<int>(frac.size()), "ApiGroup::transversal_v1");
    while (!frac.empty() && frac.back() == 0) frac.pop_back();
    // Digits are already in [0, p), so this is a normal form.
    return ApiElement{std::move(m), 0, std::move(frac)};
}

ApiElement ApiGroup::transversal_v2(const PInvRational& u) const {
    require_same_prime(u.prime(), prime(), "ApiGroup");
    if (u.is_integer()) return a1(u.numerator());
    std::vector<Int> digits(static_cast<std::size_t>(u.exponent()), Int(0));
    digits.back() = u.numerator();
    return normal_form(0, 0, std::move(digits));
}

CarrySet carry_set(const Prime& p, const PInvRational& u, const PInvRational& v) {
    require_same_prime(u.prime(), p, "carry_set");
    require_same_prime(v.prime(), p, "carry_set");
    const int n = std::max(u.exponent(), v.exponent());
    auto frac_digits = [&](const PInvRational& q) {
        Int pe = ipow(p.value(), q.exponent());
        Int f = floormod(q.numerator(), pe);
        std::vector<Int> d(static_cast<std::size_t>(n), Int(0));
        for (int i = q.exponent(); i >= 1; --i) {
            d[static_cast<std::size_t>(i - 1)] = f % p.value();
            f /= p.value();
        }
        return d;
    };
    std::vector<Int> a = frac_digits(u), b = frac_digits(v);
    CarrySet out;
    Int carry = 0;
    for (int pos = n; pos >= 1; --pos) {
        Int t = a[static_cast<std::size_t>(pos - 1)] + b[static_cast<std::size_t>(pos - 1)] + carry;
        carry = t / p.value();
        if (carry != 0) out.push_back(pos);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

Int ApiGroup::cocycle_v1(const PInvRational& u, const PInvRational& v) const {
    const int n = std::max(u.exponent(), v.exponent());
    require_precision(n, "ApiGroup::cocycle_v1");
    Int total = 0;
    for (int pos : carry_set(prime(), u, v)) total += pi_.s(pos - 1);
    return total;
}

Int ApiGroup::cocycle_v2(const PInvRational& u, const PInvRational& v) const {
    require_same_prime(u.prime(), prime(), "ApiGroup::cocycle_v2");
    require_same_prime(v.prime(), prime(), "ApiGroup::cocycle_v2");
    require_precision(std::max(u.exponent(), v.exponent()), "ApiGroup::cocycle_v2");
    if (u.is_integer() && v.is_integer()) return 0;
    if (u.is_integer() || v.is_integer()) {
        const PInvRational& z = u.is_integer() ? u : v;
        const PInvRational& f = u.is_integer() ? v : u;
        return -z.numerator() * pi_.partial_sum(f.exponent());
    }
    const PInvRational& lo = u.exponent() <= v.exponent() ? u : v;
    const PInvRational& hi = u.exponent() <= v.exponent() ? v : u;
    const int m = lo.exponent(), n = hi.exponent();
    if (m < n) {
        // lo * (pi_m - pi_n): divisible by p^m since the partial sums agree
        // below position m.
        Int diff = pi_.partial_sum(m) - pi_.partial_sum(n);
        return lo.numerator() * diff / ipow(prime().value(), m);
    }
    PInvRational w = u + v;
    if (w.is_integer()) return w.numerator() * pi_.partial_sum(n);
    Int diff = pi_.partial_sum(n) - pi_.partial_sum(w.exponent());
    return w.numerator() * diff / ipow(prime().value(), w.exponent());
}

Int ApiGroup::psi_bridge(const PInvRational& u) const {
    ApiElement diff = add(transversal_v1(u), neg(transversal_v2(u)));
    auto k = mu_inverse(diff);
    if (!k)
        throw std::logic_error("ApiGroup::psi_bridge: transversal difference left <a2>: " +
                               to_string(diff));
    return *k;
}

}  // namespace extlab
