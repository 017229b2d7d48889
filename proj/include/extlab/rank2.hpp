#pragma once

#include <iosfwd>
#include <string>

#include "extlab/em_ext.hpp"
#include "extlab/integer.hpp"
#include "extlab/padic.hpp"

namespace extlab {

// Point of the rank-2 group on Z x Z[1/p].
struct K2Element {
    Int x;
    PInvRational q;

    friend bool operator==(const K2Element& a, const K2Element& b) {
        return a.x == b.x && a.q == b.q;
    }
    friend bool operator!=(const K2Element& a, const K2Element& b) { return !(a == b); }
};

bool field_less(const K2Element& a, const K2Element& b);

// Rendering "(x; k/p^n)".
std::string to_string(const K2Element& x);
std::ostream& operator<<(std::ostream& os, const K2Element& x);

// Extension of Z[1/p] by Z whose twist is the projected Pruefer cocycle;
// the parameter is a canonical p-adic name.
class K2Group {
public:
    K2Group(Prime p, CanonicalPadic alpha);

    const Prime& prime() const { return p_; }
    const CanonicalPadic& alpha() const { return alpha_; }

    // c_alpha on the images of x, y mod Z; depends only on those images.
    // Requires precision >= max exponent.
    Int ctilde(const PInvRational& x, const PInvRational& y) const;

    K2Element zero() const { return K2Element{0, PInvRational(p_)}; }
    K2Element add(const K2Element& a, const K2Element& b) const;
    K2Element neg(const K2Element& a) const;

private:
    Prime p_;
    CanonicalPadic alpha_;
};

struct K2Carrier {
    using value_type = K2Element;

    K2Group group;

    K2Element add(const K2Element& a, const K2Element& b) const { return group.add(a, b); }
    K2Element neg(const K2Element& a) const { return group.neg(a); }
    K2Element zero() const { return group.zero(); }
    bool eq(const K2Element& a, const K2Element& b) const { return a == b; }
    bool less(const K2Element& a, const K2Element& b) const { return field_less(a, b); }
    std::string str(const K2Element& a) const { return to_string(a); }
    std::string desc() const { return "K(p=" + group.prime().value().str() + ")"; }
};

}  // namespace extlab
