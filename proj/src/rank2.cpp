#include "extlab/rank2.hpp"

#include <ostream>

namespace extlab {

bool field_less(const K2Element& a, const K2Element& b) {
    if (a.x != b.x) return a.x < b.x;
    return field_less(a.q, b.q);
}

std::string to_string(const K2Element& e) { return "(" + e.x.str() + "; " + to_string(e.q) + ")"; }

std::ostream& operator<<(std::ostream& os, const K2Element& x) { return os << to_string(x); }

K2Group::K2Group(Prime p, CanonicalPadic alpha) : p_(std::move(p)), alpha_(std::move(alpha)) {
    require_same_prime(p_, alpha_.prime(), "K2Group");
}

Int K2Group::ctilde(const PInvRational& x, const PInvRational& y) const {
    return c_alpha(alpha_, to_prufer(x), to_prufer(y));
}

K2Element K2Group::add(const K2Element& a, const K2Element& b) const {
    return K2Element{a.x + b.x + ctilde(a.q, b.q), a.q + b.q};
}

K2Element K2Group::neg(const K2Element& a) const {
    return K2Element{-a.x - ctilde(a.q, -a.q), -a.q};
}

}  // namespace extlab
