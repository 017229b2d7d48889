#include "extlab/em_ext.hpp"

#include <ostream>
#include <stdexcept>

namespace extlab {

FreeWord FreeWord::generator(int index, Int coeff) {
    FreeWord w;
    if (index < 0) throw std::out_of_range("FreeWord::generator: negative index");
    if (coeff != 0) {
        w.exp.assign(static_cast<std::size_t>(index) + 1, Int(0));
        w.exp.back() = std::move(coeff);
    }
    return w;
}

Int FreeWord::coeff(int index) const {
    if (index < 0 || index >= static_cast<int>(exp.size())) return 0;
    return exp[static_cast<std::size_t>(index)];
}

void FreeWord::trim() {
    while (!exp.empty() && exp.back() == 0) exp.pop_back();
}

FreeWord& FreeWord::operator+=(const FreeWord& o) {
    if (o.exp.size() > exp.size()) exp.resize(o.exp.size(), Int(0));
    for (std::size_t i = 0; i < o.exp.size(); ++i) exp[i] += o.exp[i];
    trim();
    return *this;
}

FreeWord& FreeWord::operator-=(const FreeWord& o) {
    if (o.exp.size() > exp.size()) exp.resize(o.exp.size(), Int(0));
    for (std::size_t i = 0; i < o.exp.size(); ++i) exp[i] -= o.exp[i];
    trim();
    return *this;
}

FreeWord FreeWord::operator-() const { return scaled(-1); }

FreeWord FreeWord::scaled(const Int& c) const {
    FreeWord w;
    if (c == 0) return w;
    w.exp.reserve(exp.size());
    for (const Int& e : exp) w.exp.push_back(e * c);
    w.trim();
    return w;
}

std::string to_string(const FreeWord& w) {
    if (w.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < w.exp.size(); ++i) {
        const Int& c = w.exp[i];
        if (c == 0) continue;
        if (!out.empty()) out += c > 0 ? " + " : " - ";
        else if (c < 0) out += "-";
        Int mag = abs(c);
        if (mag != 1) out += mag.str() + "*";
        out += "e" + std::to_string(i);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const FreeWord& w) { return os << to_string(w); }

FreeWord word_sum(const GenWord& w) {
    FreeWord total;
    for (const GenLetter& l : w) total += FreeWord::generator(l.gen, l.inverse ? Int(-1) : Int(1));
    return total;
}

void append_letters(GenWord& out, int index, const Int& c) {
    Int mag = abs(c);
    for (Int i = 0; i < mag; ++i) out.push_back(GenLetter{index, c < 0});
}

FreeWord RelatorDecomposition::recombine(const Prime& p) const {
    FreeWord w = FreeWord::generator(0, c0);
    for (std::size_t r = 1; r <= c.size(); ++r) {
        const Int& cr = c[r - 1];
        if (cr == 0) continue;
        w += FreeWord::generator(static_cast<int>(r) - 1, cr);
        w += FreeWord::generator(static_cast<int>(r), -cr * p.value());
    }
    return w;
}

std::optional<RelatorDecomposition> r_decompose(const Prime& p, const FreeWord& w) {
    const int top = w.top_index();
    RelatorDecomposition out;
    out.c.assign(top > 0 ? static_cast<std::size_t>(top) : 0, Int(0));
    Int next = 0;  // c_{r+1}
    for (int r = top; r >= 1; --r) {
        Int num = next - w.coeff(r);
        if (num % p.value() != 0) return std::nullopt;
        next = num / p.value();
        out.c[static_cast<std::size_t>(r) - 1] = next;
    }
    out.c0 = w.coeff(0) - next;
    return out;
}

RelatorHom RelatorHom::from_name(const DigitName& alpha) {
    return RelatorHom{alpha.p, Int(0), alpha.digits};
}

RelatorHom RelatorHom::from_values(const Prime& p, Int on_e0, std::vector<Int> on_relators) {
    return RelatorHom{p, std::move(on_e0), std::move(on_relators)};
}

Int RelatorHom::eval(const FreeWord& w) const {
    auto dec = r_decompose(p, w);
    if (!dec) throw std::invalid_argument("RelatorHom::eval: word is not in R");
    Int total = dec->c0 * on_e0;
    for (std::size_t r = 1; r <= dec->c.size(); ++r) {
        const Int& cr = dec->c[r - 1];
        if (cr == 0) continue;
        if (r > on_relators.size())
            throw std::invalid_argument("RelatorHom::eval: insufficient precision for relator " +
                                        std::to_string(r));
        total += cr * on_relators[r - 1];
    }
    return total;
}

Int phi_alpha(const DigitName& alpha, const FreeWord& w) {
    return RelatorHom::from_name(alpha).eval(w);
}

LiftResult lift_phi_alpha(const DigitName& alpha, int depth) {
    if (depth < 0) throw std::invalid_argument("lift_phi_alpha: negative depth");
    if (alpha.precision() < depth)
        throw std::invalid_argument("lift_phi_alpha: precision below requested depth");
    const Int& p = alpha.p.value();
    LiftResult out;
    std::vector<Int> b;
    Int prev = 0;  // b_{k-1}, with b_0 = 0 matching a_1 = -p b_1
    for (int k = 1; k <= depth; ++k) {
        Int num = prev - alpha.digit(k);
        if (num % p != 0) {
            out.failed_depth = k;
            return out;
        }
        prev = num / p;
        b.push_back(prev);
    }
    out.witness = LiftWitness{std::move(b)};
    return out;
}

FreeWord u_prufer(const PruferElement& x) {
    if (x.is_zero()) return FreeWord{};
    return FreeWord::generator(x.exponent(), x.residue());
}

FreeWord g_prufer(const PruferElement& x, const PruferElement& y) {
    FreeWord w = u_prufer(x) + u_prufer(y) - u_prufer(prufer_add(x, y).value);
    if (!r_decompose(x.prime(), w))
        throw std::logic_error("g_prufer: transversal defect left R");
    return w;
}

Int c_alpha(const CanonicalPadic& alpha, const PruferElement& x, const PruferElement& y) {
    require_same_prime(x.prime(), y.prime(), "c_alpha");
    require_same_prime(alpha.prime(), x.prime(), "c_alpha");
    if (x.is_zero() || y.is_zero()) return 0;

    const PruferElement& hi = x.exponent() >= y.exponent() ? x : y;
    const PruferElement& lo = x.exponent() >= y.exponent() ? y : x;
    const int n = hi.exponent(), k = lo.exponent();
    if (alpha.precision() < n)
        throw std::invalid_argument("c_alpha: insufficient precision for exponent " +
                                    std::to_string(n));
    const Int& p = alpha.prime().value();
    const Int pn = ipow(p, n);

    // d = 1 iff the canonical representatives sum to >= 1.
    const Int lifted = hi.residue() + lo.residue() * ipow(p, n - k);
    const int d = lifted >= pn ? 1 : 0;

    if (k < n) return lo.residue() * block_value(alpha, k, n) - d * block_value(alpha, 0, n);

    // Equal exponents. i + j = p^{n-k'} v + d p^n with p not dividing v,
    // except when the sum is exactly p^n and x + y = 0.
    if (lifted == pn) return -block_value(alpha, 0, n);
    Int t = lifted % pn;
    int e = valuation(t, p);
    Int v = t / ipow(p, e);
    return -v * block_value(alpha, n - e, n) - d * block_value(alpha, 0, n);
}

Cocycle<PruferCarrier, ZCarrier> c_alpha_cocycle(const CanonicalPadic& alpha) {
    PruferCarrier h{alpha.prime()};
    return Cocycle<PruferCarrier, ZCarrier>{
        h, ZCarrier{},
        [alpha](const PruferElement& x, const PruferElement& y) { return c_alpha(alpha, x, y); },
        "c_alpha"};
}

Int g_cm(const Int& k, const Int& l, int m) {
    if (m < 1) throw std::invalid_argument("g_cm: modulus must be >= 1");
    if (k < 0 || k >= m || l < 0 || l >= m) throw std::out_of_range("g_cm: residue out of range");
    return k + l < m ? Int(0) : Int(m);
}

Cocycle<CmCarrier, ZCarrier> phi_cm(const Int& a_theta, int m) {
    CmCarrier c{m};
    Int a = a_theta;
    return Cocycle<CmCarrier, ZCarrier>{c, ZCarrier{},
                                        [a, m](const Int& k, const Int& l) {
                                            return g_cm(k, l, m) == 0 ? Int(0) : a;
                                        },
                                        "(" + a_theta.str() + "/" + std::to_string(m) + ")g"};
}

Int gamma_cm(const Cocycle<CmCarrier, ZCarrier>& f) {
    Int total = 0;
    for (int k = 1; k <= f.domain.m - 1; ++k) total += f(Int(k), Int(1));
    return total;
}

PruferElement PruferPresentation::gen(int index) const {
    if (index < 0) throw std::out_of_range("PruferPresentation::gen: negative index");
    if (index == 0) return PruferElement(p);  // e_0 maps to 1, which is 0 mod Z
    return PruferElement::make(p, 1, index);
}

Int CmPresentation::gen(int index) const {
    if (index != 0)
        throw std::out_of_range("CmPresentation::gen: the presentation has a single generator");
    return Int(1 % m);
}

}  // namespace extlab
