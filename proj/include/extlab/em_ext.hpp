#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "extlab/cocycle.hpp"
#include "extlab/integer.hpp"
#include "extlab/padic.hpp"

namespace extlab {

// Element of the free abelian group on e_0, e_1, ... as a finitely
// supported exponent vector (trailing zeros stripped).
struct FreeWord {
    std::vector<Int> exp;

    static FreeWord generator(int index, Int coeff = 1);

    bool is_zero() const { return exp.empty(); }
    int top_index() const { return static_cast<int>(exp.size()) - 1; }
    Int coeff(int index) const;

    void trim();
    FreeWord& operator+=(const FreeWord& o);
    FreeWord& operator-=(const FreeWord& o);
    friend FreeWord operator+(FreeWord a, const FreeWord& b) { return a += b; }
    friend FreeWord operator-(FreeWord a, const FreeWord& b) { return a -= b; }
    FreeWord operator-() const;
    FreeWord scaled(const Int& c) const;

    friend bool operator==(const FreeWord& a, const FreeWord& b) { return a.exp == b.exp; }
    friend bool operator!=(const FreeWord& a, const FreeWord& b) { return !(a == b); }
};

std::string to_string(const FreeWord& w);
std::ostream& operator<<(std::ostream& os, const FreeWord& w);

struct FreeWordCarrier {
    using value_type = FreeWord;
    FreeWord add(const FreeWord& a, const FreeWord& b) const { return a + b; }
    FreeWord neg(const FreeWord& a) const { return -a; }
    FreeWord zero() const { return FreeWord{}; }
    bool eq(const FreeWord& a, const FreeWord& b) const { return a == b; }
    bool less(const FreeWord& a, const FreeWord& b) const { return a.exp < b.exp; }
    std::string str(const FreeWord& a) const { return to_string(a); }
    std::string desc() const { return "F"; }
};

// A word spelled letter by letter: each letter is a basis generator or its
// inverse. Telescoping evaluations consume words in this form.
struct GenLetter {
    int gen = 0;
    bool inverse = false;
};
using GenWord = std::vector<GenLetter>;

FreeWord word_sum(const GenWord& w);

// Spells c * e_index as |c| letters (inverted when c < 0), appended to out.
void append_letters(GenWord& out, int index, const Int& c);

// Expression of a word in the basis of R: coefficient c0 of e_0 and
// coefficients c[r-1] of the relators e_{r-1} - p e_r, r >= 1.
struct RelatorDecomposition {
    Int c0;
    std::vector<Int> c;

    FreeWord recombine(const Prime& p) const;
};

// Unique decomposition over the relator basis, or nullopt when the word is
// not in R (equivalently sum_n w_n p^{-n} is not an integer). Runs the
// top-down recursion c_r = (c_{r+1} - w_r) / p.
std::optional<RelatorDecomposition> r_decompose(const Prime& p, const FreeWord& w);

// Homomorphism R -> Z given by its values on the relator basis: on_e0 on
// e_0 and on_relators[r-1] on e_{r-1} - p e_r. A digit name alpha induces
// one with on_e0 = 0 and on_relators = its digits.
struct RelatorHom {
    Prime p;
    Int on_e0;
    std::vector<Int> on_relators;

    static RelatorHom from_name(const DigitName& alpha);
    static RelatorHom from_values(const Prime& p, Int on_e0, std::vector<Int> on_relators);

    // Throws std::invalid_argument when w is not in R or when the
    // decomposition needs relator values beyond those provided.
    Int eval(const FreeWord& w) const;
};

// phi_alpha(w) for w in R; consumes digits of alpha up to the highest
// relator index appearing in the decomposition of w.
Int phi_alpha(const DigitName& alpha, const FreeWord& w);

// Witness b_1..b_D for the membership of phi_alpha in the extendable
// homomorphisms, to finite depth: a_1 = -p b_1 and a_k - b_{k-1} = -p b_k.
// Success to depth D is necessary for the named p-adic to be zero, and
// sufficient only in the limit.
struct LiftWitness {
    std::vector<Int> b;
};

struct LiftResult {
    std::optional<LiftWitness> witness;
    int failed_depth = 0;  // first k whose division fails; 0 on success

    bool ok() const { return witness.has_value(); }
};

// Requires precision >= depth.
LiftResult lift_phi_alpha(const DigitName& alpha, int depth);

// Transversal H -> F of the Pruefer presentation: 0 -> 0 and i/p^n -> i e_n.
FreeWord u_prufer(const PruferElement& x);

// Cocycle of that transversal, u(x) + u(y) - u(x+y); always lands in R
// (checked, a failure would be an arithmetic bug).
FreeWord g_prufer(const PruferElement& x, const PruferElement& y);

// Closed form of phi_alpha(g_prufer(x, y)). Requires alpha canonical with
// precision >= max exponent of x, y.
Int c_alpha(const CanonicalPadic& alpha, const PruferElement& x, const PruferElement& y);

// c_alpha wrapped as a cocycle object on Z(p^inf).
Cocycle<PruferCarrier, ZCarrier> c_alpha_cocycle(const CanonicalPadic& alpha);

// The C_m instance over F = Z, R = mZ with representatives 0..m-1:
// g([k],[l]) = k + l - (k + l mod m), which is 0 or m.
Int g_cm(const Int& k, const Int& l, int m);

// theta composed with g for theta(m) = a_theta: values (a_theta/m) g, an
// integer since g is 0 or m.
Cocycle<CmCarrier, ZCarrier> phi_cm(const Int& a_theta, int m);

// Recovers a_theta = sum_{k=1..m-1} f([k],[1]) from a cocycle on C_m.
Int gamma_cm(const Cocycle<CmCarrier, ZCarrier>& f);

// Lemma-style coboundary witness on a free carrier: the unique phi with
// phi(generators) = 0 and h(x,y) = phi(x+y) - phi(x) - phi(y), evaluated by
// telescoping over the letters of w. Independent of the letter order.
template <Carrier A>
typename A::value_type free_phi_eval(const Cocycle<FreeWordCarrier, A>& h, const GenWord& w) {
    const A& cod = h.codomain;
    auto total = cod.zero();
    FreeWord partial;
    for (std::size_t i = 0; i < w.size(); ++i) {
        FreeWord letter = FreeWord::generator(w[i].gen, w[i].inverse ? Int(-1) : Int(1));
        if (w[i].inverse) {
            // phi(-z) = -h(-z, z), from 0 = phi(z) + phi(-z) + h(z,-z).
            total = cod.add(total, cod.neg(h(letter, -letter)));
        }
        if (i > 0) total = cod.add(total, h(partial, letter));
        partial += letter;
    }
    return total;
}

// Presentations of H = F/R that gamma_general understands: image of each
// basis generator in H and membership of exponent vectors in R.
struct PruferPresentation {
    using carrier_type = PruferCarrier;

    Prime p;
    PruferCarrier carrier{p};

    PruferElement gen(int index) const;
    bool member(const FreeWord& w) const { return r_decompose(p, w).has_value(); }
};

// F = Z with the single generator e_0 and R = mZ.
struct CmPresentation {
    using carrier_type = CmCarrier;

    int m = 1;
    CmCarrier carrier{m};

    Int gen(int index) const;  // index must be 0
    bool member(const FreeWord& w) const { return w.top_index() <= 0 && w.coeff(0) % m == 0; }
};

// Explicit evaluation of the induced homomorphism R -> A from a cocycle f
// on H: for a word w = x_1 ... x_n of generators/inverses lying in R,
//   theta(w) = -sum_{i in I} f([x_i], -[x_i])
//              + sum_{k=1..n-1} f([x_1]+...+[x_k], [x_{k+1}]),
// with I the inverse positions. Independent of the representing word.
template <typename Pres, Carrier A>
typename A::value_type gamma_general(const Pres& pres,
                                     const Cocycle<typename Pres::carrier_type, A>& f,
                                     const GenWord& w) {
    if (!pres.member(word_sum(w)))
        throw std::invalid_argument("gamma_general: word does not lie in R");
    const auto& dom = f.domain;
    const A& cod = f.codomain;
    auto total = cod.zero();
    auto partial = dom.zero();
    for (std::size_t i = 0; i < w.size(); ++i) {
        auto image = pres.gen(w[i].gen);
        if (w[i].inverse) image = dom.neg(image);
        if (w[i].inverse) total = cod.add(total, cod.neg(f(image, dom.neg(image))));
        if (i > 0) total = cod.add(total, f(partial, image));
        partial = dom.add(partial, image);
    }
    return total;
}

// theta composed with a word-valued transversal cocycle g on H.
template <Carrier HC>
Cocycle<HC, ZCarrier> phi_general(
    HC h, std::function<Int(const FreeWord&)> theta,
    std::function<FreeWord(const typename HC::value_type&, const typename HC::value_type&)> g,
    std::string name) {
    return Cocycle<HC, ZCarrier>{
        h, ZCarrier{},
        [theta, g](const typename HC::value_type& x, const typename HC::value_type& y) {
            return theta(g(x, y));
        },
        std::move(name)};
}

}  // namespace extlab
