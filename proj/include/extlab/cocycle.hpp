#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "extlab/integer.hpp"
#include "extlab/padic.hpp"

namespace extlab {

// A carrier bundles an abelian group's element type with its operations,
// a deterministic total order on normal forms, and a rendering.
template <typename G>
concept Carrier = requires(const G& g, const typename G::value_type& x,
                           const typename G::value_type& y) {
    { g.add(x, y) } -> std::convertible_to<typename G::value_type>;
    { g.neg(x) } -> std::convertible_to<typename G::value_type>;
    { g.zero() } -> std::convertible_to<typename G::value_type>;
    { g.eq(x, y) } -> std::convertible_to<bool>;
    { g.less(x, y) } -> std::convertible_to<bool>;
    { g.str(x) } -> std::convertible_to<std::string>;
    { g.desc() } -> std::convertible_to<std::string>;
};

struct ZCarrier {
    using value_type = Int;
    Int add(const Int& a, const Int& b) const { return a + b; }
    Int neg(const Int& a) const { return -a; }
    Int zero() const { return 0; }
    bool eq(const Int& a, const Int& b) const { return a == b; }
    bool less(const Int& a, const Int& b) const { return a < b; }
    std::string str(const Int& a) const { return a.str(); }
    std::string desc() const { return "Z"; }
};

// Residues 0..m-1 of the cyclic group C_m.
struct CmCarrier {
    int m = 1;
    using value_type = Int;
    Int add(const Int& a, const Int& b) const { return (a + b) % m; }
    Int neg(const Int& a) const { return (m - a % m) % m; }
    Int zero() const { return 0; }
    bool eq(const Int& a, const Int& b) const { return a == b; }
    bool less(const Int& a, const Int& b) const { return a < b; }
    std::string str(const Int& a) const { return a.str(); }
    std::string desc() const { return "C_" + std::to_string(m); }
};

struct ZInvPCarrier {
    Prime p;
    using value_type = PInvRational;
    PInvRational add(const PInvRational& a, const PInvRational& b) const { return a + b; }
    PInvRational neg(const PInvRational& a) const { return -a; }
    PInvRational zero() const { return PInvRational(p); }
    bool eq(const PInvRational& a, const PInvRational& b) const { return a == b; }
    bool less(const PInvRational& a, const PInvRational& b) const { return field_less(a, b); }
    std::string str(const PInvRational& a) const { return to_string(a); }
    std::string desc() const { return "Z[1/" + p.value().str() + "]"; }
};

struct PruferCarrier {
    Prime p;
    using value_type = PruferElement;
    PruferElement add(const PruferElement& a, const PruferElement& b) const {
        return prufer_add(a, b).value;
    }
    PruferElement neg(const PruferElement& a) const { return prufer_neg(a); }
    PruferElement zero() const { return PruferElement(p); }
    bool eq(const PruferElement& a, const PruferElement& b) const { return a == b; }
    bool less(const PruferElement& a, const PruferElement& b) const { return field_less(a, b); }
    std::string str(const PruferElement& a) const { return to_string(a); }
    std::string desc() const { return "Z(" + p.value().str() + "^inf)"; }
};

// Symmetric 2-cocycle from C x C to A, carried as an evaluation rule.
template <Carrier C, Carrier A>
struct Cocycle {
    using domain_value = typename C::value_type;
    using codomain_value = typename A::value_type;

    C domain;
    A codomain;
    std::function<codomain_value(const domain_value&, const domain_value&)> rule;
    std::string name;

    codomain_value operator()(const domain_value& u, const domain_value& v) const {
        return rule(u, v);
    }
};

// 1-cochain phi: C -> A with phi(0) = 0 (the zero value is the caller's
// responsibility when built from a raw rule).
template <Carrier C, Carrier A>
struct Cochain {
    using domain_value = typename C::value_type;
    using codomain_value = typename A::value_type;

    C domain;
    A codomain;
    std::function<codomain_value(const domain_value&)> rule;

    codomain_value operator()(const domain_value& u) const { return rule(u); }
};

template <Carrier C, Carrier A>
Cocycle<C, A> zero_cocycle(C c, A a) {
    return Cocycle<C, A>{c, a,
                         [a](const typename C::value_type&, const typename C::value_type&) {
                             return a.zero();
                         },
                         "0"};
}

// delta phi: (u, v) -> phi(u) + phi(v) - phi(u+v).
template <Carrier C, Carrier A>
Cocycle<C, A> coboundary_of(const Cochain<C, A>& phi) {
    C c = phi.domain;
    A a = phi.codomain;
    auto rule = phi.rule;
    return Cocycle<C, A>{
        c, a,
        [c, a, rule](const typename C::value_type& u, const typename C::value_type& v) {
            return a.add(a.add(rule(u), rule(v)), a.neg(rule(c.add(u, v))));
        },
        "delta(phi)"};
}

template <Carrier C, Carrier A>
Cocycle<C, A> cocycle_sub(const Cocycle<C, A>& f1, const Cocycle<C, A>& f2) {
    A a = f1.codomain;
    auto r1 = f1.rule;
    auto r2 = f2.rule;
    return Cocycle<C, A>{f1.domain, a,
                         [a, r1, r2](const typename C::value_type& u,
                                     const typename C::value_type& v) {
                             return a.add(r1(u, v), a.neg(r2(u, v)));
                         },
                         f1.name + " - " + f2.name};
}

// Subtracts the constant f(0,0), yielding a normalized cocycle.
template <Carrier C, Carrier A>
Cocycle<C, A> normalize(const Cocycle<C, A>& f) {
    A a = f.codomain;
    auto rule = f.rule;
    auto c0 = f.rule(f.domain.zero(), f.domain.zero());
    return Cocycle<C, A>{f.domain, a,
                         [a, rule, c0](const typename C::value_type& u,
                                       const typename C::value_type& v) {
                             return a.add(rule(u, v), a.neg(c0));
                         },
                         f.name + " normalized"};
}

// Pair (u, a) of the extension E_f on C x A.
template <Carrier C, Carrier A>
struct ExtensionElement {
    typename C::value_type u;
    typename A::value_type a;
};

template <Carrier C, Carrier A>
ExtensionElement<C, A> ext_add(const Cocycle<C, A>& f, const ExtensionElement<C, A>& x,
                               const ExtensionElement<C, A>& y) {
    return ExtensionElement<C, A>{f.domain.add(x.u, y.u),
                                  f.codomain.add(f.codomain.add(x.a, y.a), f(x.u, y.u))};
}

template <Carrier C, Carrier A>
ExtensionElement<C, A> ext_neg(const Cocycle<C, A>& f, const ExtensionElement<C, A>& x) {
    auto nu = f.domain.neg(x.u);
    return ExtensionElement<C, A>{nu,
                                  f.codomain.neg(f.codomain.add(x.a, f(x.u, nu)))};
}

// E_f itself as a carrier, so the generic axiom checks apply to it.
template <Carrier C, Carrier A>
struct ExtensionCarrier {
    using value_type = ExtensionElement<C, A>;

    Cocycle<C, A> f;

    value_type add(const value_type& x, const value_type& y) const { return ext_add(f, x, y); }
    value_type neg(const value_type& x) const { return ext_neg(f, x); }
    value_type zero() const { return value_type{f.domain.zero(), f.codomain.zero()}; }
    bool eq(const value_type& x, const value_type& y) const {
        return f.domain.eq(x.u, y.u) && f.codomain.eq(x.a, y.a);
    }
    bool less(const value_type& x, const value_type& y) const {
        if (!f.domain.eq(x.u, y.u)) return f.domain.less(x.u, y.u);
        return f.codomain.less(x.a, y.a);
    }
    std::string str(const value_type& x) const {
        return "(" + f.domain.str(x.u) + ", " + f.codomain.str(x.a) + ")";
    }
    std::string desc() const { return "E_" + f.name + "(" + f.domain.desc() + " x " + f.codomain.desc() + ")"; }
};

enum class ViolationKind { symmetry, normalization, identity };

template <Carrier C, Carrier A>
struct CocycleViolation {
    ViolationKind kind;
    typename C::value_type u, v, w;  // w meaningful for identity only
    typename A::value_type lhs, rhs;
};

template <Carrier C, Carrier A>
struct VerifyReport {
    std::vector<CocycleViolation<C, A>> violations;  // scan order, capped
    std::uint64_t total_violations = 0;
    std::uint64_t checked_pairs = 0;
    std::uint64_t checked_triples = 0;

    bool pass() const { return total_violations == 0; }
};

struct VerifyOptions {
    std::size_t max_recorded_violations = 64;
};

// Checks symmetry, f(u,0) = 0, and the cocycle identity
//   f(u,v) + f(u+v,w) = f(v,w) + f(u,v+w)
// over every pair/triple from the window, scanning in the carrier order so
// the first recorded violation is the lexicographically least one.
//
// Evaluations are tabulated over the window's one-step sum closure, so f
// must be defined there (the caller picks windows with that in mind).
template <Carrier C, Carrier A>
VerifyReport<C, A> verify_cocycle(const Cocycle<C, A>& f,
                                  std::vector<typename C::value_type> window,
                                  const VerifyOptions& opts = {}) {
    using CV = typename C::value_type;
    const C& dom = f.domain;
    const A& cod = f.codomain;

    auto cmp = [&dom](const CV& a, const CV& b) { return dom.less(a, b); };
    std::sort(window.begin(), window.end(), cmp);
    window.erase(std::unique(window.begin(), window.end(),
                             [&dom](const CV& a, const CV& b) { return dom.eq(a, b); }),
                 window.end());

    VerifyReport<C, A> report;
    if (window.empty()) return report;

    // Closure S = window, zero, and all pairwise sums; everything f touches.
    std::map<CV, int, decltype(cmp)> index(cmp);
    std::vector<CV> closure;
    auto intern = [&](const CV& x) {
        auto it = index.find(x);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(closure.size());
        index.emplace(x, id);
        closure.push_back(x);
        return id;
    };
    intern(dom.zero());
    for (const CV& u : window) intern(u);

    const std::size_t nw = window.size();
    std::vector<int> widx(nw);
    for (std::size_t i = 0; i < nw; ++i) widx[i] = index.at(window[i]);

    std::vector<int> sum_idx(nw * nw);
    for (std::size_t i = 0; i < nw; ++i)
        for (std::size_t j = 0; j < nw; ++j)
            sum_idx[i * nw + j] = intern(dom.add(window[i], window[j]));

    const std::size_t ns = closure.size();
    std::vector<typename A::value_type> table(ns * ns);
    for (std::size_t i = 0; i < ns; ++i)
        for (std::size_t j = 0; j < ns; ++j) table[i * ns + j] = f(closure[i], closure[j]);
    auto fval = [&](int i, int j) -> const typename A::value_type& {
        return table[static_cast<std::size_t>(i) * ns + static_cast<std::size_t>(j)];
    };

    auto record = [&](CocycleViolation<C, A> v) {
        ++report.total_violations;
        if (report.violations.size() < opts.max_recorded_violations)
            report.violations.push_back(std::move(v));
    };

    const int zero_id = index.at(dom.zero());
    for (std::size_t i = 0; i < nw; ++i) {
        const auto& val = fval(widx[i], zero_id);
        if (!cod.eq(val, cod.zero()))
            record({ViolationKind::normalization, window[i], dom.zero(), dom.zero(), val,
                    cod.zero()});
    }

    for (std::size_t i = 0; i < nw; ++i)
        for (std::size_t j = i + 1; j < nw; ++j) {
            ++report.checked_pairs;
            const auto& ab = fval(widx[i], widx[j]);
            const auto& ba = fval(widx[j], widx[i]);
            if (!cod.eq(ab, ba))
                record({ViolationKind::symmetry, window[i], window[j], dom.zero(), ab, ba});
        }

    for (std::size_t i = 0; i < nw; ++i)
        for (std::size_t j = 0; j < nw; ++j) {
            const int ij = sum_idx[i * nw + j];
            for (std::size_t k = 0; k < nw; ++k) {
                ++report.checked_triples;
                const int jk = sum_idx[j * nw + k];
                auto lhs = cod.add(fval(widx[i], widx[j]), fval(ij, widx[k]));
                auto rhs = cod.add(fval(widx[j], widx[k]), fval(widx[i], jk));
                if (!cod.eq(lhs, rhs))
                    record({ViolationKind::identity, window[i], window[j], window[k],
                            std::move(lhs), std::move(rhs)});
            }
        }

    return report;
}

struct AxiomFailure {
    std::string law;
    std::string detail;
};

struct AxiomReport {
    std::vector<AxiomFailure> failures;
    bool pass() const { return failures.empty(); }
};

// Commutativity, associativity, identity and inverse laws over a finite
// window, by direct evaluation.
template <Carrier G>
AxiomReport check_group_axioms(const G& g, std::vector<typename G::value_type> window,
                                  std::size_t max_failures = 16) {
    using V = typename G::value_type;
    auto cmp = [&g](const V& a, const V& b) { return g.less(a, b); };
    std::sort(window.begin(), window.end(), cmp);
    window.erase(std::unique(window.begin(), window.end(),
                             [&g](const V& a, const V& b) { return g.eq(a, b); }),
                 window.end());

    AxiomReport report;
    auto fail = [&](std::string law, std::string detail) {
        if (report.failures.size() < max_failures)
            report.failures.push_back({std::move(law), std::move(detail)});
    };

    const V zero = g.zero();
    for (const V& x : window) {
        if (!g.eq(g.add(x, zero), x)) fail("identity", g.str(x));
        if (!g.eq(g.add(x, g.neg(x)), zero)) fail("inverse", g.str(x));
        if (!report.failures.empty() && report.failures.size() >= max_failures) return report;
    }
    for (const V& x : window)
        for (const V& y : window)
            if (!g.eq(g.add(x, y), g.add(y, x))) {
                fail("commutativity", g.str(x) + ", " + g.str(y));
                if (report.failures.size() >= max_failures) return report;
            }
    for (const V& x : window)
        for (const V& y : window) {
            const V xy = g.add(x, y);
            for (const V& z : window)
                if (!g.eq(g.add(xy, z), g.add(x, g.add(y, z)))) {
                    fail("associativity", g.str(x) + ", " + g.str(y) + ", " + g.str(z));
                    if (report.failures.size() >= max_failures) return report;
                }
        }
    return report;
}

// Decides whether an integer-valued cocycle on C_m is a coboundary. The
// telescoping sum S = sum_{k=1..m-1} d([k],[1]) equals m * phi([1]) for any
// witness, so m | S is necessary; on success the reconstructed witness is
// re-verified pointwise, and failure of that re-verification means d was
// not a cocycle in the first place.
//
// Returns the witness as the value list (phi([0]), ..., phi([m-1])).
inline std::optional<std::vector<Int>> is_coboundary_cm(const Cocycle<CmCarrier, ZCarrier>& d) {
    const int m = d.domain.m;
    Int s = 0;
    for (int k = 1; k <= m - 1; ++k) s += d(Int(k), Int(1));
    if (s % m != 0) return std::nullopt;

    std::vector<Int> phi(static_cast<std::size_t>(m), Int(0));
    if (m > 1) phi[1] = s / m;
    for (int k = 1; k <= m - 2; ++k) phi[static_cast<std::size_t>(k + 1)] = phi[static_cast<std::size_t>(k)] + phi[1] - d(Int(k), Int(1));

    for (int u = 0; u < m; ++u)
        for (int v = 0; v < m; ++v) {
            Int expect = phi[static_cast<std::size_t>(u)] + phi[static_cast<std::size_t>(v)] -
                         phi[static_cast<std::size_t>((u + v) % m)];
            if (expect != d(Int(u), Int(v)))
                throw std::domain_error(
                    "is_coboundary_cm: reconstruction mismatch at (" + std::to_string(u) + ", " +
                    std::to_string(v) + "); input is not a cocycle");
        }
    return phi;
}

inline Cochain<CmCarrier, ZCarrier> cm_cochain(int m, std::vector<Int> values) {
    CmCarrier c{m};
    auto table = std::make_shared<std::vector<Int>>(std::move(values));
    return Cochain<CmCarrier, ZCarrier>{
        c, ZCarrier{},
        [table](const Int& u) { return (*table)[static_cast<std::size_t>(u)]; }};
}

}  // namespace extlab
