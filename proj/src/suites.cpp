#include "extlab/suites.hpp"

#include <vector>

#include "extlab/windows.hpp"

namespace extlab::suites {

namespace {

template <Carrier C, Carrier A>
std::string first_violation(const Cocycle<C, A>& f, const VerifyReport<C, A>& r) {
    if (r.pass()) return {};
    const auto& v = r.violations.front();
    const char* kind = v.kind == ViolationKind::symmetry ? "symmetry"
                       : v.kind == ViolationKind::normalization ? "normalization"
                                                                : "identity";
    return std::string(kind) + " fails at (" + f.domain.str(v.u) + ", " + f.domain.str(v.v) +
           ", " + f.domain.str(v.w) + "): " + f.codomain.str(v.lhs) +
           " != " + f.codomain.str(v.rhs) + " [" + std::to_string(r.total_violations) +
           " violations]";
}

Cocycle<ZInvPCarrier, ZCarrier> api_cocycle(const ApiGroup& g, int version) {
    ZInvPCarrier c{g.prime()};
    auto shared = std::make_shared<ApiGroup>(g);
    return Cocycle<ZInvPCarrier, ZCarrier>{
        c, ZCarrier{},
        [shared, version](const PInvRational& u, const PInvRational& v) {
            return version == 1 ? shared->cocycle_v1(u, v) : shared->cocycle_v2(u, v);
        },
        version == 1 ? "v1" : "v2"};
}

std::string pair_str(const PInvRational& u, const PInvRational& v) {
    return "(" + to_string(u) + ", " + to_string(v) + ")";
}

}  // namespace

CheckResult check_c_alpha_axioms(const CanonicalPadic& alpha, int max_exp) {
    CheckResult out;
    out.label = "cocycle axioms for c_alpha, p=" + alpha.prime().value().str() +
                ", alpha=" + to_string(alpha.as_name()) + ", exp<=" + std::to_string(max_exp);
    auto f = c_alpha_cocycle(alpha);
    auto report = verify_cocycle(f, prufer_window(alpha.prime(), max_exp));
    out.pass = report.pass();
    out.detail = first_violation(f, report);
    return out;
}

CheckResult check_api_axioms(const ApiGroup& g, int version, int max_frac, int max_int) {
    CheckResult out;
    out.label = "cocycle axioms for v" + std::to_string(version) +
                ", p=" + g.prime().value().str() + ", frac<=" + std::to_string(max_frac) +
                ", |int|<=" + std::to_string(max_int);
    auto f = api_cocycle(g, version);
    auto report = verify_cocycle(f, zinvp_window(g.prime(), max_frac, max_int));
    out.pass = report.pass();
    out.detail = first_violation(f, report);
    return out;
}

CheckResult check_gcm_axioms(int m) {
    CheckResult out;
    out.label = "cocycle axioms for g_cm, m=" + std::to_string(m);
    CmCarrier c{m};
    Cocycle<CmCarrier, ZCarrier> f{
        c, ZCarrier{}, [m](const Int& k, const Int& l) { return g_cm(k, l, m); }, "g"};
    auto report = verify_cocycle(f, cm_window(m));
    out.pass = report.pass();
    out.detail = first_violation(f, report);
    return out;
}

CheckResult check_c_alpha_oracle(const CanonicalPadic& alpha, int max_exp) {
    CheckResult out;
    out.label = "c_alpha matches phi_alpha of the transversal defect, p=" +
                alpha.prime().value().str() + ", exp<=" + std::to_string(max_exp);
    auto name = alpha.as_name();
    auto window = prufer_window(alpha.prime(), max_exp);
    for (const auto& x : window)
        for (const auto& y : window) {
            Int closed = c_alpha(alpha, x, y);
            Int composite = phi_alpha(name, g_prufer(x, y));
            if (closed != composite) {
                out.pass = false;
                out.detail = "(" + to_string(x) + ", " + to_string(y) + "): " + closed.str() +
                             " != " + composite.str();
                return out;
            }
        }
    return out;
}

CheckResult check_api_oracle(const ApiGroup& g, int version, int max_frac, int max_int) {
    CheckResult out;
    out.label = "v" + std::to_string(version) +
                " matches its transversal coboundary, p=" + g.prime().value().str();
    auto window = zinvp_window(g.prime(), max_frac, max_int);
    for (const auto& u : window)
        for (const auto& v : window) {
            auto phi = [&](const PInvRational& q) {
                return version == 1 ? g.transversal_v1(q) : g.transversal_v2(q);
            };
            ApiElement diff = g.add(g.add(phi(u), phi(v)), g.neg(phi(u + v)));
            auto fiber = g.mu_inverse(diff);
            if (!fiber) {
                out.pass = false;
                out.detail = pair_str(u, v) + ": coboundary left <a2>: " + to_string(diff);
                return out;
            }
            Int closed = version == 1 ? g.cocycle_v1(u, v) : g.cocycle_v2(u, v);
            if (closed != *fiber) {
                out.pass = false;
                out.detail = pair_str(u, v) + ": " + closed.str() + " != " + fiber->str();
                return out;
            }
        }
    return out;
}

CheckResult check_cm_roundtrip(int m) {
    CheckResult out;
    out.label = "gamma(phi(a)) = a on C_" + std::to_string(m);
    for (Int a = 0; a < m; ++a) {
        Int back = gamma_cm(phi_cm(a, m));
        if (back != a) {
            out.pass = false;
            out.detail = "a=" + a.str() + " came back as " + back.str();
            return out;
        }
    }
    if (m >= 2) {
        Int colsum = 0;
        for (int k = 1; k <= m - 1; ++k) colsum += g_cm(Int(k), Int(1), m);
        if (colsum != m) {
            out.pass = false;
            out.detail = "sum_k g([k],[1]) = " + colsum.str() + " != " + std::to_string(m);
        }
    }
    return out;
}

CheckResult check_cm_coboundary(int m) {
    CheckResult out;
    out.label = "phi_cm(a) is a coboundary iff m | a, m=" + std::to_string(m);
    for (Int a = 0; a < 2 * m; ++a) {
        auto f = phi_cm(a, m);
        auto phi = is_coboundary_cm(f);
        if (phi.has_value() != (a % m == 0)) {
            out.pass = false;
            out.detail = "a=" + a.str() + ": witness " + (phi ? "found" : "missing");
            return out;
        }
        if (phi) {
            auto d = coboundary_of(cm_cochain(m, *phi));
            for (const Int& u : cm_window(m))
                for (const Int& v : cm_window(m))
                    if (d(u, v) != f(u, v)) {
                        out.pass = false;
                        out.detail = "a=" + a.str() + ": reconstruction differs at (" + u.str() +
                                     ", " + v.str() + ")";
                        return out;
                    }
        }
    }
    return out;
}

CheckResult check_lift(const DigitName& alpha, int depth) {
    CheckResult out;
    out.label = "lift of (" + to_string(alpha) + "), p=" + alpha.p.value().str() +
                ", depth " + std::to_string(depth);
    DigitName padded = alpha;
    while (padded.precision() < depth) padded.digits.emplace_back(0);
    auto r = lift_phi_alpha(padded, depth);
    if (!r.ok()) {
        out.pass = false;
        out.detail = "divisibility fails at depth " + std::to_string(r.failed_depth);
    }
    return out;
}

CheckResult check_api_relations(const ApiGroup& g, int max_index) {
    CheckResult out;
    out.label = "defining relations of A_pi, p=" + g.prime().value().str() +
                ", positions <= " + std::to_string(max_index + 1);
    const Int p = g.prime().value();
    auto times_p = [&](const ApiElement& y) { return g.scaled(y, p); };

    if (times_p(g.x(1)) != g.add(g.a1(), g.a2(g.pi().s(0)))) {
        out.pass = false;
        out.detail = "p x_1 != a1 + s_0 a2";
        return out;
    }
    for (int i = 1; i <= max_index; ++i) {
        if (times_p(g.x(i + 1)) != g.add(g.x(i), g.a2(g.pi().s(i)))) {
            out.pass = false;
            out.detail = "p x_" + std::to_string(i + 1) + " != x_" + std::to_string(i) + " + s_" +
                         std::to_string(i) + " a2";
            return out;
        }
    }
    return out;
}

CheckResult check_api_nu(const ApiGroup& g, int max_len, int coeff_bound) {
    CheckResult out;
    out.label = "nu is a homomorphism agreeing with the case split, p=" +
                g.prime().value().str();
    auto window = api_window(g.prime(), max_len, coeff_bound);
    for (const auto& y1 : window)
        for (const auto& y2 : window)
            if (g.nu(g.add(y1, y2)) != g.nu(y1) + g.nu(y2)) {
                out.pass = false;
                out.detail = "not additive at " + to_string(y1) + ", " + to_string(y2);
                return out;
            }
    // case split: lattice elements and k x_n + m a2
    for (int k = -coeff_bound; k <= coeff_bound; ++k)
        for (int m = -coeff_bound; m <= coeff_bound; ++m) {
            if (g.nu(g.add(g.a1(k), g.a2(m))) != PInvRational(g.prime(), k)) {
                out.pass = false;
                out.detail = "nu(k a1 + m a2) != k at k=" + std::to_string(k);
                return out;
            }
            for (int n = 1; n <= max_len; ++n) {
                if (Int(k) % g.prime().value() == 0) continue;
                ApiElement y = g.add(g.scaled(g.x(n), k), g.a2(m));
                if (g.nu(y) != PInvRational::make(g.prime(), k, n)) {
                    out.pass = false;
                    out.detail = "nu(k x_n + m a2) != k/p^n at k=" + std::to_string(k) +
                                 ", n=" + std::to_string(n);
                    return out;
                }
            }
        }
    return out;
}

CheckResult check_api_purity(const ApiGroup& g, int max_len, int coeff_bound) {
    CheckResult out;
    out.label = "<a2> is p-pure at window scale, p=" + g.prime().value().str();
    for (const auto& y : api_window(g.prime(), max_len, coeff_bound)) {
        ApiElement py = g.scaled(y, g.prime().value());
        if (g.mu_inverse(py).has_value() && !(y.m == 0 && y.r.empty())) {
            out.pass = false;
            out.detail = "p*y lies in <a2> but y = " + to_string(y) + " does not";
            return out;
        }
    }
    return out;
}

CheckResult check_api_equivalence(const ApiGroup& g, int max_frac, int max_int) {
    CheckResult out;
    out.label = "v1 - v2 = delta(psi), p=" + g.prime().value().str();
    auto window = zinvp_window(g.prime(), max_frac, max_int);
    for (const auto& u : window)
        for (const auto& v : window) {
            Int lhs = g.cocycle_v1(u, v) - g.cocycle_v2(u, v);
            Int rhs = g.psi_bridge(u) + g.psi_bridge(v) - g.psi_bridge(u + v);
            if (lhs != rhs) {
                out.pass = false;
                out.detail = pair_str(u, v) + ": " + lhs.str() + " != " + rhs.str();
                return out;
            }
        }
    return out;
}

CheckResult check_api_carry_example() {
    CheckResult out;
    out.label = "carry positions of 0.112 + 0.211 in base 3";
    Prime p3(3);
    auto u = PInvRational::make(p3, 14, 3);
    auto v = PInvRational::make(p3, 22, 3);
    if (carry_set(p3, u, v) != CarrySet{1, 2, 3}) {
        out.pass = false;
        out.detail = "carry set differs from {1,2,3}";
    }
    return out;
}

namespace {

template <Carrier C>
CheckResult axioms_to_result(const C& carrier, const std::vector<typename C::value_type>& window,
                             std::string label) {
    CheckResult out;
    out.label = std::move(label);
    auto report = check_group_axioms(carrier, window);
    if (!report.pass()) {
        out.pass = false;
        out.detail = report.failures.front().law + " fails at " + report.failures.front().detail;
    }
    return out;
}

}  // namespace

CheckResult check_ext_axioms_cm(int m, int fiber_bound) {
    std::vector<Cocycle<CmCarrier, ZCarrier>> twists;
    CmCarrier c{m};
    twists.push_back(Cocycle<CmCarrier, ZCarrier>{
        c, ZCarrier{}, [m](const Int& k, const Int& l) { return g_cm(k, l, m); }, "g"});
    twists.push_back(phi_cm(Int(1), m));

    for (const auto& f : twists) {
        ExtensionCarrier<CmCarrier, ZCarrier> ext{f};
        std::vector<ExtensionElement<CmCarrier, ZCarrier>> window;
        for (const Int& u : cm_window(m))
            for (const Int& a : z_window(fiber_bound)) window.push_back({u, a});
        auto r = axioms_to_result(ext, window,
                                  "E_f group axioms over C_" + std::to_string(m) + " x Z, f=" +
                                      f.name);
        if (!r.pass) return r;
    }
    CheckResult out;
    out.label = "E_f group axioms over C_" + std::to_string(m) + " x Z (g and phi_cm(1))";
    return out;
}

CheckResult check_ext_zlike(int m) {
    CheckResult out;
    out.label = "m copies of ([1],0) reach (0,1) under phi_cm(1," + std::to_string(m) + ")";
    auto f = phi_cm(Int(1), m);
    ExtensionElement<CmCarrier, ZCarrier> gen{Int(1 % m), Int(0)};
    ExtensionElement<CmCarrier, ZCarrier> acc{Int(0), Int(0)};
    for (int i = 0; i < m; ++i) acc = ext_add(f, acc, gen);
    if (!(acc.u == 0 && acc.a == 1)) {
        out.pass = false;
        out.detail = "reached (" + acc.u.str() + ", " + acc.a.str() + ")";
    }
    return out;
}

CheckResult check_k2_axioms(const K2Group& g, int x_bound, int max_frac, int q_int) {
    K2Carrier carrier{g};
    return axioms_to_result(carrier, k2_window(g.prime(), x_bound, max_frac, q_int),
                            "K group axioms, p=" + g.prime().value().str() + ", |x|<=" +
                                std::to_string(x_bound) + ", frac<=" + std::to_string(max_frac));
}

CheckResult check_k2_pairs(const K2Group& g, int x_bound, int max_frac, int q_int) {
    CheckResult out;
    out.label = "K pair laws, p=" + g.prime().value().str() + ", |x|<=" +
                std::to_string(x_bound) + ", frac<=" + std::to_string(max_frac);
    auto window = k2_window(g.prime(), x_bound, max_frac, q_int);
    for (const auto& a : window) {
        if (!(g.add(a, g.zero()) == a)) {
            out.pass = false;
            out.detail = "identity fails at " + to_string(a);
            return out;
        }
        if (!(g.add(a, g.neg(a)) == g.zero())) {
            out.pass = false;
            out.detail = "inverse fails at " + to_string(a);
            return out;
        }
    }
    for (const auto& a : window)
        for (const auto& b : window)
            if (!(g.add(a, b) == g.add(b, a))) {
                out.pass = false;
                out.detail = "commutativity fails at " + to_string(a) + ", " + to_string(b);
                return out;
            }
    return out;
}

CheckResult check_k2_generic(const K2Group& g, int x_bound, int max_frac, int q_int) {
    CheckResult out;
    out.label = "K operation matches the generic extension of the projected cocycle, p=" +
                g.prime().value().str();
    ZInvPCarrier base{g.prime()};
    auto shared = std::make_shared<K2Group>(g);
    Cocycle<ZInvPCarrier, ZCarrier> f{
        base, ZCarrier{},
        [shared](const PInvRational& q, const PInvRational& r) { return shared->ctilde(q, r); },
        "ctilde"};
    auto window = k2_window(g.prime(), x_bound, max_frac, q_int);
    for (const auto& a : window)
        for (const auto& b : window) {
            ExtensionElement<ZInvPCarrier, ZCarrier> ea{a.q, a.x}, eb{b.q, b.x};
            auto sum = ext_add(f, ea, eb);
            auto direct = g.add(a, b);
            if (!(direct.q == sum.u && direct.x == sum.a)) {
                out.pass = false;
                out.detail = "add differs at " + to_string(a) + " + " + to_string(b);
                return out;
            }
        }
    for (const auto& a : window) {
        ExtensionElement<ZInvPCarrier, ZCarrier> ea{a.q, a.x};
        auto n = ext_neg(f, ea);
        auto direct = g.neg(a);
        if (!(direct.q == n.u && direct.x == n.a)) {
            out.pass = false;
            out.detail = "neg differs at " + to_string(a);
            return out;
        }
    }
    return out;
}

}  // namespace extlab::suites
