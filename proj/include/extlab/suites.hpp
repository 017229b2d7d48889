#pragma once

#include <string>

#include "extlab/api_group.hpp"
#include "extlab/cocycle.hpp"
#include "extlab/em_ext.hpp"
#include "extlab/padic.hpp"
#include "extlab/rank2.hpp"

namespace extlab::suites {

// Outcome of one sweep; detail carries the first counterexample in scan
// order when failing and is empty otherwise.
struct CheckResult {
    bool pass = true;
    std::string label;
    std::string detail;
};

// Cocycle axiom sweeps (symmetry, normalization, the cocycle identity)
// over exhaustive windows.
CheckResult check_c_alpha_axioms(const CanonicalPadic& alpha, int max_exp);
CheckResult check_api_axioms(const ApiGroup& g, int version, int max_frac, int max_int);
CheckResult check_gcm_axioms(int m);

// Closed forms against their definitional routes: c_alpha against
// phi_alpha of the transversal defect, and each A_pi cocycle against the
// a2-coefficient of its transversal coboundary.
CheckResult check_c_alpha_oracle(const CanonicalPadic& alpha, int max_exp);
CheckResult check_api_oracle(const ApiGroup& g, int version, int max_frac, int max_int);

// C_m correspondence: gamma after phi is the identity on 0 <= a < m, and
// the transversal column sums to m (m >= 2).
CheckResult check_cm_roundtrip(int m);
// phi_cm(a, m) is a coboundary exactly when m divides a (a < 2m), with the
// reconstructed witness re-verified pointwise.
CheckResult check_cm_coboundary(int m);

// Wraps lift_phi_alpha; pads the name with zero digits up to depth.
CheckResult check_lift(const DigitName& alpha, int depth);

// A_pi sweeps.
CheckResult check_api_relations(const ApiGroup& g, int max_index);
CheckResult check_api_nu(const ApiGroup& g, int max_len, int coeff_bound);
CheckResult check_api_purity(const ApiGroup& g, int max_len, int coeff_bound);
// cocycle_v1 - cocycle_v2 = delta(psi_bridge) pointwise.
CheckResult check_api_equivalence(const ApiGroup& g, int max_frac, int max_int);
// The worked base-3 carry-set value.
CheckResult check_api_carry_example();

// Extension-group sweeps.
CheckResult check_ext_axioms_cm(int m, int fiber_bound);
CheckResult check_ext_zlike(int m);
CheckResult check_k2_axioms(const K2Group& g, int x_bound, int max_frac, int q_int);
// Pair laws only (commutativity, identity, inverses); affordable on windows
// whose full triple sweep would be excessive.
CheckResult check_k2_pairs(const K2Group& g, int x_bound, int max_frac, int q_int);
CheckResult check_k2_generic(const K2Group& g, int x_bound, int max_frac, int q_int);

}  // namespace extlab::suites
