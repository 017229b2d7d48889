#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "extlab/api_group.hpp"
#include "extlab/integer.hpp"
#include "extlab/padic.hpp"
#include "extlab/rank2.hpp"

namespace extlab {

// Deterministic finite windows, emitted in the field-lexicographic order of
// each element type.

std::vector<Int> cm_window(int m);
std::vector<Int> z_window(int bound);  // -bound..bound

// All of Z(p^inf) with exponent <= max_exp.
std::vector<PruferElement> prufer_window(const Prime& p, int max_exp);

// Elements m.r_1...r_E of Z[1/p] with |m| <= max_int and E = max_frac_len.
std::vector<PInvRational> zinvp_window(const Prime& p, int max_frac_len, int max_int);

// Normal forms with |m|, |k| <= coeff_bound and fractional length <= max_len.
std::vector<ApiElement> api_window(const Prime& p, int max_len, int coeff_bound);

// Pairs (x, q) with |x| <= x_bound and q from zinvp_window(p, max_frac_len,
// q_int_bound).
std::vector<K2Element> k2_window(const Prime& p, int x_bound, int max_frac_len, int q_int_bound);

// Digit streams derived from (seed, p) via a fixed PRNG; reproducible
// across platforms because only raw engine output is used.
std::vector<Int> seeded_canonical_digits(std::uint64_t seed, const Prime& p, int count);
PiUnit seeded_pi(std::uint64_t seed, const Prime& p, int count);

}  // namespace extlab
