#include "extlab/windows.hpp"

#include <algorithm>

namespace extlab {

std::vector<Int> cm_window(int m) {
    std::vector<Int> out;
    for (int k = 0; k < m; ++k) out.emplace_back(k);
    return out;
}

std::vector<Int> z_window(int bound) {
    std::vector<Int> out;
    for (int k = -bound; k <= bound; ++k) out.emplace_back(k);
    return out;
}

std::vector<PruferElement> prufer_window(const Prime& p, int max_exp) {
    std::vector<PruferElement> out;
    out.push_back(PruferElement(p));
    for (int n = 1; n <= max_exp; ++n)
        for (Int i = 1; i < ipow(p.value(), n); ++i)
            if (i % p.value() != 0) out.push_back(PruferElement::make(p, i, n));
    std::sort(out.begin(), out.end(),
              [](const PruferElement& a, const PruferElement& b) { return field_less(a, b); });
    return out;
}

std::vector<PInvRational> zinvp_window(const Prime& p, int max_frac_len, int max_int) {
    std::vector<PInvRational> out;
    Int pe = ipow(p.value(), max_frac_len);
    for (int m = -max_int; m <= max_int; ++m)
        for (Int f = 0; f < pe; ++f)
            out.push_back(PInvRational::make(p, Int(m) * pe + f, max_frac_len));
    std::sort(out.begin(), out.end(),
              [](const PInvRational& a, const PInvRational& b) { return field_less(a, b); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<ApiElement> api_window(const Prime& p, int max_len, int coeff_bound) {
    std::vector<std::vector<Int>> fracs{{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Int> digits(static_cast<std::size_t>(len), Int(0));
        while (true) {
            if (digits.back() != 0) fracs.push_back(digits);
            int i = 0;
            while (i < len && digits[static_cast<std::size_t>(i)] == p.value() - 1) {
                digits[static_cast<std::size_t>(i)] = 0;
                ++i;
            }
            if (i == len) break;
            ++digits[static_cast<std::size_t>(i)];
        }
    }
    std::vector<ApiElement> out;
    for (int m = -coeff_bound; m <= coeff_bound; ++m)
        for (int k = -coeff_bound; k <= coeff_bound; ++k)
            for (const auto& f : fracs) out.push_back(ApiElement{Int(m), Int(k), f});
    std::sort(out.begin(), out.end(),
              [](const ApiElement& a, const ApiElement& b) { return field_less(a, b); });
    return out;
}

std::vector<K2Element> k2_window(const Prime& p, int x_bound, int max_frac_len, int q_int_bound) {
    std::vector<K2Element> out;
    auto qs = zinvp_window(p, max_frac_len, q_int_bound);
    for (int x = -x_bound; x <= x_bound; ++x)
        for (const auto& q : qs) out.push_back(K2Element{Int(x), q});
    std::sort(out.begin(), out.end(),
              [](const K2Element& a, const K2Element& b) { return field_less(a, b); });
    return out;
}

namespace {

std::mt19937_64 seeded_engine(std::uint64_t seed, const Prime& p) {
    // Mix the prime into the stream so (seed, p) pairs are independent.
    return std::mt19937_64(seed * 0x9e3779b97f4a7c15ULL ^
                           static_cast<std::uint64_t>(p.value().convert_to<std::uint64_t>()));
}

}  // namespace

std::vector<Int> seeded_canonical_digits(std::uint64_t seed, const Prime& p, int count) {
    auto gen = seeded_engine(seed, p);
    std::uint64_t pv = p.value().convert_to<std::uint64_t>();
    std::vector<Int> digits;
    digits.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) digits.emplace_back(gen() % pv);
    return digits;
}

PiUnit seeded_pi(std::uint64_t seed, const Prime& p, int count) {
    auto gen = seeded_engine(seed + 0x517cc1b727220a95ULL, p);
    std::uint64_t pv = p.value().convert_to<std::uint64_t>();
    std::vector<Int> digits;
    digits.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        if (i == 0)
            digits.emplace_back(1 + gen() % (pv - 1));
        else
            digits.emplace_back(gen() % pv);
    }
    return PiUnit(p, std::move(digits));
}

}  // namespace extlab
