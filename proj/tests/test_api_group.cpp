#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "extlab/api_group.hpp"
#include "extlab/cocycle.hpp"
#include "extlab/windows.hpp"

using namespace extlab;

namespace {

ApiGroup group(Int p, std::vector<Int> s) { return ApiGroup(PiUnit(Prime(p), std::move(s))); }

// Coboundary route in normal-form arithmetic: the a2-coefficient of
// phi(u) + phi(v) - phi(u+v).
Int delta_oracle(const ApiGroup& g, bool digit_transversal, const PInvRational& u,
                 const PInvRational& v) {
    auto phi = [&](const PInvRational& q) {
        return digit_transversal ? g.transversal_v1(q) : g.transversal_v2(q);
    };
    ApiElement diff = g.add(g.add(phi(u), phi(v)), g.neg(phi(u + v)));
    auto k = g.mu_inverse(diff);
    REQUIRE(k.has_value());
    return *k;
}

}  // namespace

TEST_CASE("PiUnit validation and partial sums") {
    Prime p3(3);
    PiUnit pi(p3, {2, 1, 0, 2});
    CHECK(pi.partial_sum(0) == 0);
    CHECK(pi.partial_sum(1) == 2);
    CHECK(pi.partial_sum(2) == 5);
    CHECK(pi.partial_sum(4) == 59);  // 2 + 3 + 0 + 54
    CHECK_THROWS_AS(pi.partial_sum(5), std::invalid_argument);
    CHECK_THROWS_AS(PiUnit(p3, {0, 1}), std::invalid_argument);  // s_0 = 0
    CHECK_THROWS_AS(PiUnit(p3, {1, 3}), std::invalid_argument);  // digit out of range
    CHECK_THROWS_AS(PiUnit(p3, {}), std::invalid_argument);
}

TEST_CASE("defining relations of the generators") {
    SUBCASE("p x_1 = a_1 + s_0 a_2, added three times at p = 3") {
        auto g = group(3, {1, 1, 1});
        ApiElement x1 = g.x(1);
        ApiElement sum = g.add(g.add(x1, x1), x1);
        CHECK(sum == ApiElement{1, 1, {}});
    }
    SUBCASE("p x_{i+1} = x_i + s_i a_2") {
        auto g = group(2, {1, 1});
        ApiElement x2 = g.x(2);
        CHECK(g.add(x2, x2) == ApiElement{0, 1, {1}});
    }
    SUBCASE("additive identity") {
        auto g = group(2, {1, 1, 1});
        for (const auto& y : api_window(Prime(2), 3, 2)) CHECK(g.add(y, g.zero()) == y);
    }
}

TEST_CASE("api_neg") {
    auto g = group(2, {1, 1, 1});
    CHECK(g.neg(g.zero()) == g.zero());
    CHECK(g.neg(g.x(1)) == ApiElement{-1, -1, {1}});
    CHECK(g.neg(g.a1(5)) == g.a1(-5));

    for (const auto& y : api_window(Prime(2), 3, 2)) {
        CHECK(g.add(y, g.neg(y)) == g.zero());
        CHECK(g.neg(g.neg(y)) == y);
    }
}

TEST_CASE("normal form uniqueness: add then subtract returns the original") {
    for (const Int pv : {2, 3}) {
        auto g = ApiGroup(seeded_pi(1, Prime(pv), 5));
        auto window = api_window(Prime(pv), 3, 3);
        ApiElement probe = g.add(g.x(2), g.a2(-1));
        for (const auto& y : window) {
            auto s = g.add(y, probe);
            REQUIRE(g.add(s, g.neg(probe)) == y);
        }
    }
}

TEST_CASE("nu") {
    auto g = group(2, {1, 1, 1});
    Prime p2(2);
    CHECK(g.nu(g.a2()) == PInvRational(p2));
    CHECK(g.nu(g.a1(3)) == PInvRational(p2, 3));
    CHECK(g.nu(g.x(2)) == PInvRational::make(p2, 1, 2));

    SUBCASE("homomorphism property, exhaustively on a window") {
        auto window = api_window(p2, 3, 2);
        for (const auto& y1 : window)
            for (const auto& y2 : window) REQUIRE(g.nu(g.add(y1, y2)) == g.nu(y1) + g.nu(y2));
    }
    SUBCASE("agrees with the case-split description") {
        // nu(k a1 + m a2) = k and nu(k x_n + m a2) = k / p^n
        for (int k = -4; k <= 4; ++k)
            for (int m = -4; m <= 4; ++m) {
                CHECK(g.nu(g.add(g.a1(k), g.a2(m))) == PInvRational(p2, k));
                for (int n = 1; n <= 3; ++n) {
                    if (k % 2 == 0) continue;
                    ApiElement y = g.add(g.scaled(g.x(n), k), g.a2(m));
                    CHECK(g.nu(y) == PInvRational::make(p2, k, n));
                }
            }
    }
}

TEST_CASE("mu_inverse accepts exactly the a2 line") {
    auto g = group(3, {2, 1});
    CHECK(g.mu_inverse(g.a2(-7)) == Int(-7));
    CHECK(g.mu_inverse(g.zero()) == Int(0));
    CHECK_FALSE(g.mu_inverse(g.a1()).has_value());
    CHECK_FALSE(g.mu_inverse(g.x(1)).has_value());
}

TEST_CASE("carry_set") {
    Prime p3(3), p2(2);
    SUBCASE("worked base-3 example") {
        // u = 0.112, v = 0.211 carries at every position
        auto u = PInvRational::make(p3, 14, 3);  // digits 1,1,2
        auto v = PInvRational::make(p3, 22, 3);  // digits 2,1,1
        CHECK(carry_set(p3, u, v) == CarrySet{1, 2, 3});
    }
    SUBCASE("adding zero never carries") {
        auto u = PInvRational::make(p3, 14, 3);
        CHECK(carry_set(p3, u, PInvRational(p3)).empty());
    }
    SUBCASE("half plus half") {
        auto h = PInvRational::make(p2, 1, 1);
        CHECK(carry_set(p2, h, h) == CarrySet{1});
    }
    SUBCASE("negative integer parts do not disturb fractional carries") {
        auto u = PInvRational::make(p2, -1, 1);  // -1 + 0.1
        auto v = PInvRational::make(p2, 1, 1);
        CHECK(carry_set(p2, u, v) == CarrySet{1});
    }
}

TEST_CASE("cocycle_v1 closed form") {
    SUBCASE("base-3 worked example sums all three digits") {
        auto g = group(3, {1, 1, 1});
        auto u = PInvRational::make(Prime(3), 14, 3);
        auto v = PInvRational::make(Prime(3), 22, 3);
        CHECK(g.cocycle_v1(u, v) == 3);
    }
    SUBCASE("normalized") {
        auto g = group(3, {1, 1, 1});
        for (const auto& u : zinvp_window(Prime(3), 2, 2))
            CHECK(g.cocycle_v1(u, PInvRational(Prime(3))) == 0);
    }
    SUBCASE("half plus half picks up s_0") {
        auto g = group(2, {1, 0});
        auto h = PInvRational::make(Prime(2), 1, 1);
        CHECK(g.cocycle_v1(h, h) == 1);
    }
}

TEST_CASE("cocycle_v2 closed form") {
    SUBCASE("integers contribute nothing") {
        auto g = group(2, {1, 0});
        CHECK(g.cocycle_v2(PInvRational(Prime(2), 1), PInvRational(Prime(2), 1)) == 0);
    }
    SUBCASE("integer against fraction") {
        auto g = group(2, {1, 0});
        CHECK(g.cocycle_v2(PInvRational(Prime(2), 1), PInvRational::make(Prime(2), 1, 1)) == -1);
    }
    SUBCASE("distinct exponents") {
        auto g = group(2, {1, 1});
        auto u = PInvRational::make(Prime(2), 1, 1);
        auto v = PInvRational::make(Prime(2), 1, 2);
        CHECK(g.cocycle_v2(u, v) == -1);  // (1/2)(pi_1 - pi_2) = (1/2)(1 - 3)
    }
}

TEST_CASE("both cocycles match their transversal coboundaries") {
    for (const Int pv : {2, 3}) {
        for (std::uint64_t seed : {1, 2}) {
            auto g = ApiGroup(seeded_pi(seed, Prime(pv), 4));
            auto window = zinvp_window(Prime(pv), 3, 2);
            for (const auto& u : window)
                for (const auto& v : window) {
                    CAPTURE(to_string(u));
                    CAPTURE(to_string(v));
                    REQUIRE(g.cocycle_v1(u, v) == delta_oracle(g, true, u, v));
                    REQUIRE(g.cocycle_v2(u, v) == delta_oracle(g, false, u, v));
                }
        }
    }
}

TEST_CASE("both cocycles pass verify_cocycle on a window") {
    auto g = ApiGroup(seeded_pi(7, Prime(2), 4));
    ZInvPCarrier c{Prime(2)};
    Cocycle<ZInvPCarrier, ZCarrier> f1{
        c, ZCarrier{},
        [&g](const PInvRational& u, const PInvRational& v) { return g.cocycle_v1(u, v); }, "v1"};
    Cocycle<ZInvPCarrier, ZCarrier> f2{
        c, ZCarrier{},
        [&g](const PInvRational& u, const PInvRational& v) { return g.cocycle_v2(u, v); }, "v2"};
    auto window = zinvp_window(Prime(2), 3, 1);
    CHECK(verify_cocycle(f1, window).pass());
    CHECK(verify_cocycle(f2, window).pass());
}

TEST_CASE("transversals") {
    auto g = group(2, {1, 1});
    Prime p2(2);
    SUBCASE("zero and integers") {
        CHECK(g.transversal_v1(PInvRational(p2)) == g.zero());
        CHECK(g.transversal_v2(PInvRational(p2)) == g.zero());
        CHECK(g.transversal_v1(PInvRational(p2, 5)) == g.a1(5));
        CHECK(g.transversal_v2(PInvRational(p2, 5)) == g.a1(5));
    }
    SUBCASE("3/4 under both") {
        auto q = PInvRational::make(p2, 3, 2);
        CHECK(g.transversal_v1(q) == ApiElement{0, 0, {1, 1}});
        CHECK(g.transversal_v2(q) == g.scaled(g.x(2), 3));
        CHECK(g.transversal_v2(q) == ApiElement{0, 1, {1, 1}});
    }
    SUBCASE("both are sections of nu") {
        for (const auto& u : zinvp_window(p2, 2, 2)) {
            REQUIRE(g.nu(g.transversal_v1(u)) == u);
            REQUIRE(g.nu(g.transversal_v2(u)) == u);
        }
    }
}

TEST_CASE("psi_bridge") {
    SUBCASE("vanishes at zero and on integers") {
        auto g = group(2, {1, 1});
        CHECK(g.psi_bridge(PInvRational(Prime(2))) == 0);
        CHECK(g.psi_bridge(PInvRational(Prime(2), 4)) == 0);
        CHECK(g.psi_bridge(PInvRational(Prime(2), -3)) == 0);
    }
    SUBCASE("worked value at 3/4") {
        auto g = group(2, {1, 1});
        // v1 picks x_1 + x_2, v2 picks 3 x_2; difference is -a2
        CHECK(g.psi_bridge(PInvRational::make(Prime(2), 3, 2)) == -1);
    }
    SUBCASE("witnesses the equivalence of the two cocycles") {
        for (const Int pv : {2, 3}) {
            auto g = ApiGroup(seeded_pi(3, Prime(pv), 4));
            auto window = zinvp_window(Prime(pv), 3, 2);
            for (const auto& u : window)
                for (const auto& v : window) {
                    Int delta_psi = g.psi_bridge(u) + g.psi_bridge(v) - g.psi_bridge(u + v);
                    REQUIRE(g.cocycle_v1(u, v) - g.cocycle_v2(u, v) == delta_psi);
                }
        }
    }
}

TEST_CASE("a2 line is p-pure at window scale") {
    for (const Int pv : {2, 3}) {
        auto g = ApiGroup(seeded_pi(5, Prime(pv), 4));
        for (const auto& y : api_window(Prime(pv), 3, 3)) {
            ApiElement py = g.scaled(y, pv);
            if (g.mu_inverse(py).has_value()) {
                CHECK(y.m == 0);
                CHECK(y.r.empty());
            }
        }
    }
}

TEST_CASE("insufficient pi precision is reported") {
    auto g = group(2, {1});
    CHECK_THROWS_AS(g.x(2), std::invalid_argument);
    CHECK_THROWS_AS(g.transversal_v1(PInvRational::make(Prime(2), 1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(
        g.cocycle_v2(PInvRational::make(Prime(2), 1, 2), PInvRational(Prime(2), 1)),
        std::invalid_argument);
}

TEST_CASE("rendering") {
    auto g = group(2, {1, 1});
    CHECK(to_string(g.zero()) == "0*a1 + 0*a2 + []");
    CHECK(to_string(ApiElement{-1, 2, {1, 0, 1}}) == "-1*a1 + 2*a2 + [1,0,1]");
}
