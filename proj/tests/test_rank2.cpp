#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "extlab/cocycle.hpp"
#include "extlab/rank2.hpp"
#include "extlab/windows.hpp"

using namespace extlab;

namespace {

K2Group make_group(Int p, std::vector<Int> alpha) {
    Prime prime(p);
    return K2Group(prime, CanonicalPadic(prime, std::move(alpha)));
}

}  // namespace

TEST_CASE("ctilde") {
    Prime p2(2);
    auto g = make_group(2, {1, 1, 0});

    SUBCASE("integers project to zero") {
        CHECK(g.ctilde(PInvRational(p2, 3), PInvRational(p2, 5)) == 0);
    }
    SUBCASE("half plus half") {
        auto h = PInvRational::make(p2, 1, 1);
        CHECK(g.ctilde(h, h) == -1);
    }
    SUBCASE("quarter plus half") {
        CHECK(g.ctilde(PInvRational::make(p2, 1, 2), PInvRational::make(p2, 1, 1)) == 1);
    }
    SUBCASE("depends only on the residues mod Z") {
        auto window = zinvp_window(p2, 3, 1);
        for (const auto& q : window)
            for (const auto& r : window)
                for (int shift : {-2, 1, 3}) {
                    PInvRational shifted = q + PInvRational(p2, shift);
                    REQUIRE(g.ctilde(shifted, r) == g.ctilde(q, r));
                    REQUIRE(g.ctilde(q, r + PInvRational(p2, shift)) == g.ctilde(q, r));
                }
    }
    SUBCASE("matches c_alpha on representatives") {
        auto window = zinvp_window(p2, 3, 1);
        for (const auto& q : window)
            for (const auto& r : window)
                REQUIRE(g.ctilde(q, r) == c_alpha(g.alpha(), to_prufer(q), to_prufer(r)));
    }
}

TEST_CASE("k2_add and k2_neg") {
    Prime p2(2);
    auto g = make_group(2, {1, 0, 0});
    auto half = PInvRational::make(p2, 1, 1);

    SUBCASE("integer fiber adds plainly") {
        CHECK(g.add(K2Element{3, PInvRational(p2)}, K2Element{-5, PInvRational(p2)}) ==
              K2Element{-2, PInvRational(p2)});
    }
    SUBCASE("half plus half dips into the fiber") {
        CHECK(g.add(K2Element{0, half}, K2Element{0, half}) == K2Element{-1, PInvRational(p2, 1)});
    }
    SUBCASE("identity") {
        for (const auto& e : k2_window(p2, 2, 2, 1)) CHECK(g.add(g.zero(), e) == e);
    }
    SUBCASE("negation of a fiber element") {
        CHECK(g.neg(K2Element{4, PInvRational(p2)}) == K2Element{-4, PInvRational(p2)});
    }
    SUBCASE("worked negation") {
        CHECK(g.neg(K2Element{0, half}) == K2Element{1, -half});
    }
    SUBCASE("double negation and inverses on a window") {
        for (const auto& e : k2_window(p2, 2, 2, 1)) {
            CHECK(g.neg(g.neg(e)) == e);
            CHECK(g.add(e, g.neg(e)) == g.zero());
        }
    }
}

TEST_CASE("group axioms on windows") {
    for (const Int pv : {2, 3}) {
        Prime p(pv);
        for (std::uint64_t seed : {1u, 2u}) {
            auto digits = seeded_canonical_digits(seed, p, 4);
            K2Group g(p, CanonicalPadic(p, digits));
            K2Carrier carrier{g};
            auto window = k2_window(p, 2, 2, 1);
            CHECK(check_group_axioms(carrier, window).pass());
        }
    }
}

TEST_CASE("k2_add agrees with the generic extension operation") {
    Prime p3(3);
    auto g = make_group(3, {2, 0, 1});
    ZInvPCarrier base{p3};
    Cocycle<ZInvPCarrier, ZCarrier> f{
        base, ZCarrier{},
        [&g](const PInvRational& q, const PInvRational& r) { return g.ctilde(q, r); }, "ctilde"};
    for (const auto& a : k2_window(p3, 2, 2, 1))
        for (const auto& b : k2_window(p3, 2, 2, 1)) {
            ExtensionElement<ZInvPCarrier, ZCarrier> ea{a.q, a.x}, eb{b.q, b.x};
            auto sum = ext_add(f, ea, eb);
            auto direct = g.add(a, b);
            REQUIRE(direct.q == sum.u);
            REQUIRE(direct.x == sum.a);
            auto n = ext_neg(f, ea);
            auto ndirect = g.neg(a);
            REQUIRE(ndirect.q == n.u);
            REQUIRE(ndirect.x == n.a);
        }
}

TEST_CASE("fiber embedding and projection form an exact sequence on windows") {
    Prime p2(2);
    auto g = make_group(2, {1, 1, 1});
    auto window = k2_window(p2, 3, 2, 1);

    // fiber map x -> (x, 0) is an embedding respecting addition
    for (int x1 = -3; x1 <= 3; ++x1)
        for (int x2 = -3; x2 <= 3; ++x2) {
            auto s = g.add(K2Element{x1, PInvRational(p2)}, K2Element{x2, PInvRational(p2)});
            REQUIRE(s == (K2Element{x1 + x2, PInvRational(p2)}));
        }

    // projection is a homomorphism with kernel exactly the fiber
    for (const auto& a : window) {
        if (a.q.is_zero()) continue;
        CHECK_FALSE(g.add(a, g.neg(a)).q == PInvRational(p2, 1));
    }
    for (const auto& a : window)
        for (const auto& b : window) REQUIRE(g.add(a, b).q == a.q + b.q);
}

TEST_CASE("rendering") {
    Prime p2(2);
    CHECK(to_string(K2Element{-2, PInvRational::make(p2, 3, 2)}) == "(-2; 3/4)");
    CHECK(to_string(K2Element{0, PInvRational(p2)}) == "(0; 0)");
}

TEST_CASE("mixed primes are rejected") {
    auto g = make_group(2, {1, 1});
    CHECK_THROWS_AS(g.ctilde(PInvRational(Prime(3), 1), PInvRational(Prime(2), 1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(K2Group(Prime(3), CanonicalPadic(Prime(2), {1})), std::invalid_argument);
}
