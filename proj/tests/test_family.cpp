#include <doctest.h>

#include <froblim/family.hpp>

#include <random>

using namespace froblim;

namespace {

LaurentPoly c(long v) { return LaurentPoly::constant(v); }
LaurentPoly cx(long v) { return LaurentPoly::monomial(v, 1, 0); }

std::vector<Weights> small_grid(long nmax, long wmax) {
    std::vector<Weights> grid;
    for (long n = 1; n <= nmax; ++n) {
        std::vector<long> w(n, 1);
        while (true) {
            grid.push_back(Weights(w));
            long i = n - 1;
            while (i >= 0 && w[i] == wmax) {
                w[i] = 1;
                --i;
            }
            if (i < 0) break;
            ++w[i];
        }
    }
    return grid;
}

} // namespace

TEST_CASE("A0 in the psi frame for (2,2) matches the 5x5 display") {
    LaurentMatrix a = build_A0(Weights({2, 2}), Basis::psi);
    LaurentMatrix expect(5);
    expect.at(0, 4) = c(5);
    expect.at(1, 0) = c(5);
    expect.at(2, 1) = c(5);
    expect.at(3, 2) = cx(5); // the x sits on the (3,2) entry
    expect.at(4, 3) = c(5);
    CHECK(a == expect);
}

TEST_CASE("A0 in the phi frame for (1,1): corner 3x, subdiagonal 3") {
    LaurentMatrix a = build_A0(Weights({1, 1}), Basis::phi);
    CHECK(a.at(0, 2) == cx(3));
    CHECK(a.at(1, 0) == c(3));
    CHECK(a.at(2, 1) == c(3));
    CHECK(a.at(0, 0).is_zero());
}

TEST_CASE("A0 at x = 1 is the punctual matrix: all nonzero entries mu") {
    for (const Weights& w : {Weights({2, 2}), Weights({3}), Weights({1, 2, 3})}) {
        const long mu = w.mu();
        LaurentMatrix at_one = build_A0(w, Basis::omega).map(
            [](const LaurentPoly& p) { return p.substitute_x_one(); });
        LaurentMatrix expect(mu);
        expect.at(0, mu - 1) = c(mu);
        for (long i = 1; i < mu; ++i) expect.at(i, i - 1) = c(mu);
        CHECK(at_one == expect);
    }
}

TEST_CASE("psi frame coincides with phi when mu = n+1") {
    Weights ones({1, 1, 1});
    CHECK(build_A0(ones, Basis::psi) == build_A0(ones, Basis::phi));
    CHECK(build_R(ones, Basis::psi) == build_R(ones, Basis::phi));
}

TEST_CASE("R matrices for (2,2)") {
    Weights w({2, 2});
    LaurentMatrix r = build_R(w, Basis::omega);
    std::vector<Rational> expect{0, -1, -1, {-1, 2}, {-1, 2}};
    for (long i = 0; i < 5; ++i) CHECK(r.at(i, i).constant_value() == expect[i]);

    LaurentMatrix rphi = build_R(w, Basis::phi);
    std::vector<Rational> expect_phi{0, 0, 0, {1, 2}, {1, 2}};
    for (long i = 0; i < 5; ++i) CHECK(rphi.at(i, i).constant_value() == expect_phi[i]);

    LaurentMatrix rpsi = build_R(w, Basis::psi);
    std::vector<Rational> expect_psi{0, 0, 0, {-1, 2}, {-1, 2}};
    for (long i = 0; i < 5; ++i) CHECK(rpsi.at(i, i).constant_value() == expect_psi[i]);
}

TEST_CASE("R in phi and psi frames vanishes for all-ones weights") {
    for (long n = 1; n <= 5; ++n) {
        Weights w(std::vector<long>(n, 1));
        CHECK(build_R(w, Basis::phi).is_zero());
        CHECK(build_R(w, Basis::psi).is_zero());
    }
}

TEST_CASE("the omega R tail satisfies both closed forms") {
    for (const Weights& w : small_grid(3, 4)) {
        Spectrum sp = build_spectrum(w);
        LaurentMatrix r = build_R(w, Basis::omega);
        for (long k = sp.n + 1; k < sp.mu; ++k) {
            Rational v = r.at(k, k).constant_value();
            CHECK(v == -(sp.s[sp.mu + sp.n - k] / Rational(sp.mu)));
            CHECK(v == (sp.s[k] - Rational(sp.mu)) / Rational(sp.mu));
        }
    }
}

TEST_CASE("gauge conjugation identities A0_phi = P^-1 A0 P and A0_psi = Q^-1 A0 Q") {
    for (const Weights& w : small_grid(3, 4)) {
        LaurentMatrix a0 = build_A0(w, Basis::omega);
        LaurentMatrix p = gauge_P(w), q = gauge_Q(w);
        CHECK(laurent_inverse(p) * a0 * p == build_A0(w, Basis::phi));
        CHECK(laurent_inverse(q) * a0 * q == build_A0(w, Basis::psi));
    }
}

TEST_CASE("pairing golden data") {
    Weights w22({2, 2});
    Pairing g = build_pairing(w22, Basis::omega);
    CHECK(g.G.at(0, 2) == LaurentPoly::x(-1));
    CHECK(g.G.at(2, 0) == LaurentPoly::x(-1));
    CHECK(g.G.at(1, 1) == LaurentPoly::x(-2));
    CHECK(g.G.at(3, 4) == LaurentPoly::x(-1));
    CHECK(g.G.at(4, 3) == LaurentPoly::x(-1));
    CHECK(g.G.at(0, 0).is_zero());
    CHECK(g.weight == 2);

    Pairing gphi = build_pairing(w22, Basis::phi);
    CHECK(gphi.G.at(0, 2) == LaurentPoly::one());
    CHECK(gphi.G.at(1, 1) == LaurentPoly::one());
    CHECK(gphi.G.at(2, 0) == LaurentPoly::one());
    CHECK(gphi.G.at(3, 4) == LaurentPoly::x(1));
    CHECK(gphi.G.at(4, 3) == LaurentPoly::x(1));

    // (1,1) phi: anti-diagonal of ones
    Pairing g11 = build_pairing(Weights({1, 1}), Basis::phi);
    for (long i = 0; i < 3; ++i)
        for (long j = 0; j < 3; ++j)
            CHECK(g11.G.at(i, j) == (i + j == 2 ? LaurentPoly::one() : LaurentPoly::zero()));

    CHECK_THROWS_AS(build_pairing(w22, Basis::psi), std::invalid_argument);
}

TEST_CASE("gamma data: h = chi(F) - F on the monomials of F") {
    for (const Weights& w : {Weights({2, 2}), Weights({3}), Weights({1, 1, 1}), Weights({4, 2, 1})}) {
        GammaData gamma(w);
        for (long j = 0; j < gamma.count(); ++j) CHECK(gamma.check_h_identity(j));
    }
}

TEST_CASE("gamma functionals reproduce the defining values") {
    Weights w({2, 2}); // mu = 5
    GammaData gamma(w);
    std::vector<long> u0{-2, -2};
    CHECK(gamma.phi_value(0, u0) == Rational(-4));
    CHECK(gamma.phi_value(1, u0) == Rational(1)); // -4 + (5/2)*2
    CHECK(gamma.phi_value(2, u0) == Rational(1));
    CHECK(gamma.h_scalar(0) == Rational(-5));
    CHECK(gamma.h_scalar(1) == Rational(-5, 2));
    CHECK(gamma.h_x_increment(0) == 1);
    CHECK(gamma.h_exponent_increment(0) == std::vector<long>{-2, -2});
    CHECK(gamma.h_exponent_increment(2) == std::vector<long>{0, 1});
}

TEST_CASE("derive_basis ladder for (1,1)") {
    DerivedBasis db = derive_basis(Weights({1, 1}));
    REQUIRE(db.sections.size() == 3);
    CHECK(db.sections[0].exponents == std::vector<long>{0, 0});
    CHECK(db.sections[1].exponents == std::vector<long>{-1, -1}); // omega_1 = u_0 omega_0
    CHECK(db.schedule[0] == 0); // the x-emitting relation comes first
    CHECK(db.A0_reconstructed == build_A0(Weights({1, 1}), Basis::omega));
}

TEST_CASE("derive_basis for (2,2): 5 steps, ties occur") {
    DerivedBasis db = derive_basis(Weights({2, 2}));
    CHECK(db.schedule.size() == 5);
    CHECK(db.schedule[0] == 0);
    CHECK(db.sections[1].exponents == std::vector<long>{-2, -2});
    CHECK(db.A0_reconstructed == build_A0(Weights({2, 2}), Basis::omega));
    // at the step after u_0 both Gamma_1 and Gamma_2 are admissible
    CHECK(db.tie_counts[1] == 2);
}

TEST_CASE("derive_basis tie multiplicities for all-ones weights") {
    // after the u_0 step, any index with a -1 left can be raised: the number
    // of admissible choices at step k is n - k + 1
    DerivedBasis db = derive_basis(Weights({1, 1, 1}));
    CHECK(db.tie_counts[1] == 3);
    CHECK(db.tie_counts[2] == 2);
    CHECK(db.tie_counts[3] == 1);
}

TEST_CASE("derive_basis starts with omega_1 = u_0 omega_0 and closes, full small grid") {
    for (const Weights& w : small_grid(3, 3)) {
        DerivedBasis db = derive_basis(w);
        std::vector<long> u0(w.n());
        for (long i = 0; i < w.n(); ++i) u0[i] = -w.w[i];
        CHECK(db.sections[1].exponents == u0);
        CHECK(db.A0_reconstructed == build_A0(w, Basis::omega));
        // j = 0 is used exactly once over the cycle
        long zero_uses = 0;
        for (long j : db.schedule)
            if (j == 0) ++zero_uses;
        CHECK(zero_uses == 1);
    }
}

TEST_CASE("build_A0 rejects the flat frame") {
    CHECK_THROWS_AS(build_A0(Weights({2}), Basis::flat), std::invalid_argument);
}
