#include <doctest.h>

#include <froblim/family.hpp>

#include <random>
#include <set>

using namespace froblim;

namespace {

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

bool in01(const Rational& e) { return e.sign() >= 0 && e < Rational(1); }
bool in_minus10(const Rational& e) { return Rational(-1) < e && e.sign() <= 0; }

} // namespace

TEST_CASE("gauge transform takes the omega connection to phi and psi") {
    Weights w({2, 2});
    ConnectionForm omega = build_connection(w, Basis::omega);

    ConnectionForm phi = gauge_transform(omega, gauge_P(w));
    ConnectionForm phi_direct = build_connection(w, Basis::phi);
    CHECK(phi.omega_theta == phi_direct.omega_theta);
    CHECK(phi.omega_x == phi_direct.omega_x);
    // R^phi = diag(0,0,0,1/2,1/2) and the A0^phi corner is 5x
    LaurentMatrix r_phi = phi.omega_x.shifted(1, 0).theta_coefficient(0);
    CHECK(r_phi.at(3, 3).constant_value() == Rational(1, 2));
    CHECK(r_phi.at(4, 4).constant_value() == Rational(1, 2));
    CHECK(r_phi.at(0, 0).is_zero());
    LaurentMatrix a0_phi =
        phi.omega_x.shifted(1, 0).theta_coefficient(-1).scaled(Rational(-5));
    CHECK(a0_phi.at(0, 4) == LaurentPoly::monomial(5, 1, 0));

    ConnectionForm psi = gauge_transform(omega, gauge_Q(w));
    ConnectionForm psi_direct = build_connection(w, Basis::psi);
    CHECK(psi.omega_theta == psi_direct.omega_theta);
    CHECK(psi.omega_x == psi_direct.omega_x);
    LaurentMatrix a0_psi =
        psi.omega_x.shifted(1, 0).theta_coefficient(-1).scaled(Rational(-5));
    CHECK(a0_psi.at(3, 2) == LaurentPoly::monomial(5, 1, 0));
    LaurentMatrix r_psi = psi.omega_x.shifted(1, 0).theta_coefficient(0);
    CHECK(r_psi.at(3, 3).constant_value() == Rational(-1, 2));

    // identity gauge leaves the connection unchanged
    ConnectionForm same = gauge_transform(omega, LaurentMatrix::identity(5));
    CHECK(same.omega_theta == omega.omega_theta);
    CHECK(same.omega_x == omega.omega_x);
}

TEST_CASE("gauge transform validates its input") {
    Weights w({2});
    ConnectionForm c = build_connection(w, Basis::omega);
    LaurentMatrix bad(3);
    bad.at(0, 1) = LaurentPoly::one(); // not diagonal
    bad.at(1, 1) = LaurentPoly::one();
    bad.at(2, 2) = LaurentPoly::one();
    CHECK_THROWS_AS(gauge_transform(c, bad), std::invalid_argument);
    LaurentMatrix binomial = LaurentMatrix::identity(3);
    binomial.at(1, 1) = LaurentPoly::one() + LaurentPoly::x(1); // not a monomial
    CHECK_THROWS_AS(gauge_transform(c, binomial), std::invalid_argument);
}

TEST_CASE("family connection is flat in all four frames") {
    CHECK(is_flat(build_connection(Weights({2, 2}), Basis::omega)));
    CHECK(is_flat(build_connection(Weights({1, 1}), Basis::phi)));
    for (const Weights& w : small_grid(3, 4)) {
        for (Basis b : {Basis::omega, Basis::phi, Basis::psi, Basis::flat})
            CHECK(is_flat(build_connection(w, b)));
    }
}

TEST_CASE("perturbing Ainf destroys flatness") {
    Weights w({2, 2});
    ConnectionForm c = build_connection(w, Basis::omega);
    LaurentMatrix e01(5);
    e01.at(0, 1) = LaurentPoly::one();
    c.omega_theta += e01.shifted(0, -1); // Ainf -> Ainf + E01
    CHECK(!is_flat(c));
}

TEST_CASE("curvature conjugates under gauge transforms") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> exp(-2, 2), num(1, 4);
    Weights w({2, 1});
    const long mu = w.mu();
    ConnectionForm c = build_connection(w, Basis::omega);
    // also on a deliberately non-flat connection
    ConnectionForm bent = c;
    LaurentMatrix e10(mu);
    e10.at(1, 0) = LaurentPoly::one();
    bent.omega_theta += e10.shifted(0, -1);
    for (int trial = 0; trial < 6; ++trial) {
        LaurentMatrix d(mu);
        for (long i = 0; i < mu; ++i)
            d.at(i, i) = LaurentPoly::monomial(num(rng), exp(rng), 0);
        for (const ConnectionForm* base : {&c, &bent}) {
            LaurentMatrix lhs = curvature(gauge_transform(*base, d));
            LaurentMatrix rhs = laurent_inverse(d) * curvature(*base) * d;
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("residues: golden eigenvalues") {
    Weights w22({2, 2});
    ResidueData phi = residue_x(build_connection(w22, Basis::phi));
    CHECK(phi.eigenvalues_known);
    CHECK(phi.theta_free);
    CHECK(phi.eigenvalues == std::vector<Rational>{0, 0, 0, {1, 2}, {1, 2}});

    ResidueData psi = residue_x(build_connection(w22, Basis::psi));
    CHECK(psi.eigenvalues == std::vector<Rational>{{-1, 2}, {-1, 2}, 0, 0, 0});
    CHECK(psi.theta_free);

    ResidueData omega = residue_x(build_connection(Weights({1, 1}), Basis::omega));
    CHECK(omega.eigenvalues == std::vector<Rational>{-1, -1, 0});

    ResidueData ones_phi = residue_x(build_connection(Weights({1, 1, 1}), Basis::phi));
    CHECK(ones_phi.eigenvalues == std::vector<Rational>{0, 0, 0, 0});

    ResidueData w3_psi = residue_x(build_connection(Weights({3}), Basis::psi));
    for (const auto& ev : w3_psi.eigenvalues) CHECK(in_minus10(ev));
}

TEST_CASE("residue ranges and the extension shift over a grid") {
    for (const Weights& w : small_grid(3, 4)) {
        ResidueData phi = residue_x(build_connection(w, Basis::phi));
        ResidueData psi = residue_x(build_connection(w, Basis::psi));
        REQUIRE(phi.eigenvalues_known);
        REQUIRE(psi.eigenvalues_known);
        CHECK(phi.theta_free);
        CHECK(psi.theta_free);
        for (const auto& ev : phi.eigenvalues) CHECK(in01(ev));
        for (const auto& ev : psi.eigenvalues) CHECK(in_minus10(ev));

        // non-integer eigenvalues shift by one between the two frames
        std::multiset<Rational> phi_frac, psi_shift;
        long phi_zeros = 0, psi_zeros = 0;
        for (const auto& ev : phi.eigenvalues)
            ev.is_zero() ? void(++phi_zeros) : void(phi_frac.insert(ev));
        for (const auto& ev : psi.eigenvalues)
            ev.is_zero() ? void(++psi_zeros) : void(psi_shift.insert(ev + Rational(1)));
        CHECK(phi_zeros == psi_zeros);
        CHECK(phi_frac == psi_shift);
    }
}

TEST_CASE("curvature components isolate the broken theta degree") {
    Weights w({2, 2});
    ConnectionForm c = build_connection(w, Basis::omega);
    CHECK(curvature_components(c).empty());

    // perturbing Ainf breaks the theta^-2 piece of the identity
    // (the bracket of the two theta^-1 and theta^-2 blocks)
    ConnectionForm bent = c;
    LaurentMatrix e01(5);
    e01.at(0, 1) = LaurentPoly::one();
    bent.omega_theta += e01.shifted(0, -1);
    auto comps = curvature_components(bent);
    CHECK(!comps.empty());
    CHECK(comps.count(-2) == 1);
    for (const auto& [deg, mat] : comps) CHECK(!mat.is_zero());
}

TEST_CASE("residue eigenvalues through the characteristic polynomial fallback") {
    // cyclic off-diagonal support, rational roots: x omega_x = [[0,1],[1,0]]
    ConnectionForm c;
    c.size = 2;
    c.basis = Basis::omega;
    c.omega_theta = LaurentMatrix(2);
    LaurentMatrix m(2);
    m.at(0, 1) = LaurentPoly::one();
    m.at(1, 0) = LaurentPoly::one();
    c.omega_x = m.shifted(-1, 0);
    ResidueData res = residue_x(c);
    CHECK(res.theta_free);
    CHECK(res.eigenvalues_known);
    CHECK(res.eigenvalues == std::vector<Rational>{-1, 1});

    // lambda^2 - 2 has no rational roots: reported as indeterminate
    ConnectionForm irr = c;
    irr.omega_x = LaurentMatrix(2);
    irr.omega_x.at(0, 1) = LaurentPoly::constant(2).shifted(-1, 0);
    irr.omega_x.at(1, 0) = LaurentPoly::one().shifted(-1, 0);
    ResidueData res2 = residue_x(irr);
    CHECK(res2.theta_free);
    CHECK(!res2.eigenvalues_known);
    CHECK(res2.char_poly[0] == -LaurentPoly::constant(2));
}

TEST_CASE("residue rejects a double pole") {
    Weights w({2});
    ConnectionForm c = build_connection(w, Basis::omega);
    c.omega_x += LaurentMatrix::identity(w.mu()).shifted(-2, 0);
    CHECK_THROWS_AS(residue_x(c), std::domain_error);
}

TEST_CASE("pairing flatness in the omega and phi frames") {
    for (const Weights& w : small_grid(3, 4)) {
        for (Basis b : {Basis::omega, Basis::phi}) {
            CheckReport rep = pairing_flat_check(build_connection(w, b), build_pairing(w, b));
            CHECK(rep.all_pass());
        }
        // the phi pairing is the P-transport of the omega pairing
        CHECK(pairing_transport(build_pairing(w, Basis::omega), gauge_P(w), Basis::phi).G ==
              build_pairing(w, Basis::phi).G);
    }
}

TEST_CASE("identity pairing fails the polar self-adjointness") {
    Weights w({2, 2});
    Pairing fake = make_pairing(LaurentMatrix::identity(5), 2, Basis::omega);
    CheckReport rep = pairing_flat_check(build_connection(w, Basis::omega), fake);
    bool polar_failed = false;
    for (const auto& item : rep.items)
        if (item.name == "polar-self-adjoint") polar_failed = !item.pass;
    CHECK(polar_failed);
}

TEST_CASE("pairing_flat_check rejects mismatched frames") {
    Weights w({2, 2});
    CHECK_THROWS_AS(
        pairing_flat_check(build_connection(w, Basis::phi), build_pairing(w, Basis::omega)),
        std::invalid_argument);
}

TEST_CASE("flat conjugation exponents") {
    Weights w22({2, 2});
    FlatConjugation fc =
        flat_basis_conjugation(build_A0(w22, Basis::omega), build_R(w22, Basis::omega));
    CHECK(fc.limit_exists);
    // wrap entry (0, mu-1) gains x^(1/2)
    CHECK(fc.matrix.at(0, 4).coeff == Rational(5));
    CHECK(fc.matrix.at(0, 4).x_exp == Rational(1, 2));
    // the (1,0) entry loses its x entirely
    CHECK(fc.matrix.at(1, 0).coeff == Rational(5));
    CHECK(fc.matrix.at(1, 0).x_exp == Rational(0));

    for (long n = 1; n <= 4; ++n) {
        Weights ones(std::vector<long>(n, 1));
        FlatConjugation f1 =
            flat_basis_conjugation(build_A0(ones, Basis::omega), build_R(ones, Basis::omega));
        CHECK(f1.limit_exists);
    }

    // R = 0 leaves the matrix unchanged
    Weights w3({3});
    FlatConjugation fid = flat_basis_conjugation(build_A0(w3, Basis::omega), LaurentMatrix(4));
    CHECK(fid.limit_exists); // all exponents of A0 are >= 0
    CHECK(fid.matrix.at(1, 0).x_exp == Rational(1));

    // non-monomial entries are rejected
    LaurentMatrix bad(2);
    bad.at(0, 0) = LaurentPoly::one() + LaurentPoly::x(1);
    CHECK_THROWS_AS(flat_basis_conjugation(bad, LaurentMatrix(2)), std::invalid_argument);

    for (const Weights& w : small_grid(3, 4)) {
        FlatConjugation fc2 =
            flat_basis_conjugation(build_A0(w, Basis::omega), build_R(w, Basis::omega));
        CHECK(fc2.limit_exists);
    }
}
