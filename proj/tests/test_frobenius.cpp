#include <doctest.h>

#include <froblim/frobenius.hpp>

#include <random>

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

const SectionFlags* find_section(const LogReport& r, const std::string& name) {
    for (const auto& s : r.sections)
        if (s.name == name) return &s;
    return nullptr;
}

} // namespace

TEST_CASE("family FTS axioms pass in omega and phi frames") {
    for (const Weights& w : {Weights({2, 2}), Weights({1, 1}), Weights({3, 1})}) {
        for (Basis b : {Basis::omega, Basis::phi}) {
            CheckReport rep = fts_axiom_check(family_fts(w, b));
            for (const auto& item : rep.items)
                if (!item.pass) FAIL_CHECK(w.to_string(), " ", basis_name(b), ": ", item.name);
            CHECK(rep.all_pass());
        }
    }
    CHECK_THROWS_AS(family_fts(Weights({2, 2}), Basis::psi), std::invalid_argument);
}

TEST_CASE("family FTS axioms over a grid") {
    for (const Weights& w : small_grid(3, 4))
        for (Basis b : {Basis::omega, Basis::phi})
            CHECK(fts_axiom_check(family_fts(w, b)).all_pass());
    // a few deep vectors with n = 4, 5 and w_i up to 6
    for (const Weights& w : {Weights({6, 6, 6, 6}), Weights({1, 2, 3, 4, 5}),
                             Weights({6, 1, 6, 1, 6}), Weights({5, 4, 3, 2})})
        for (Basis b : {Basis::omega, Basis::phi})
            CHECK(fts_axiom_check(family_fts(w, b)).all_pass());
}

TEST_CASE("limit manifold data for n = 2") {
    FrobeniusData f = limit_manifold(2);
    CHECK(f.mu == 3);
    // C_1 = -I, C_2 = -J, C_3 = -J^2
    CHECK(f.C[0] == -RationalMatrix::identity(3));
    CHECK(f.C[1].at(1, 0) == Rational(-1));
    CHECK(f.C[2].at(2, 0) == Rational(-1));
    CHECK(f.C[2].at(1, 0) == Rational(0));

    // potential: 1/2 x1^2 x3 + 1/2 x1 x2^2
    MultiPoly expect = MultiPoly::monomial(3, {2, 0, 1}, Rational(1, 2)) +
                       MultiPoly::monomial(3, {1, 2, 0}, Rational(1, 2));
    CHECK(f.potential == expect);

    // E = x1 d1 + 3 d2 - x3 d3
    CHECK(f.euler[0] == MultiPoly::variable(3, 0));
    CHECK(f.euler[1] == MultiPoly::constant(3, 3));
    CHECK(f.euler[2] == MultiPoly::variable(3, 2).scaled(-1));

    CHECK(wdvv_check(f));
    HomogeneityResult h = homogeneity_check(f);
    CHECK(h.degree == Rational(1));
    CHECK(h.remainder == MultiPoly::monomial(3, {1, 1, 0}, Rational(3)));
    CHECK(h.pass);

    CheckReport rep = fts_axiom_check(manifold_as_fts(f));
    CHECK(rep.all_pass());
}

TEST_CASE("limit manifold for n = 1: potential forced by the metric pattern") {
    FrobeniusData f = limit_manifold(1);
    // only multiset with i+j+k = mu+2 = 4 and entries <= 2 is {1,1,2}
    CHECK(f.potential == MultiPoly::monomial(2, {2, 1}, Rational(1, 2)));
    CHECK(wdvv_check(f));
    HomogeneityResult h = homogeneity_check(f);
    CHECK(h.degree == Rational(2));
    CHECK(h.pass);
}

TEST_CASE("limit manifold identities for n = 1..8") {
    for (long n = 1; n <= 8; ++n) {
        FrobeniusData f = limit_manifold(n); // construction verifies the relations
        CHECK(wdvv_check(f));
        CHECK(homogeneity_check(f).pass);
        // product table: unit and shift structure
        for (long j = 1; j <= f.mu; ++j) CHECK(f.product[0][j - 1] == j);
        // third derivatives: exactly the i+j+k = mu+2 pattern
        for (long i = 1; i <= f.mu; ++i)
            for (long j = 1; j <= f.mu; ++j)
                for (long k = 1; k <= f.mu; ++k) {
                    Rational c = f.potential.derivative(i - 1)
                                     .derivative(j - 1)
                                     .derivative(k - 1)
                                     .constant_value();
                    CHECK(c == (i + j + k == f.mu + 2 ? Rational(1) : Rational(0)));
                }
        CHECK(fts_axiom_check(manifold_as_fts(f)).all_pass());
    }
}

TEST_CASE("uniqueness: commuting with A0~(0) and the first columns pin the directions") {
    // Matrices commuting with the regular nilpotent mu J are polynomials in J;
    // the coefficient vector is the first column. Reconstruct each C_i from
    // its first column and compare.
    for (long n = 1; n <= 5; ++n) {
        FrobeniusData f = limit_manifold(n);
        const long mu = f.mu;
        RationalMatrix j(mu, mu);
        for (long i = 1; i < mu; ++i) j.at(i, i - 1) = 1;
        for (long idx = 0; idx < mu; ++idx) {
            RationalMatrix rebuilt(mu, mu);
            RationalMatrix jp = RationalMatrix::identity(mu);
            for (long k = 0; k < mu; ++k) {
                rebuilt += jp.scaled(f.C[idx].at(k, 0));
                jp = jp * j;
            }
            CHECK(rebuilt == f.C[idx]);
            CHECK(f.C[idx].at(idx, 0) == Rational(-1));
        }
    }
}

TEST_CASE("perturbing a direction breaks the structure equation") {
    FrobeniusData f = limit_manifold(2);
    FTSData fts = manifold_as_fts(f);
    // C_2 -> C_2 + E00
    fts.Phi[1].at(0, 0) += MultiPoly::constant(3, 1);
    CheckReport rep = fts_axiom_check(fts);
    bool r0_structure_failed = false;
    for (const auto& item : rep.items)
        if (item.name == "r0-structure" && !item.pass) r0_structure_failed = true;
    CHECK(r0_structure_failed);
    CHECK(!rep.all_pass());
}

TEST_CASE("tampered product table fails wdvv") {
    FrobeniusData f = limit_manifold(2);
    f.product[1][1] = 2; // d2 * d2 := d2
    CHECK(!wdvv_check(f));
}

TEST_CASE("wdvv holds for mu = 5 (n = 4)") {
    CHECK(wdvv_check(limit_manifold(4)));
}

TEST_CASE("homogeneity remainders stay quadratic") {
    for (long n : {1L, 2L, 3L}) {
        HomogeneityResult h = homogeneity_check(limit_manifold(n));
        CHECK(h.pass);
        CHECK(h.remainder.total_degree() <= 2);
    }
}

TEST_CASE("log structure for (1,1): nondegenerate metric, phi section generates") {
    LogReport rep = log_structure(Weights({1, 1}));
    CHECK(rep.metric_nondegenerate);
    CHECK(rep.metric_rank_at_0 == 3);
    const SectionFlags* s = find_section(rep, "omega0_phi");
    REQUIRE(s != nullptr);
    CHECK(s->flat);
    CHECK(s->ic);
    CHECK(s->gc);
    CHECK(s->ec);
}

TEST_CASE("log structure for (2,2): the section table of the degenerate case") {
    LogReport rep = log_structure(Weights({2, 2}));
    CHECK(!rep.metric_nondegenerate);
    CHECK(rep.metric_rank_at_0 == 3); // rank 3 of 5

    const SectionFlags* phi0 = find_section(rep, "omega0_phi");
    REQUIRE(phi0 != nullptr);
    CHECK((phi0->flat && phi0->ic && phi0->gc && phi0->ec));

    const SectionFlags* o0 = find_section(rep, "omega0_L0");
    REQUIRE(o0 != nullptr);
    CHECK(o0->flat);
    CHECK(!o0->ic);

    const SectionFlags* o1 = find_section(rep, "omega1_L0");
    REQUIRE(o1 != nullptr);
    CHECK(!o1->flat);
    CHECK(o1->ic);
    CHECK(o1->gc);
    CHECK(o1->ec);

    const SectionFlags* psi0 = find_section(rep, "omega0_psi");
    REQUIRE(psi0 != nullptr);
    CHECK(psi0->flat);
    CHECK(!psi0->gc);

    const SectionFlags* psin = find_section(rep, "omega_np1_psi");
    REQUIRE(psin != nullptr);
    CHECK(!psin->flat);
    CHECK(psin->ic);
    CHECK(psin->gc);
    CHECK(psin->ec);
}

TEST_CASE("log metric dichotomy and the phi closure over a grid") {
    for (const Weights& w : small_grid(3, 4)) {
        LogReport rep = log_structure(w);
        CHECK(rep.metric_nondegenerate == (w.mu() == w.n() + 1));
        const SectionFlags* phi0 = find_section(rep, "omega0_phi");
        REQUIRE(phi0 != nullptr);
        CHECK((phi0->flat && phi0->ic && phi0->gc && phi0->ec));
    }
}

TEST_CASE("the x = 0 class map of the Higgs field is -A0bar/mu") {
    // Independent route: extract the theta^-1 coefficient of x omega_x from
    // the assembled connection and restrict to x = 0.
    for (const Weights& w : {Weights({2, 2}), Weights({2, 1})}) {
        ConnectionForm c = build_connection(w, Basis::phi);
        LaurentMatrix higgs =
            c.omega_x.shifted(1, 0).theta_coefficient(-1).substitute_x_zero();
        LaurentMatrix expect =
            build_A0(w, Basis::phi).substitute_x_zero().scaled(Rational(-1, w.mu()));
        CHECK(higgs == expect);
    }
}

TEST_CASE("fts_axiom_check validates dimensions") {
    FTSData f;
    f.dim = 2;
    f.m = 1;
    f.R0 = ParamMatrix(2, 1);
    f.Rinf = ParamMatrix(2, 1);
    f.g = ParamMatrix(3, 1); // wrong size
    f.Phi = {ParamMatrix(2, 1)};
    f.Nabla = {ParamMatrix(2, 1)};
    f.log_flags = {false};
    CHECK_THROWS_AS(fts_axiom_check(f), std::invalid_argument);
}

TEST_CASE("limit_manifold rejects n < 1") {
    CHECK_THROWS_AS(limit_manifold(0), std::invalid_argument);
}
