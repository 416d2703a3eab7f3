#include <froblim/frobenius.hpp>

namespace froblim {

namespace {

// theta-free Laurent matrix in x -> one-variable ParamMatrix.
ParamMatrix laurent_to_param(const LaurentMatrix& m) {
    ParamMatrix r(m.size(), 1);
    for (long i = 0; i < m.size(); ++i)
        for (long j = 0; j < m.size(); ++j) {
            MultiPoly p(1);
            for (const auto& [key, c] : m.at(i, j).terms()) {
                if (key.second != 0)
                    throw std::invalid_argument("laurent_to_param: theta present");
                p += MultiPoly::monomial(1, {key.first}, c);
            }
            r.at(i, j) = p;
        }
    return r;
}

ParamMatrix rational_to_param(const RationalMatrix& m, long nvars) {
    ParamMatrix r(m.rows(), nvars);
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j)
            r.at(i, j) = MultiPoly::constant(nvars, m.at(i, j));
    return r;
}

} // namespace

CheckReport fts_axiom_check(const FTSData& f) {
    if (f.R0.size() != f.dim || f.Rinf.size() != f.dim || f.g.size() != f.dim ||
        static_cast<long>(f.Phi.size()) != f.m || static_cast<long>(f.Nabla.size()) != f.m ||
        static_cast<long>(f.log_flags.size()) != f.m)
        throw std::invalid_argument("fts_axiom_check: inconsistent dimensions");
    for (long i = 0; i < f.m; ++i)
        if (f.Phi[i].size() != f.dim || f.Nabla[i].size() != f.dim)
            throw std::invalid_argument("fts_axiom_check: inconsistent dimensions");

    auto d = [&](long i, const ParamMatrix& m) {
        return f.log_flags[i] ? m.log_derivative(i) : m.derivative(i);
    };
    auto nabla = [&](long i, const ParamMatrix& m) {
        return d(i, m) + commutator(f.Nabla[i], m);
    };
    auto all_pairs = [&](auto&& pred) {
        for (long i = 0; i < f.m; ++i)
            for (long j = i + 1; j < f.m; ++j)
                if (!pred(i, j)) return false;
        return true;
    };
    auto all_dirs = [&](auto&& pred) {
        for (long i = 0; i < f.m; ++i)
            if (!pred(i)) return false;
        return true;
    };

    CheckReport rep;
    rep.add("pairing-symmetric", f.g == f.g.transpose());
    rep.add("connection-flat", all_pairs([&](long i, long j) {
                return (d(i, f.Nabla[j]) - d(j, f.Nabla[i]) +
                        commutator(f.Nabla[i], f.Nabla[j]))
                    .is_zero();
            }));
    rep.add("rinf-flat", all_dirs([&](long i) { return nabla(i, f.Rinf).is_zero(); }));
    rep.add("higgs-commute", all_pairs([&](long i, long j) {
                return commutator(f.Phi[i], f.Phi[j]).is_zero();
            }));
    rep.add("r0-higgs-commute",
            all_dirs([&](long i) { return commutator(f.R0, f.Phi[i]).is_zero(); }));
    rep.add("higgs-closed", all_pairs([&](long i, long j) {
                return (d(i, f.Phi[j]) - d(j, f.Phi[i]) + commutator(f.Nabla[i], f.Phi[j]) -
                        commutator(f.Nabla[j], f.Phi[i]))
                    .is_zero();
            }));
    rep.add("r0-structure", all_dirs([&](long i) {
                return nabla(i, f.R0) + f.Phi[i] == commutator(f.Phi[i], f.Rinf);
            }));
    rep.add("rinf-constant", all_dirs([&](long i) { return d(i, f.Rinf).is_zero(); }));
    rep.add("higgs-self-adjoint", all_dirs([&](long i) {
                return f.Phi[i].transpose() * f.g == f.g * f.Phi[i];
            }));
    rep.add("r0-self-adjoint", f.R0.transpose() * f.g == f.g * f.R0);
    rep.add("infinity-duality",
            f.Rinf.transpose() * f.g + f.g * f.Rinf == f.g.scaled(f.r));
    rep.add("metric-flat", all_dirs([&](long i) {
                return d(i, f.g) == f.Nabla[i].transpose() * f.g + f.g * f.Nabla[i];
            }));
    return rep;
}

FTSData family_fts(const Weights& w, Basis basis) {
    if (basis != Basis::omega && basis != Basis::phi)
        throw std::invalid_argument("family_fts: a pairing exists only in omega and phi");
    const long mu = w.mu(), n = w.n();
    FTSData f;
    f.dim = mu;
    f.m = 1;
    ParamMatrix a0 = laurent_to_param(build_A0(w, basis));
    f.R0 = a0;
    f.Rinf = rational_to_param(RationalMatrix::identity(mu).scaled(n), 1) -
             laurent_to_param(build_Ainf(w));
    f.Phi = {a0.scaled(Rational(-1, mu))};
    f.Nabla = {laurent_to_param(build_R(w, basis))};
    f.g = laurent_to_param(build_pairing(w, basis).G);
    f.r = n;
    f.log_flags = {true};
    return f;
}

FrobeniusData limit_manifold(long n) {
    if (n < 1) throw std::invalid_argument("limit_manifold: n must be >= 1");
    const long mu = n + 1;
    FrobeniusData f;
    f.n = n;
    f.mu = mu;

    RationalMatrix j(mu, mu);
    for (long i = 1; i < mu; ++i) j.at(i, i - 1) = 1;
    RationalMatrix jp = RationalMatrix::identity(mu);
    f.C.reserve(mu);
    for (long i = 0; i < mu; ++i) {
        f.C.push_back(-jp); // C_{i+1} = -J^i
        jp = jp * j;
    }

    // A0~(x) = -x_1 C_1 - mu C_2 + sum_{i>=3} (i-2) x_i C_i
    f.A0tilde = ParamMatrix(mu, mu);
    auto add_scaled = [&](const RationalMatrix& c, const MultiPoly& s) {
        for (long a = 0; a < mu; ++a)
            for (long b = 0; b < mu; ++b)
                if (!c.at(a, b).is_zero())
                    f.A0tilde.at(a, b) += s.scaled(c.at(a, b));
    };
    add_scaled(f.C[0], -MultiPoly::variable(mu, 0));
    add_scaled(f.C[1], MultiPoly::constant(mu, -mu));
    for (long i = 3; i <= mu; ++i)
        add_scaled(f.C[i - 1], MultiPoly::variable(mu, i - 1).scaled(i - 2));

    std::vector<Rational> alpha(mu);
    for (long k = 0; k < mu; ++k) alpha[k] = k;
    f.Ainf = RationalMatrix::diagonal(alpha);
    f.g = RationalMatrix(mu, mu);
    for (long k = 0; k < mu; ++k) f.g.at(k, n - k) = 1;

    // Defining relations, verified exactly.
    for (long a = 0; a < mu; ++a)
        for (long b = 0; b < mu; ++b)
            if (f.C[a] * f.C[b] != f.C[b] * f.C[a])
                throw std::logic_error("limit_manifold: directions do not commute");
    ParamMatrix a0_at_0(mu, mu);
    for (long a = 0; a < mu; ++a)
        for (long b = 0; b < mu; ++b)
            a0_at_0.at(a, b) = MultiPoly::constant(mu, f.A0tilde.at(a, b).value_at_zero());
    if (a0_at_0 != rational_to_param(j.scaled(mu), mu))
        throw std::logic_error("limit_manifold: A0~(0) != mu J");
    for (long i = 0; i < mu; ++i) {
        ParamMatrix ci = rational_to_param(f.C[i], mu);
        if (!commutator(f.A0tilde, ci).is_zero())
            throw std::logic_error("limit_manifold: [A0~, C] != 0");
        ParamMatrix ainf = rational_to_param(f.Ainf, mu);
        if (f.A0tilde.derivative(i) + ci != commutator(ainf, ci))
            throw std::logic_error("limit_manifold: dA0~/dx_i + C_i != [Ainf, C_i]");
        if (f.C[i].at(i, 0) != Rational(-1))
            throw std::logic_error("limit_manifold: first column normalization");
    }

    f.product.assign(mu, std::vector<long>(mu, 0));
    for (long i = 1; i <= mu; ++i)
        for (long k = 1; k <= mu; ++k)
            f.product[i - 1][k - 1] = (i + k - 1 <= mu) ? i + k - 1 : 0;

    // Potential with third derivatives c_ijk = [i + j + k = mu + 2]:
    // weights 1, 1/2, 1/6 by repetition pattern.
    f.potential = MultiPoly(mu);
    for (long i = 1; i <= mu; ++i)
        for (long jx = i; jx <= mu; ++jx) {
            long k = mu + 2 - i - jx;
            if (k < jx || k > mu) continue;
            Rational c = 1;
            if (i == jx && jx == k)
                c = Rational(1, 6);
            else if (i == jx || jx == k || i == k)
                c = Rational(1, 2);
            std::vector<long> e(mu, 0);
            ++e[i - 1];
            ++e[jx - 1];
            ++e[k - 1];
            f.potential += MultiPoly::monomial(mu, e, c);
        }

    // E = x_1 d_1 + (n+1) d_2 - x_3 d_3 - ... - (n-1) x_{n+1} d_{n+1}
    f.euler.assign(mu, MultiPoly(mu));
    f.euler[0] = MultiPoly::variable(mu, 0);
    f.euler[1] = MultiPoly::constant(mu, mu);
    for (long i = 3; i <= mu; ++i)
        f.euler[i - 1] = MultiPoly::variable(mu, i - 1).scaled(-(i - 2));
    return f;
}

FTSData manifold_as_fts(const FrobeniusData& fr) {
    FTSData f;
    f.dim = fr.mu;
    f.m = fr.mu;
    f.R0 = fr.A0tilde;
    f.Rinf = rational_to_param(RationalMatrix::identity(fr.mu).scaled(fr.n) - fr.Ainf, fr.mu);
    for (long i = 0; i < fr.mu; ++i) {
        f.Phi.push_back(rational_to_param(fr.C[i], fr.mu));
        f.Nabla.push_back(ParamMatrix(fr.mu, fr.mu));
    }
    f.g = rational_to_param(fr.g, fr.mu);
    f.r = fr.n;
    f.log_flags.assign(fr.mu, false);
    return f;
}

bool wdvv_check(const FrobeniusData& f) {
    const long mu = f.mu;
    auto table = [&](long i, long k) { // 1-based, 0 = absent
        if (i == 0 || k == 0) return 0L;
        return f.product[i - 1][k - 1];
    };
    // unit and associativity of the product table
    for (long k = 1; k <= mu; ++k)
        if (table(1, k) != k) return false;
    for (long i = 1; i <= mu; ++i)
        for (long k = 1; k <= mu; ++k)
            for (long l = 1; l <= mu; ++l)
                if (table(table(i, k), l) != table(i, table(k, l))) return false;
    // c_ijk from the potential matches g(d_i * d_j, d_k), all triples
    for (long i = 1; i <= mu; ++i)
        for (long k = 1; k <= mu; ++k)
            for (long l = 1; l <= mu; ++l) {
                Rational c = f.potential.derivative(i - 1)
                                 .derivative(k - 1)
                                 .derivative(l - 1)
                                 .constant_value();
                long p = table(i, k);
                Rational expected = (p == 0) ? Rational(0) : f.g.at(p - 1, l - 1);
                if (c != expected) return false;
            }
    return true;
}

HomogeneityResult homogeneity_check(const FrobeniusData& f) {
    HomogeneityResult out;
    out.degree = Rational(4 - f.mu);
    MultiPoly e_psi(f.mu);
    for (long i = 0; i < f.mu; ++i) e_psi += f.euler[i] * f.potential.derivative(i);
    out.remainder = e_psi - f.potential.scaled(out.degree);
    out.pass = out.remainder.total_degree() <= 2;
    return out;
}

LogReport log_structure(const Weights& w) {
    const long mu = w.mu(), n = w.n();
    LogReport rep;
    rep.metric_rank_at_0 =
        to_rational_matrix(build_pairing(w, Basis::phi).G.substitute_x_zero()).rank();
    rep.metric_nondegenerate = rep.metric_rank_at_0 == mu;

    RationalMatrix ainf = to_rational_matrix(build_Ainf(w));
    struct Candidate {
        std::string name;
        Basis basis;
        long index;
    };
    std::vector<Candidate> candidates = {{"omega0_L0", Basis::omega, 0},
                                         {"omega1_L0", Basis::omega, 1},
                                         {"omega0_phi", Basis::phi, 0},
                                         {"omega0_psi", Basis::psi, 0}};
    if (mu >= n + 2) candidates.push_back({"omega_np1_psi", Basis::psi, n + 1});

    for (const auto& cand : candidates) {
        RationalMatrix a0bar = to_rational_matrix(build_A0(w, cand.basis).substitute_x_zero());
        RationalMatrix higgs0 = a0bar.scaled(Rational(-1, mu));
        Rational rkk = build_R(w, cand.basis).at(cand.index, cand.index).constant_value();

        SectionFlags flags;
        flags.name = cand.name;
        flags.flat = rkk.is_zero();
        std::vector<Rational> e(mu);
        e[cand.index] = 1;
        bool nonzero = false;
        for (const auto& v : higgs0.apply(e))
            if (!v.is_zero()) nonzero = true;
        flags.ic = nonzero;
        flags.gc = krylov_closure_rank({higgs0, a0bar}, e) == mu;
        std::vector<Rational> ae = ainf.apply(e);
        flags.ec = true;
        for (long i = 0; i < mu; ++i)
            if (ae[i] != ainf.at(cand.index, cand.index) * e[i]) flags.ec = false;
        rep.sections.push_back(flags);
    }
    return rep;
}

} // namespace froblim
