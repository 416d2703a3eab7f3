#include <froblim/limits.hpp>

namespace froblim {

VFiltration v_filtration(const Weights& w) {
    const Spectrum sp = build_spectrum(w);
    const long mu = sp.mu, n = sp.n;

    VFiltration out;
    out.grading.v.reserve(mu);
    for (long k = 0; k < mu; ++k)
        out.grading.v.push_back(k <= n ? Rational(0) : sp.s[k] / Rational(mu));
    for (long k = 0; k < mu; ++k) {
        auto& cls = out.grading.classes;
        if (!cls.empty() && cls.back().value == out.grading.v[k])
            cls.back().indices.push_back(k);
        else
            cls.push_back({out.grading.v[k], {k}});
    }

    out.B = LaurentMatrix(mu);
    for (long i = 1; i < mu; ++i)
        if (sp.s[i] == sp.s[i - 1]) out.B.at(i, i - 1) = LaurentPoly::monomial(-1, 0, -1);
    return out;
}

std::vector<JordanClass> jordan_data(const Weights& w) {
    const VFiltration vf = v_filtration(w);
    const long mu = w.mu();
    // Rational form of the nilpotent operator; scaling by -mu theta does not
    // change ranks but keeps this aligned with the limit tuple.
    LaurentMatrix scaled = vf.B.scaled(LaurentPoly::monomial(-mu, 0, 1));
    RationalMatrix full = to_rational_matrix(scaled);

    std::vector<JordanClass> out;
    for (const auto& cls : vf.grading.classes) {
        const long m = static_cast<long>(cls.indices.size());
        RationalMatrix sub(m, m);
        for (long a = 0; a < m; ++a)
            for (long b = 0; b < m; ++b) sub.at(a, b) = full.at(cls.indices[a], cls.indices[b]);
        out.push_back({cls.value, nilpotent_block_sizes(sub)});
    }
    return out;
}

LimitFTS limit_fts(const Weights& w) {
    const Spectrum sp = build_spectrum(w);
    const VFiltration vf = v_filtration(w);
    const long mu = sp.mu, n = sp.n;

    LimitFTS l;
    l.mu = mu;
    l.n = n;
    // R0 = -mu theta B; conversion throws if any theta survives.
    l.R0 = to_rational_matrix(vf.B.scaled(LaurentPoly::monomial(-mu, 0, 1)));
    l.Rinf = RationalMatrix::diagonal(sp.alpha);
    l.g = RationalMatrix(mu, mu);
    for (long k = 0; k <= n; ++k) l.g.at(k, n - k) = 1;
    for (long k = n + 1; k < mu; ++k) l.g.at(k, mu + n - k) = 1;

    // Theorems about the tuple; a failure here is an implementation bug.
    Rational det = l.g.determinant();
    if (!(det == Rational(1) || det == Rational(-1)))
        throw std::logic_error("limit_fts: pairing is not unimodular");
    if (l.g != l.g.transpose()) throw std::logic_error("limit_fts: pairing not symmetric");
    RationalMatrix ginv = l.g.inverse();
    if (ginv * l.R0.transpose() * l.g != l.R0)
        throw std::logic_error("limit_fts: R0 self-adjointness failed");
    if (l.Rinf + ginv * l.Rinf.transpose() * l.g != RationalMatrix::identity(mu).scaled(n))
        throw std::logic_error("limit_fts: Rinf duality failed");
    return l;
}

PreprimitiveResult preprimitive_check(const LimitFTS& l) {
    PreprimitiveResult r;
    std::vector<Rational> e0(l.mu);
    e0[0] = 1;
    std::vector<Rational> im = l.Rinf.apply(e0);
    Rational lambda = im[0];
    bool eig = true;
    for (long i = 0; i < l.mu; ++i)
        if (im[i] != lambda * e0[i]) eig = false;
    r.homogeneous = eig;
    r.e0_preprimitive = has_cyclic_vector(l.R0, e0);
    r.any_preprimitive = has_cyclic_vector(l.R0);
    return r;
}

NongradedResult nongraded_counterexample(const Weights& w) {
    const long mu = w.mu(), n = w.n();
    const LimitFTS graded = limit_fts(w);
    RationalMatrix r0 = to_rational_matrix(build_A0(w, Basis::phi).substitute_x_zero());
    const RationalMatrix& g = graded.g;

    NongradedResult out;
    RationalMatrix lhs = r0.transpose() * g; // (i,j) entry: g(R0 e_i, e_j)
    RationalMatrix rhs = g * r0;             // (i,j) entry: g(e_i, R0 e_j)
    out.is_fts = (lhs == rhs);
    if (!out.is_fts) {
        // Prefer the canonical witness pair (n, mu-1).
        if (lhs.at(n, mu - 1) != rhs.at(n, mu - 1)) {
            out.i = n;
            out.j = mu - 1;
        } else {
            for (long i = 0; i < mu && out.i < 0; ++i)
                for (long j = 0; j < mu; ++j)
                    if (lhs.at(i, j) != rhs.at(i, j)) {
                        out.i = i;
                        out.j = j;
                        break;
                    }
        }
        out.has_witness = true;
        out.lhs = lhs.at(out.i, out.j);
        out.rhs = rhs.at(out.i, out.j);
    }
    return out;
}

} // namespace froblim
