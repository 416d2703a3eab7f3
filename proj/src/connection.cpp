#include <froblim/connection.hpp>

#include <algorithm>

namespace froblim {

const char* basis_name(Basis b) {
    switch (b) {
        case Basis::omega: return "omega";
        case Basis::phi: return "phi";
        case Basis::psi: return "psi";
        case Basis::flat: return "flat";
    }
    return "?";
}

Basis basis_from_name(const std::string& name) {
    if (name == "omega") return Basis::omega;
    if (name == "phi") return Basis::phi;
    if (name == "psi") return Basis::psi;
    if (name == "flat") return Basis::flat;
    throw std::invalid_argument("unknown basis label '" + name + "'");
}

Pairing make_pairing(LaurentMatrix G, long weight, Basis basis) {
    Pairing p;
    p.size = G.size();
    p.Ginv = laurent_inverse(G); // throws when singular over Q(x)
    p.G = std::move(G);
    p.weight = weight;
    p.basis = basis;
    return p;
}

LaurentMatrix adjoint(const LaurentMatrix& m, const Pairing& p) {
    if (m.size() != p.size) throw std::invalid_argument("adjoint: size mismatch");
    return p.Ginv * m.flip_theta_sign().transpose() * p.G;
}

ConnectionForm gauge_transform(const ConnectionForm& c, const LaurentMatrix& d) {
    if (d.size() != c.size) throw std::invalid_argument("gauge_transform: size mismatch");
    if (!d.is_diagonal())
        throw std::invalid_argument("gauge_transform: gauge must be diagonal");
    LaurentMatrix dinv(c.size);
    for (long i = 0; i < c.size; ++i) {
        const LaurentPoly& e = d.at(i, i);
        if (!e.is_monomial() || !e.theta_free())
            throw std::invalid_argument("gauge_transform: entries must be nonzero monomials in x");
        const auto& [key, coeff] = *e.terms().begin();
        dinv.at(i, i) = LaurentPoly::monomial(Rational(1) / coeff, -key.first, 0);
    }
    ConnectionForm r;
    r.size = c.size;
    r.basis = c.basis;
    r.x_denominator = c.x_denominator;
    r.omega_theta = dinv * c.omega_theta * d;
    r.omega_x = dinv * c.omega_x * d + dinv * d.dx();
    return r;
}

Pairing pairing_transport(const Pairing& p, const LaurentMatrix& d, Basis new_basis) {
    return make_pairing(d * p.G * d, p.weight, new_basis);
}

LaurentMatrix curvature(const ConnectionForm& c) {
    return c.omega_x.dtheta() - c.omega_theta.dx() + commutator(c.omega_theta, c.omega_x);
}

bool is_flat(const ConnectionForm& c) { return curvature(c).is_zero(); }

std::map<long, LaurentMatrix> curvature_components(const ConnectionForm& c) {
    LaurentMatrix full = curvature(c);
    std::map<long, LaurentMatrix> out;
    for (long i = 0; i < c.size; ++i)
        for (long j = 0; j < c.size; ++j)
            for (const auto& [key, coeff] : full.at(i, j).terms()) {
                auto [it, inserted] = out.try_emplace(key.second, LaurentMatrix(c.size));
                it->second.at(i, j) += LaurentPoly::monomial(coeff, key.first, 0);
            }
    return out;
}

namespace {

// True when the directed graph with an edge i -> j for every nonzero
// off-diagonal entry (i, j) has no directed cycle.
bool offdiagonal_support_acyclic(const LaurentMatrix& m) {
    const long n = m.size();
    std::vector<int> color(n, 0); // 0 white, 1 on stack, 2 done
    std::vector<std::pair<long, long>> stack; // (vertex, next column to scan)
    for (long s = 0; s < n; ++s) {
        if (color[s] != 0) continue;
        color[s] = 1;
        stack.push_back({s, 0});
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            long j = next;
            while (j < n && (j == v || m.at(v, j).is_zero())) ++j;
            if (j == n) {
                color[v] = 2;
                stack.pop_back();
                continue;
            }
            next = j + 1;
            if (color[j] == 1) return false;
            if (color[j] == 0) {
                color[j] = 1;
                stack.push_back({j, 0});
            }
        }
    }
    return true;
}

} // namespace

ResidueData residue_x(const ConnectionForm& c) {
    if (c.x_denominator != 1)
        throw std::invalid_argument("residue_x: connection is not in the x coordinate");
    LaurentMatrix xo = c.omega_x.shifted(1, 0);
    for (long i = 0; i < c.size; ++i)
        for (long j = 0; j < c.size; ++j)
            if (!xo.at(i, j).is_zero() && xo.at(i, j).min_x_exp() < 0)
                throw std::domain_error("residue_x: pole of order >= 2 along x = 0");

    ResidueData res;
    res.matrix = xo.substitute_x_zero();
    res.char_poly = char_poly(res.matrix);
    res.theta_free = true;
    for (const auto& coeff : res.char_poly)
        if (!coeff.theta_free()) res.theta_free = false;

    if (offdiagonal_support_acyclic(res.matrix)) {
        // A topological reordering makes the matrix triangular, so the
        // eigenvalues are the diagonal entries.
        res.eigenvalues_known = true;
        for (long i = 0; i < c.size; ++i)
            res.eigenvalues.push_back(res.matrix.at(i, i).constant_value());
        std::sort(res.eigenvalues.begin(), res.eigenvalues.end());
        // Cross-check against the characteristic polynomial.
        LaurentPoly prod = LaurentPoly::one();
        for (const auto& ev : res.eigenvalues)
            prod *= LaurentPoly::x(1) - LaurentPoly::constant(ev);
        std::vector<LaurentPoly> expect(c.size + 1);
        for (const auto& [key, coeff] : prod.terms())
            expect[key.first] += LaurentPoly::monomial(coeff, 0, 0);
        if (expect != res.char_poly)
            throw std::logic_error("residue_x: eigenvalue/char-poly mismatch");
    } else if (res.theta_free) {
        std::vector<Rational> coeffs;
        coeffs.reserve(res.char_poly.size());
        for (const auto& p : res.char_poly) coeffs.push_back(p.coeff(0, 0));
        if (auto roots = rational_roots(coeffs)) {
            res.eigenvalues_known = true;
            res.eigenvalues = *roots;
        }
    }
    return res;
}

CheckReport pairing_flat_check(const ConnectionForm& c, const Pairing& p) {
    if (c.basis != p.basis)
        throw std::invalid_argument("pairing_flat_check: basis mismatch");
    if (c.size != p.size) throw std::invalid_argument("pairing_flat_check: size mismatch");
    CheckReport rep;

    // theta_coefficient() already strips the theta power from the terms.
    LaurentMatrix xo = c.omega_x.shifted(1, 0);
    LaurentMatrix r = xo.theta_coefficient(0);
    LaurentMatrix a0 = xo.theta_coefficient(-1).scaled(Rational(-c.size));
    LaurentMatrix ainf = c.omega_theta.theta_coefficient(-1);
    const LaurentMatrix& g = p.G;

    rep.add("pairing-symmetric", g == g.transpose());
    rep.add("metric-x-flatness", g.dx().shifted(1, 0) == r.transpose() * g + g * r);
    rep.add("polar-self-adjoint", a0.transpose() * g == g * a0);
    rep.add("infinity-adjoint",
            ainf.transpose() * g + g * ainf == g.scaled(Rational(p.weight)));
    return rep;
}

FlatConjugation flat_basis_conjugation(const LaurentMatrix& a0, const LaurentMatrix& r) {
    if (a0.size() != r.size())
        throw std::invalid_argument("flat_basis_conjugation: size mismatch");
    if (!r.is_diagonal())
        throw std::invalid_argument("flat_basis_conjugation: R must be diagonal");
    const long n = a0.size();
    std::vector<Rational> rd(n);
    for (long i = 0; i < n; ++i) rd[i] = r.at(i, i).constant_value();

    FlatConjugation out;
    out.matrix = RationalExponentMatrix(n);
    out.limit_exists = true;
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            const LaurentPoly& e = a0.at(i, j);
            if (e.is_zero()) continue;
            if (!e.is_monomial() || !e.theta_free())
                throw std::invalid_argument(
                    "flat_basis_conjugation: entries must be monomials in x");
            const auto& [key, coeff] = *e.terms().begin();
            Rational exp = Rational(key.first) + rd[i] - rd[j];
            out.matrix.at(i, j) = {coeff, exp};
            if (exp.sign() < 0) out.limit_exists = false;
        }
    return out;
}

} // namespace froblim
