#pragma once

#include <froblim/laurent.hpp>
#include <froblim/linalg.hpp>
#include <froblim/spectrum.hpp>

#include <optional>
#include <string>
#include <vector>

namespace froblim {

enum class Basis { omega, phi, psi, flat };

const char* basis_name(Basis b);
Basis basis_from_name(const std::string& name);

// Meromorphic connection d + omega_theta dtheta + omega_x dx in a chosen
// frame. For the flat frame the fractional powers x^(s_k/mu) force a change
// of coordinate: the matrices are stored in t with x = t^x_denominator, and
// omega_x is the coefficient of dt. Curvature is insensitive to that choice.
struct ConnectionForm {
    long size = 0;
    LaurentMatrix omega_theta;
    LaurentMatrix omega_x;
    Basis basis = Basis::omega;
    long x_denominator = 1;
};

// Matrix G of the theta^n coefficients of the bilinear form S in a frame;
// entries are Laurent polynomials in x only. The inverse is computed once
// and cached with the value.
struct Pairing {
    long size = 0;
    LaurentMatrix G;
    LaurentMatrix Ginv;
    long weight = 0; // the n of theta^n
    Basis basis = Basis::omega;
};

Pairing make_pairing(LaurentMatrix G, long weight, Basis basis);

// Adjoint of M with respect to the pairing: G^-1 sigma(M)^T G where sigma
// flips the sign of theta in every entry.
LaurentMatrix adjoint(const LaurentMatrix& m, const Pairing& p);

// Frame change by a diagonal matrix D with nonzero monomial entries in x:
// omega_theta -> D^-1 omega_theta D,
// omega_x     -> D^-1 omega_x D + D^-1 dD/dx.
ConnectionForm gauge_transform(const ConnectionForm& c, const LaurentMatrix& d);

// Transport of a pairing under the same frame change: G -> D G D.
Pairing pairing_transport(const Pairing& p, const LaurentMatrix& d, Basis new_basis);

// Coefficient of dtheta ^ dx of the curvature 2-form:
// d(omega_theta) - d(omega_x) terms plus the bracket. Zero iff flat.
LaurentMatrix curvature(const ConnectionForm& c);
bool is_flat(const ConnectionForm& c);

// Diagnostic split of the curvature by theta degree; each graded piece is a
// matrix identity of its own (only nonzero pieces are returned).
std::map<long, LaurentMatrix> curvature_components(const ConnectionForm& c);

struct ResidueData {
    LaurentMatrix matrix;                 // (x * omega_x) at x = 0
    std::vector<LaurentPoly> char_poly;   // in lambda, coefficients in theta
    bool theta_free = false;              // char poly free of theta
    bool eigenvalues_known = false;
    std::vector<Rational> eigenvalues;    // sorted, with multiplicity
};

// Residue of the connection along x = 0. Requires a logarithmic pole in x
// (omega_x with x exponent >= -1). Eigenvalues are read off the diagonal
// when the off-diagonal support graph is acyclic, otherwise recovered from
// the rational roots of the characteristic polynomial when it splits.
ResidueData residue_x(const ConnectionForm& c);

// The three component identities encoding flatness of the pairing together
// with the adjoint relations:
//   (i)   x dG/dx = R^T G + G R   (R = theta^0 part of x omega_x)
//   (ii)  A0^T G = G A0           (A0 = -mu * theta^-1 part of x omega_x)
//   (iii) Ainf^T G + G Ainf = n G (Ainf = theta^-1 part of omega_theta)
CheckReport pairing_flat_check(const ConnectionForm& c, const Pairing& p);

// x^R A0 x^-R for a diagonal R with rational entries: entry (i,j) picks up
// x^(R_ii - R_jj). limit_exists iff every nonzero entry has exponent >= 0.
struct FlatConjugation {
    RationalExponentMatrix matrix;
    bool limit_exists = false;
};
FlatConjugation flat_basis_conjugation(const LaurentMatrix& a0, const LaurentMatrix& r);

} // namespace froblim
