#pragma once

#include <froblim/connection.hpp>
#include <froblim/spectrum.hpp>

#include <vector>

namespace froblim {

// Builders for the one-parameter Laurent family
//   F(u, x) = u_1 + ... + u_n + x / (u_1^w_1 ... u_n^w_n)
// in the frames omega, phi, psi and flat.

// Matrix of theta^2 d/dtheta (the polar part of the connection):
//   omega: corner (0, mu-1) = mu, entry (1, 0) = mu x, subdiagonal mu;
//   phi:   corner mu x, subdiagonal mu;
//   psi:   mu >= n+2: corner mu, subdiagonal mu except (n+1, n) = mu x;
//          mu = n+1: equal to phi.
LaurentMatrix build_A0(const Weights& w, Basis basis);

// Constant diagonal matrix of the logarithmic x-direction:
//   omega: diag(0, -1 x n, -s_{mu-1}/mu, ..., -s_{n+1}/mu);
//   phi:   diag(0 x (n+1), s_{n+1}/mu, ..., s_{mu-1}/mu);
//   psi:   -diag(0 x (n+1), s_{mu-1}/mu, ..., s_{n+1}/mu);
//   flat:  0.
LaurentMatrix build_R(const Weights& w, Basis basis);

// diag(alpha_0, ..., alpha_{mu-1}); the same in every frame.
LaurentMatrix build_Ainf(const Weights& w);

// Frame-change gauges: P = diag(1, x, ..., x) takes omega to phi and
// Q = diag(1, x (n times), 1, ..., 1) takes omega to psi.
LaurentMatrix gauge_P(const Weights& w);
LaurentMatrix gauge_Q(const Weights& w);

// The bilinear form in frames omega and phi (the psi frame carries none).
Pairing build_pairing(const Weights& w, Basis basis);

// Full connection (A0/theta^2 + Ainf/theta) dtheta + (R - A0/(mu theta)) dx/x.
// The flat frame is returned in the coordinate t with x = t^d, d = lcm of the
// denominators of the R entries, so that all exponents stay integral.
ConnectionForm build_connection(const Weights& w, Basis basis);

// A monomial section c x^p u^a omega_0 of the twisted de Rham module.
struct MonomialSection {
    std::vector<long> exponents; // a
    Rational scalar = 1;         // c
    long x_power = 0;            // p
};

// The scaling relations used to generate the basis ladder. For j = 0..n the
// functional phi_j on monomial exponents and the one-monomial multiplier
// h_j = chi_j(F) - F, stored as (scalar, x increment, exponent increment).
class GammaData {
  public:
    explicit GammaData(const Weights& w);

    long count() const { return n_ + 1; } // j ranges over 0..n
    Rational phi_value(long j, const std::vector<long>& exponents) const;

    Rational h_scalar(long j) const;           // -mu (j = 0) or -mu/w_j
    long h_x_increment(long j) const;          // 1 for j = 0, else 0
    std::vector<long> h_exponent_increment(long j) const; // -w or e_j

    // Checks h_j = chi_j(F) - F formally on the n+1 monomials of F.
    bool check_h_identity(long j) const;

  private:
    long n_;
    long mu_;
    std::vector<long> w_;
};

struct DerivedBasis {
    std::vector<MonomialSection> sections; // omega_0 .. omega_{mu-1}, monic
    LaurentMatrix A0_reconstructed;        // in the omega frame
    std::vector<long> schedule;            // chosen j per step, length mu
    std::vector<long> tie_counts;          // number of admissible j per step
};

// Reconstructs the basis ladder from the scaling relations: starting at
// omega_0, each step picks a j with phi_j(a(k)) = alpha_k and multiplies by
// the monomial part of h_j (sections stay monic; the x emitted by j = 0 goes
// into the matrix). Backtracks over ties; the closed form build_A0(w, omega)
// is the acceptance oracle. Throws when no schedule closes the cycle.
DerivedBasis derive_basis(const Weights& w);

} // namespace froblim
