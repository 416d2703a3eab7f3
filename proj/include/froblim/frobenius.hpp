#pragma once

#include <froblim/limits.hpp>
#include <froblim/multipoly.hpp>

#include <string>
#include <vector>

namespace froblim {

// Frobenius type structure data over a polynomial base with m parameters.
// Nabla holds the connection matrices in the chosen frame (zero in a flat
// frame); log_flags marks directions whose generator is x_i d/dx_i.
struct FTSData {
    long dim = 0; // fibre dimension
    long m = 0;   // number of base parameters
    ParamMatrix R0;
    ParamMatrix Rinf;
    std::vector<ParamMatrix> Phi;
    std::vector<ParamMatrix> Nabla;
    ParamMatrix g;
    Rational r; // constant in Rinf + Rinf* = r Id
    std::vector<bool> log_flags;
};

// Exact verification of the compatibility axioms; every identity is a
// matrix equation over the parameter ring.
CheckReport fts_axiom_check(const FTSData& f);

// The family Frobenius type structure on the punctured line in the omega or
// phi frame: R0 = A0(x), Rinf = n I - Ainf, Phi = -A0/mu, Nabla = R, with the
// frame's pairing, r = n, one logarithmic direction.
FTSData family_fts(const Weights& w, Basis basis);

// The canonical limit Frobenius manifold for mu = n+1.
struct FrobeniusData {
    long n = 0;
    long mu = 0;                     // = n + 1
    std::vector<RationalMatrix> C;   // C[i] = matrix of the i+1-st direction
    ParamMatrix A0tilde;             // entries linear in x_1..x_mu
    RationalMatrix Ainf;             // diag(0..n)
    RationalMatrix g;                // anti-diagonal ones
    std::vector<std::vector<long>> product; // product[i][j] = k (1-based), 0 when absent
    MultiPoly potential;             // cubic, no terms of degree <= 2
    std::vector<MultiPoly> euler;    // coefficients of the Euler field
};

// Constructs the tuple and verifies its defining relations exactly
// (throws std::logic_error if any fails -- they are theorems).
FrobeniusData limit_manifold(long n);

// Packaging of the manifold data as an FTSData over m = mu parameters.
FTSData manifold_as_fts(const FrobeniusData& f);

// Associativity of the product table plus compatibility of the potential's
// third derivatives with the metric.
bool wdvv_check(const FrobeniusData& f);

struct HomogeneityResult {
    Rational degree;     // 4 - mu
    MultiPoly remainder; // E(potential) - degree * potential
    bool pass = false;   // remainder has total degree <= 2
};

HomogeneityResult homogeneity_check(const FrobeniusData& f);

// Logarithmic structure report on the x-lattices.
struct SectionFlags {
    std::string name;
    bool flat = false; // the R diagonal entry of the section vanishes
    bool ic = false;   // injectivity of the rank-one period map at x = 0
    bool gc = false;   // two-operator Krylov closure spans the fibre at x = 0
    bool ec = false;   // eigenvector of Ainf
};

struct LogReport {
    long metric_rank_at_0 = 0;
    bool metric_nondegenerate = false; // iff mu = n+1
    std::vector<SectionFlags> sections;
};

LogReport log_structure(const Weights& w);

} // namespace froblim
