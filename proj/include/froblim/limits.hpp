#pragma once

#include <froblim/family.hpp>
#include <froblim/linalg.hpp>
#include <froblim/spectrum.hpp>

#include <vector>

namespace froblim {

// The filtration at x = 0 on the phi-lattice is described by a value
// v(e_k) in [0, 1) per basis index: 0 for k <= n and s_k/mu for k > n.
// Classes group indices with equal value.
struct VGrading {
    std::vector<Rational> v;
    struct Class {
        Rational value;
        std::vector<long> indices; // consecutive, increasing
    };
    std::vector<Class> classes;
};

struct VFiltration {
    VGrading grading;
    LaurentMatrix B; // nilpotent operator on the graded module: -1/theta
                     // at (i, i-1) exactly when s_i = s_{i-1}
};

VFiltration v_filtration(const Weights& w);

struct JordanClass {
    Rational eigenvalue;           // in [0, 1)
    std::vector<long> block_sizes; // decreasing
};

// Jordan block sizes of the nilpotent operator per grading class, computed
// by ranks of powers (independently of the run-length route).
std::vector<JordanClass> jordan_data(const Weights& w);

// Finite-dimensional limit data: R0 = -mu theta B (the theta cancels),
// Rinf = diag(alpha), and the 0/1 pairing on index pairs.
struct LimitFTS {
    long mu = 0;
    long n = 0;
    RationalMatrix R0;
    RationalMatrix Rinf;
    RationalMatrix g;
};

// Builds the limit tuple and verifies the self-adjointness identities
// (they are theorems; failure throws std::logic_error).
LimitFTS limit_fts(const Weights& w);

struct PreprimitiveResult {
    bool homogeneous = false;      // e_0 is an eigenvector of Rinf
    bool e0_preprimitive = false;  // e_0 is a cyclic vector of R0
    bool any_preprimitive = false; // some cyclic vector of R0 exists
};

PreprimitiveResult preprimitive_check(const LimitFTS& l);

// The tuple built on the non-graded quotient, with R0 the x = 0 value of the
// phi-frame polar matrix and the same 0/1 pairing. Self-adjointness of R0
// holds iff mu = n+1; otherwise the failing pair of indices is reported.
struct NongradedResult {
    bool is_fts = false;
    bool has_witness = false;
    long i = -1, j = -1;     // indices with g(R0 e_i, e_j) != g(e_i, R0 e_j)
    Rational lhs, rhs;       // the two exact values
};

NongradedResult nongraded_counterexample(const Weights& w);

} // namespace froblim
