#pragma once

#include <froblim/laurent.hpp>
#include <froblim/rational.hpp>

#include <optional>
#include <string>
#include <vector>

namespace froblim {

// Dense matrix over Q.
class RationalMatrix {
  public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(long rows, long cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    static RationalMatrix identity(long n) {
        RationalMatrix m(n, n);
        for (long i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    static RationalMatrix diagonal(const std::vector<Rational>& d) {
        RationalMatrix m(static_cast<long>(d.size()), static_cast<long>(d.size()));
        for (size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
        return m;
    }

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Rational& at(long i, long j) { return e_[index(i, j)]; }
    const Rational& at(long i, long j) const { return e_[index(i, j)]; }

    bool is_zero() const {
        for (const auto& v : e_)
            if (!v.is_zero()) return false;
        return true;
    }

    RationalMatrix transpose() const {
        RationalMatrix r(cols_, rows_);
        for (long i = 0; i < rows_; ++i)
            for (long j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    RationalMatrix& operator+=(const RationalMatrix& o);
    RationalMatrix& operator-=(const RationalMatrix& o);
    friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
    friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
    RationalMatrix operator-() const;
    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    RationalMatrix scaled(const Rational& c) const;

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const RationalMatrix& a, const RationalMatrix& b) { return !(a == b); }

    std::vector<Rational> apply(const std::vector<Rational>& v) const;

    long rank() const;
    Rational determinant() const;
    RationalMatrix inverse() const; // throws std::domain_error when singular
    RationalMatrix power(long k) const;

    friend RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b) {
        return a * b - b * a;
    }

    std::string to_string() const;

  private:
    size_t index(long i, long j) const;

    long rows_, cols_;
    std::vector<Rational> e_;
};

// det(lambda I - M) for a square matrix over Q[theta, theta^-1] (entries must
// not involve x). Fraction-free Bareiss elimination over the polynomial ring;
// the result is returned monic as coefficients of lambda^0 .. lambda^mu, each
// a Laurent polynomial in theta.
std::vector<LaurentPoly> char_poly(const LaurentMatrix& m);
std::vector<LaurentPoly> char_poly(const RationalMatrix& m);

// Jordan block sizes of a nilpotent matrix via ranks of powers, sorted in
// decreasing order. Throws if m is not nilpotent.
std::vector<long> nilpotent_block_sizes(const RationalMatrix& m);

// Degree of the minimal polynomial over Q.
long min_poly_degree(const RationalMatrix& m);

// With v: rank of the Krylov matrix [v, Mv, ..., M^(mu-1) v] equals mu.
// Without v: a cyclic vector exists, i.e. minimal polynomial degree = mu.
bool has_cyclic_vector(const RationalMatrix& m,
                       const std::optional<std::vector<Rational>>& v = std::nullopt);

// Dimension of the smallest subspace containing seed and stable under all
// the given operators (breadth-first closure; order-independent).
long krylov_closure_rank(const std::vector<RationalMatrix>& ops,
                         const std::vector<Rational>& seed);

// Inverse of a Laurent polynomial matrix by Gauss-Jordan elimination with
// monomial pivots. Enough for the generalized-permutation pairings used here;
// throws std::domain_error if the matrix is singular or no monomial pivot is
// available.
LaurentMatrix laurent_inverse(const LaurentMatrix& m);

// All rational roots of a monic polynomial over Q given by coefficients of
// lambda^0..lambda^n (with multiplicity); nullopt when the polynomial does
// not split over Q (or the divisor search exceeds its budget).
std::optional<std::vector<Rational>> rational_roots(const std::vector<Rational>& coeffs);

// Conversions: every entry must be constant for the first.
RationalMatrix to_rational_matrix(const LaurentMatrix& m);
LaurentMatrix to_laurent_matrix(const RationalMatrix& m);

} // namespace froblim
