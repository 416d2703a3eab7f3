#include <froblim/linalg.hpp>

#include <algorithm>
#include <sstream>

namespace froblim {

size_t RationalMatrix::index(long i, long j) const {
    if (i < 0 || j < 0 || i >= rows_ || j >= cols_)
        throw std::out_of_range("RationalMatrix: index");
    return static_cast<size_t>(i) * cols_ + j;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("RationalMatrix: size mismatch");
    for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("RationalMatrix: size mismatch");
    for (size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
}

RationalMatrix RationalMatrix::operator-() const {
    RationalMatrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
    return r;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("RationalMatrix: size mismatch");
    RationalMatrix r(a.rows_, b.cols_);
    for (long i = 0; i < a.rows_; ++i)
        for (long k = 0; k < a.cols_; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (long j = 0; j < b.cols_; ++j) {
                const Rational& bkj = b.at(k, j);
                if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

RationalMatrix RationalMatrix::scaled(const Rational& c) const {
    RationalMatrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * c;
    return r;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const {
    if (static_cast<long>(v.size()) != cols_)
        throw std::invalid_argument("RationalMatrix: vector size mismatch");
    std::vector<Rational> r(rows_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

long RationalMatrix::rank() const {
    RationalMatrix m = *this;
    long rank = 0;
    for (long col = 0; col < cols_ && rank < rows_; ++col) {
        long pivot = -1;
        for (long i = rank; i < rows_; ++i)
            if (!m.at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        for (long j = 0; j < cols_; ++j) std::swap(m.at(rank, j), m.at(pivot, j));
        Rational inv = Rational(1) / m.at(rank, col);
        for (long j = col; j < cols_; ++j) m.at(rank, j) *= inv;
        for (long i = 0; i < rows_; ++i) {
            if (i == rank || m.at(i, col).is_zero()) continue;
            Rational f = m.at(i, col);
            for (long j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

Rational RationalMatrix::determinant() const {
    if (!square()) throw std::invalid_argument("RationalMatrix: determinant of non-square");
    RationalMatrix m = *this;
    Rational det = 1;
    for (long col = 0; col < cols_; ++col) {
        long pivot = -1;
        for (long i = col; i < rows_; ++i)
            if (!m.at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != col) {
            for (long j = 0; j < cols_; ++j) std::swap(m.at(col, j), m.at(pivot, j));
            det = -det;
        }
        det *= m.at(col, col);
        Rational inv = Rational(1) / m.at(col, col);
        for (long i = col + 1; i < rows_; ++i) {
            if (m.at(i, col).is_zero()) continue;
            Rational f = m.at(i, col) * inv;
            for (long j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return det;
}

RationalMatrix RationalMatrix::inverse() const {
    if (!square()) throw std::invalid_argument("RationalMatrix: inverse of non-square");
    RationalMatrix m = *this;
    RationalMatrix inv = identity(rows_);
    for (long col = 0; col < cols_; ++col) {
        long pivot = -1;
        for (long i = col; i < rows_; ++i)
            if (!m.at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) throw std::domain_error("RationalMatrix: singular");
        if (pivot != col)
            for (long j = 0; j < cols_; ++j) {
                std::swap(m.at(col, j), m.at(pivot, j));
                std::swap(inv.at(col, j), inv.at(pivot, j));
            }
        Rational f = Rational(1) / m.at(col, col);
        for (long j = 0; j < cols_; ++j) {
            m.at(col, j) *= f;
            inv.at(col, j) *= f;
        }
        for (long i = 0; i < rows_; ++i) {
            if (i == col || m.at(i, col).is_zero()) continue;
            Rational g = m.at(i, col);
            for (long j = 0; j < cols_; ++j) {
                m.at(i, j) -= g * m.at(col, j);
                inv.at(i, j) -= g * inv.at(col, j);
            }
        }
    }
    return inv;
}

RationalMatrix RationalMatrix::power(long k) const {
    if (!square()) throw std::invalid_argument("RationalMatrix: power of non-square");
    if (k < 0) throw std::invalid_argument("RationalMatrix: negative power");
    RationalMatrix r = identity(rows_);
    for (long i = 0; i < k; ++i) r = r * *this;
    return r;
}

std::string RationalMatrix::to_string() const {
    std::ostringstream os;
    for (long i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (long j = 0; j < cols_; ++j) os << (j ? " " : "[") << at(i, j).to_string();
        os << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    return os.str();
}

// ---------------------------------------------------------------------------

std::vector<LaurentPoly> char_poly(const LaurentMatrix& m) {
    const long n = m.size();
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            if (!m.at(i, j).x_free())
                throw std::invalid_argument("char_poly: entries must be free of x");

    // Assemble lambda I - M in the ring Q[lambda, theta, theta^-1], with the
    // x slot of LaurentPoly holding the lambda exponent. Scaling the whole
    // matrix by theta^c clears negative theta exponents and scales the
    // determinant by theta^(c n), which is divided out at the end.
    long c = 0;
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            if (!m.at(i, j).is_zero()) c = std::max(c, -m.at(i, j).min_theta_exp());

    LaurentMatrix a(n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            LaurentPoly v = -m.at(i, j);
            if (i == j) v += LaurentPoly::x(1); // lambda
            a.at(i, j) = v.shifted(0, c);
        }

    // Bareiss fraction-free elimination; divisions are exact.
    bool negate = false;
    LaurentPoly prev = LaurentPoly::one();
    for (long k = 0; k + 1 < n; ++k) {
        if (a.at(k, k).is_zero()) {
            long pivot = -1;
            for (long i = k + 1; i < n; ++i)
                if (!a.at(i, k).is_zero()) {
                    pivot = i;
                    break;
                }
            if (pivot < 0)
                throw std::logic_error("char_poly: vanishing determinant column");
            for (long j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(pivot, j));
            negate = !negate;
        }
        for (long i = k + 1; i < n; ++i) {
            for (long j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)).exact_div(prev);
            a.at(i, k) = LaurentPoly::zero();
        }
        prev = a.at(k, k);
    }
    LaurentPoly det = a.at(n - 1, n - 1).shifted(0, -c * n);
    if (negate) det = -det;

    std::vector<LaurentPoly> coeffs(n + 1);
    for (const auto& [key, coef] : det.terms()) {
        long lambda_exp = key.first;
        if (lambda_exp < 0 || lambda_exp > n)
            throw std::logic_error("char_poly: stray lambda exponent");
        coeffs[lambda_exp] += LaurentPoly::monomial(coef, 0, key.second);
    }
    if (coeffs[n] != LaurentPoly::one()) throw std::logic_error("char_poly: not monic");
    return coeffs;
}

std::vector<LaurentPoly> char_poly(const RationalMatrix& m) {
    return char_poly(to_laurent_matrix(m));
}

std::vector<long> nilpotent_block_sizes(const RationalMatrix& m) {
    if (!m.square()) throw std::invalid_argument("nilpotent_block_sizes: non-square");
    const long n = m.rows();
    std::vector<long> ranks; // ranks[k] = rank(m^k), k = 0..
    ranks.push_back(n);
    RationalMatrix p = RationalMatrix::identity(n);
    long steps = 0;
    while (ranks.back() > 0) {
        if (steps++ > n) throw std::domain_error("nilpotent_block_sizes: matrix is not nilpotent");
        p = p * m;
        ranks.push_back(p.rank());
    }
    // Number of blocks of size >= k is rank(m^(k-1)) - rank(m^k).
    std::vector<long> sizes;
    const long kmax = static_cast<long>(ranks.size()) - 1;
    for (long k = 1; k <= kmax; ++k) {
        long ge_k = ranks[k - 1] - ranks[k];
        long ge_k1 = (k < kmax) ? ranks[k] - ranks[k + 1] : 0;
        for (long c = 0; c < ge_k - ge_k1; ++c) sizes.push_back(k);
    }
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

namespace {

// Row-echelon accumulator for incremental rank / membership tests.
class EchelonSpan {
  public:
    // Returns true if v was independent of the span (and got inserted).
    bool insert(std::vector<Rational> v) {
        reduce(v);
        for (size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) {
                Rational inv = Rational(1) / v[i];
                for (auto& c : v) c *= inv;
                rows_.emplace_back(i, std::move(v));
                std::sort(rows_.begin(), rows_.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
                return true;
            }
        return false;
    }
    bool contains(std::vector<Rational> v) const {
        reduce(v);
        for (const auto& c : v)
            if (!c.is_zero()) return false;
        return true;
    }
    long rank() const { return static_cast<long>(rows_.size()); }

  private:
    void reduce(std::vector<Rational>& v) const {
        for (const auto& [lead, row] : rows_) {
            if (v[lead].is_zero()) continue;
            Rational f = v[lead];
            for (size_t j = 0; j < v.size(); ++j) v[j] -= f * row[j];
        }
    }
    std::vector<std::pair<size_t, std::vector<Rational>>> rows_;
};

std::vector<Rational> flatten(const RationalMatrix& m) {
    std::vector<Rational> v;
    v.reserve(m.rows() * m.cols());
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return v;
}

} // namespace

long min_poly_degree(const RationalMatrix& m) {
    if (!m.square()) throw std::invalid_argument("min_poly_degree: non-square");
    EchelonSpan span;
    RationalMatrix p = RationalMatrix::identity(m.rows());
    long deg = 0;
    while (span.insert(flatten(p))) {
        p = p * m;
        ++deg;
        if (deg > m.rows() + 1) throw std::logic_error("min_poly_degree: no dependence found");
    }
    return deg;
}

bool has_cyclic_vector(const RationalMatrix& m, const std::optional<std::vector<Rational>>& v) {
    if (!m.square()) throw std::invalid_argument("has_cyclic_vector: non-square");
    const long n = m.rows();
    if (!v.has_value()) return min_poly_degree(m) == n;
    if (static_cast<long>(v->size()) != n)
        throw std::invalid_argument("has_cyclic_vector: vector size mismatch");
    EchelonSpan span;
    std::vector<Rational> w = *v;
    long rank = 0;
    for (long k = 0; k < n; ++k) {
        if (span.insert(w)) ++rank;
        w = m.apply(w);
    }
    return rank == n;
}

long krylov_closure_rank(const std::vector<RationalMatrix>& ops,
                         const std::vector<Rational>& seed) {
    EchelonSpan span;
    std::vector<std::vector<Rational>> queue;
    if (span.insert(seed)) queue.push_back(seed);
    while (!queue.empty()) {
        std::vector<Rational> v = std::move(queue.back());
        queue.pop_back();
        for (const auto& op : ops) {
            std::vector<Rational> w = op.apply(v);
            if (span.insert(w)) queue.push_back(std::move(w));
        }
    }
    return span.rank();
}

LaurentMatrix laurent_inverse(const LaurentMatrix& m) {
    const long n = m.size();
    LaurentMatrix a = m;
    LaurentMatrix inv = LaurentMatrix::identity(n);
    for (long col = 0; col < n; ++col) {
        long pivot = -1;
        bool column_nonzero = false;
        for (long i = col; i < n; ++i) {
            if (a.at(i, col).is_zero()) continue;
            column_nonzero = true;
            if (a.at(i, col).is_monomial()) {
                pivot = i;
                break;
            }
        }
        if (!column_nonzero) throw std::domain_error("laurent_inverse: singular matrix");
        if (pivot < 0) throw std::domain_error("laurent_inverse: no monomial pivot");
        if (pivot != col)
            for (long j = 0; j < n; ++j) {
                std::swap(a.at(col, j), a.at(pivot, j));
                std::swap(inv.at(col, j), inv.at(pivot, j));
            }
        const auto& [key, c] = *a.at(col, col).terms().begin();
        LaurentPoly f = LaurentPoly::monomial(Rational(1) / c, -key.first, -key.second);
        for (long j = 0; j < n; ++j) {
            a.at(col, j) = a.at(col, j) * f;
            inv.at(col, j) = inv.at(col, j) * f;
        }
        for (long i = 0; i < n; ++i) {
            if (i == col || a.at(i, col).is_zero()) continue;
            LaurentPoly g = a.at(i, col);
            for (long j = 0; j < n; ++j) {
                a.at(i, j) -= g * a.at(col, j);
                inv.at(i, j) -= g * inv.at(col, j);
            }
        }
    }
    return inv;
}

namespace {

// Positive divisors of |z| by trial division; nullopt when |z| has a prime
// factor beyond the search bound.
std::optional<std::vector<mpz_class>> divisors(mpz_class z, long bound = 1000000) {
    z = abs(z);
    if (z == 0) return std::nullopt;
    std::vector<std::pair<mpz_class, int>> factors;
    for (mpz_class p = 2; p * p <= z && p <= bound; ++p) {
        if (z % p != 0) continue;
        int e = 0;
        while (z % p == 0) {
            z /= p;
            ++e;
        }
        factors.emplace_back(p, e);
    }
    if (z > 1) {
        if (z > bound) return std::nullopt;
        factors.emplace_back(z, 1);
    }
    std::vector<mpz_class> ds{1};
    for (const auto& [p, e] : factors) {
        size_t base = ds.size();
        mpz_class pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
        }
    }
    return ds;
}

} // namespace

std::optional<std::vector<Rational>> rational_roots(const std::vector<Rational>& coeffs) {
    if (coeffs.empty() || !(coeffs.back() == Rational(1)))
        throw std::invalid_argument("rational_roots: polynomial must be monic");
    std::vector<Rational> poly = coeffs;
    std::vector<Rational> roots;

    auto eval = [](const std::vector<Rational>& p, const Rational& r) {
        Rational acc = 0;
        for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * r + *it;
        return acc;
    };
    auto deflate = [](std::vector<Rational>& p, const Rational& r) {
        // p := p / (lambda - r), exact.
        std::vector<Rational> q(p.size() - 1);
        Rational carry = 0;
        for (size_t i = p.size(); i-- > 1;) {
            carry = p[i] + carry * r;
            q[i - 1] = carry;
        }
        p = std::move(q);
    };

    while (poly.size() > 1) {
        // Strip lambda^k factors first.
        if (poly.front().is_zero()) {
            roots.emplace_back(0);
            poly.erase(poly.begin());
            continue;
        }
        // Clear denominators: integer polynomial c0..cn; candidates p/q with
        // p | c0 and q | cn.
        mpz_class lcm_den = 1;
        for (const auto& c : poly) lcm_den = lcm(lcm_den, c.denominator());
        std::vector<mpz_class> zc;
        zc.reserve(poly.size());
        for (const auto& c : poly) zc.push_back(c.numerator() * (lcm_den / c.denominator()));
        auto ps = divisors(zc.front());
        auto qs = divisors(zc.back());
        if (!ps || !qs) return std::nullopt;
        bool found = false;
        for (const auto& p : *ps) {
            for (const auto& q : *qs) {
                for (int s : {1, -1}) {
                    Rational cand{mpq_class(s * p, q)};
                    if (eval(poly, cand).is_zero()) {
                        roots.push_back(cand);
                        deflate(poly, cand);
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) return std::nullopt; // does not split over Q
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

RationalMatrix to_rational_matrix(const LaurentMatrix& m) {
    RationalMatrix r(m.size(), m.size());
    for (long i = 0; i < m.size(); ++i)
        for (long j = 0; j < m.size(); ++j) r.at(i, j) = m.at(i, j).constant_value();
    return r;
}

LaurentMatrix to_laurent_matrix(const RationalMatrix& m) {
    if (!m.square()) throw std::invalid_argument("to_laurent_matrix: non-square");
    LaurentMatrix r(m.rows());
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j) r.at(i, j) = LaurentPoly::constant(m.at(i, j));
    return r;
}

} // namespace froblim
