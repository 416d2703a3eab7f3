#pragma once

#include <froblim/rational.hpp>

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace froblim {

// Laurent polynomial in two formal variables x and theta over the exact
// rationals: a finite sum of c * x^a * theta^b with a, b in Z. The term map
// never stores zero coefficients, so equality is structural.
//
// The same type doubles as the ring Q[lambda, theta, theta^-1] used by the
// characteristic polynomial routine: the x slot holds the lambda exponent
// there (callers must keep the two uses apart).
class LaurentPoly {
  public:
    using Key = std::pair<long, long>; // (x exponent, theta exponent)

    LaurentPoly() = default;

    static LaurentPoly zero() { return {}; }
    static LaurentPoly constant(Rational c) { return monomial(std::move(c), 0, 0); }
    static LaurentPoly one() { return constant(1); }
    static LaurentPoly monomial(Rational c, long x_exp, long theta_exp) {
        LaurentPoly p;
        if (!c.is_zero()) p.terms_[{x_exp, theta_exp}] = std::move(c);
        return p;
    }
    static LaurentPoly x(long exp = 1) { return monomial(1, exp, 0); }
    static LaurentPoly theta(long exp = 1) { return monomial(1, 0, exp); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{0, 0});
    }
    bool is_monomial() const { return terms_.size() == 1; }
    bool x_free() const {
        for (const auto& [k, c] : terms_)
            if (k.first != 0) return false;
        return true;
    }
    bool theta_free() const {
        for (const auto& [k, c] : terms_)
            if (k.second != 0) return false;
        return true;
    }

    size_t term_count() const { return terms_.size(); }
    const std::map<Key, Rational>& terms() const { return terms_; }

    Rational coeff(long x_exp, long theta_exp) const {
        auto it = terms_.find({x_exp, theta_exp});
        return it == terms_.end() ? Rational(0) : it->second;
    }
    // The whole polynomial must be a constant; returns it.
    Rational constant_value() const {
        if (!is_constant())
            throw std::domain_error("LaurentPoly: not a constant: " + to_string());
        return coeff(0, 0);
    }

    long min_x_exp() const { return extreme(true, true); }
    long max_x_exp() const { return extreme(true, false); }
    long min_theta_exp() const { return extreme(false, true); }
    long max_theta_exp() const { return extreme(false, false); }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [k, c] : terms_) r.terms_[k] = -c;
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly scaled(const Rational& c) const {
        LaurentPoly r;
        if (c.is_zero()) return r;
        for (const auto& [k, v] : terms_) r.terms_[k] = v * c;
        return r;
    }
    // Multiply by x^a theta^b.
    LaurentPoly shifted(long x_exp, long theta_exp) const {
        LaurentPoly r;
        for (const auto& [k, v] : terms_) r.terms_[{k.first + x_exp, k.second + theta_exp}] = v;
        return r;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
        return !(a == b);
    }

    // Formal derivatives; d/dx (x^a) = a x^(a-1) for any integer a.
    LaurentPoly dx() const {
        LaurentPoly r;
        for (const auto& [k, c] : terms_)
            if (k.first != 0) r.add_term({k.first - 1, k.second}, c * Rational(k.first));
        return r;
    }
    LaurentPoly dtheta() const {
        LaurentPoly r;
        for (const auto& [k, c] : terms_)
            if (k.second != 0) r.add_term({k.first, k.second - 1}, c * Rational(k.second));
        return r;
    }

    // theta -> -theta.
    LaurentPoly flip_theta_sign() const {
        LaurentPoly r;
        for (const auto& [k, c] : terms_)
            r.terms_[k] = (k.second % 2 == 0) ? c : -c;
        return r;
    }

    // Value at x = 0: terms with positive x exponent vanish; a term with a
    // negative exponent makes the substitution undefined.
    LaurentPoly substitute_x_zero() const {
        LaurentPoly r;
        for (const auto& [k, c] : terms_) {
            if (k.first < 0)
                throw std::domain_error("LaurentPoly: pole at x=0 in " + to_string());
            if (k.first == 0) r.terms_[k] = c;
        }
        return r;
    }
    LaurentPoly substitute_x_one() const {
        LaurentPoly r;
        for (const auto& [k, c] : terms_) r.add_term({0, k.second}, c);
        return r;
    }
    // Collect the coefficient of theta^e as a polynomial in x alone.
    LaurentPoly theta_coefficient(long e) const {
        LaurentPoly r;
        for (const auto& [k, c] : terms_)
            if (k.second == e) r.terms_[{k.first, 0}] = c;
        return r;
    }

    // Exact division, used by the fraction-free elimination: throws if the
    // divisor does not divide this polynomial. Leading terms are taken in
    // lexicographic (x, theta) order.
    LaurentPoly exact_div(const LaurentPoly& d) const {
        if (d.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
        if (d.is_monomial()) {
            const auto& [k, c] = *d.terms_.begin();
            return shifted(-k.first, -k.second).scaled(Rational(1) / c);
        }
        LaurentPoly rem = *this, quot;
        const Key lead_d_key = d.terms_.rbegin()->first;
        const Rational lead_d_coeff = d.terms_.rbegin()->second;
        long guard = 0;
        while (!rem.is_zero()) {
            if (++guard > 1000000)
                throw std::domain_error("LaurentPoly: inexact division (no convergence)");
            const Key lead_r_key = rem.terms_.rbegin()->first;
            const Rational lead_r_coeff = rem.terms_.rbegin()->second;
            LaurentPoly t = monomial(lead_r_coeff / lead_d_coeff,
                                     lead_r_key.first - lead_d_key.first,
                                     lead_r_key.second - lead_d_key.second);
            quot += t;
            rem -= t * d;
            if (!rem.is_zero() && !(rem.terms_.rbegin()->first < lead_r_key))
                throw std::domain_error("LaurentPoly: inexact division");
        }
        return quot;
    }

    std::string to_string(const char* xname = "x", const char* tname = "theta") const;

  private:
    long extreme(bool use_x, bool want_min) const {
        if (terms_.empty()) return 0;
        bool first = true;
        long best = 0;
        for (const auto& [k, c] : terms_) {
            long e = use_x ? k.first : k.second;
            if (first || (want_min ? e < best : e > best)) best = e;
            first = false;
        }
        return best;
    }
    void add_term(const Key& k, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::map<Key, Rational> terms_;
};

// Dense square matrix of Laurent polynomials.
class LaurentMatrix {
  public:
    LaurentMatrix() : size_(0) {}
    explicit LaurentMatrix(long size) : size_(size), e_(size * size) {
        if (size < 0) throw std::invalid_argument("LaurentMatrix: negative size");
    }

    static LaurentMatrix identity(long size) {
        LaurentMatrix m(size);
        for (long i = 0; i < size; ++i) m.at(i, i) = LaurentPoly::one();
        return m;
    }

    long size() const { return size_; }
    LaurentPoly& at(long i, long j) { return e_[index(i, j)]; }
    const LaurentPoly& at(long i, long j) const { return e_[index(i, j)]; }

    bool is_zero() const {
        for (const auto& p : e_)
            if (!p.is_zero()) return false;
        return true;
    }
    bool is_diagonal() const {
        for (long i = 0; i < size_; ++i)
            for (long j = 0; j < size_; ++j)
                if (i != j && !at(i, j).is_zero()) return false;
        return true;
    }

    LaurentMatrix& operator+=(const LaurentMatrix& o) {
        check_same(o);
        for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
        return *this;
    }
    LaurentMatrix& operator-=(const LaurentMatrix& o) {
        check_same(o);
        for (size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
        return *this;
    }
    friend LaurentMatrix operator+(LaurentMatrix a, const LaurentMatrix& b) { return a += b; }
    friend LaurentMatrix operator-(LaurentMatrix a, const LaurentMatrix& b) { return a -= b; }
    LaurentMatrix operator-() const { return map([](const LaurentPoly& p) { return -p; }); }

    friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
        a.check_same(b);
        LaurentMatrix r(a.size_);
        for (long i = 0; i < a.size_; ++i)
            for (long k = 0; k < a.size_; ++k) {
                const LaurentPoly& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (long j = 0; j < a.size_; ++j) {
                    const LaurentPoly& bkj = b.at(k, j);
                    if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
                }
            }
        return r;
    }

    friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) {
        return a.size_ == b.size_ && a.e_ == b.e_;
    }
    friend bool operator!=(const LaurentMatrix& a, const LaurentMatrix& b) { return !(a == b); }

    LaurentMatrix transpose() const {
        LaurentMatrix r(size_);
        for (long i = 0; i < size_; ++i)
            for (long j = 0; j < size_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    LaurentMatrix map(const std::function<LaurentPoly(const LaurentPoly&)>& f) const {
        LaurentMatrix r(size_);
        for (long i = 0; i < size_; ++i)
            for (long j = 0; j < size_; ++j) r.at(i, j) = f(at(i, j));
        return r;
    }

    LaurentMatrix scaled(const LaurentPoly& p) const {
        return map([&](const LaurentPoly& q) { return q * p; });
    }
    LaurentMatrix scaled(const Rational& c) const {
        return map([&](const LaurentPoly& q) { return q.scaled(c); });
    }
    LaurentMatrix shifted(long x_exp, long theta_exp) const {
        return map([&](const LaurentPoly& q) { return q.shifted(x_exp, theta_exp); });
    }
    LaurentMatrix dx() const {
        return map([](const LaurentPoly& q) { return q.dx(); });
    }
    LaurentMatrix dtheta() const {
        return map([](const LaurentPoly& q) { return q.dtheta(); });
    }
    LaurentMatrix flip_theta_sign() const {
        return map([](const LaurentPoly& q) { return q.flip_theta_sign(); });
    }
    LaurentMatrix substitute_x_zero() const {
        return map([](const LaurentPoly& q) { return q.substitute_x_zero(); });
    }
    LaurentMatrix theta_coefficient(long e) const {
        return map([&](const LaurentPoly& q) { return q.theta_coefficient(e); });
    }

    friend LaurentMatrix commutator(const LaurentMatrix& a, const LaurentMatrix& b) {
        return a * b - b * a;
    }

    std::string to_string() const;

  private:
    size_t index(long i, long j) const {
        if (i < 0 || j < 0 || i >= size_ || j >= size_)
            throw std::out_of_range("LaurentMatrix: index");
        return static_cast<size_t>(i) * size_ + j;
    }
    void check_same(const LaurentMatrix& o) const {
        if (size_ != o.size_) throw std::invalid_argument("LaurentMatrix: size mismatch");
    }

    long size_;
    std::vector<LaurentPoly> e_;
};

// Matrix whose entries are single monomials c * x^q with rational exponent q.
// Keeps fractional exponents produced by x^R conjugation out of LaurentPoly.
class RationalExponentMatrix {
  public:
    struct Entry {
        Rational coeff;  // zero means the entry is absent
        Rational x_exp;
    };

    RationalExponentMatrix() : size_(0) {}
    explicit RationalExponentMatrix(long size) : size_(size), e_(size * size) {}

    long size() const { return size_; }
    Entry& at(long i, long j) { return e_[static_cast<size_t>(i) * size_ + j]; }
    const Entry& at(long i, long j) const { return e_[static_cast<size_t>(i) * size_ + j]; }

  private:
    long size_;
    std::vector<Entry> e_;
};

} // namespace froblim
