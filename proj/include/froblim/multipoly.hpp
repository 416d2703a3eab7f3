#pragma once

#include <froblim/rational.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace froblim {

// Sparse polynomial in a fixed number of variables over Q; exponents may be
// negative (Laurent behaviour is needed for the one-parameter family, whose
// pairing has x^-1 and x^-2 entries).
class MultiPoly {
  public:
    MultiPoly() : nvars_(0) {}
    explicit MultiPoly(long nvars) : nvars_(nvars) {}

    static MultiPoly constant(long nvars, Rational c) {
        MultiPoly p(nvars);
        if (!c.is_zero()) p.terms_[std::vector<long>(nvars, 0)] = std::move(c);
        return p;
    }
    static MultiPoly variable(long nvars, long i, long exp = 1) {
        return monomial(nvars, unit_exp(nvars, i, exp), 1);
    }
    static MultiPoly monomial(long nvars, std::vector<long> exps, Rational c) {
        MultiPoly p(nvars);
        if (static_cast<long>(exps.size()) != nvars)
            throw std::invalid_argument("MultiPoly: exponent size");
        if (!c.is_zero()) p.terms_[std::move(exps)] = std::move(c);
        return p;
    }

    long nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<long>, Rational>& terms() const { return terms_; }

    Rational coeff(const std::vector<long>& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    Rational constant_value() const {
        if (terms_.empty()) return 0;
        if (terms_.size() > 1 || terms_.begin()->first != std::vector<long>(nvars_, 0))
            throw std::domain_error("MultiPoly: not constant");
        return terms_.begin()->second;
    }
    long total_degree() const { // max of sums of exponents, 0 for the zero poly
        long best = 0;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            long d = 0;
            for (long v : e) d += v;
            if (first || d > best) best = d;
            first = false;
        }
        return best;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    MultiPoly operator-() const {
        MultiPoly r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check(b);
        MultiPoly r(a.nvars_);
        std::vector<long> e(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (long i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    MultiPoly scaled(const Rational& c) const {
        MultiPoly r(nvars_);
        if (c.is_zero()) return r;
        for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly derivative(long i) const {
        MultiPoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[i] == 0) continue;
            std::vector<long> f = e;
            --f[i];
            r.add_term(f, c * Rational(e[i]));
        }
        return r;
    }
    // x_i d/dx_i, the logarithmic derivative.
    MultiPoly log_derivative(long i) const {
        MultiPoly r(nvars_);
        for (const auto& [e, c] : terms_)
            if (e[i] != 0) r.add_term(e, c * Rational(e[i]));
        return r;
    }
    // Value at the origin; terms with a negative exponent make it undefined.
    Rational value_at_zero() const {
        Rational v = 0;
        for (const auto& [e, c] : terms_) {
            bool zero_exp = true, negative = false;
            for (long x : e) {
                if (x < 0) negative = true;
                if (x != 0) zero_exp = false;
            }
            if (negative) throw std::domain_error("MultiPoly: pole at the origin");
            if (zero_exp) v = c;
        }
        return v;
    }

    std::string to_string(const std::string& stem = "x") const;

  private:
    static std::vector<long> unit_exp(long nvars, long i, long exp) {
        if (i < 0 || i >= nvars) throw std::out_of_range("MultiPoly: variable index");
        std::vector<long> e(nvars, 0);
        e[i] = exp;
        return e;
    }
    void check(const MultiPoly& o) const {
        if (nvars_ != o.nvars_) throw std::invalid_argument("MultiPoly: nvars mismatch");
    }
    void add_term(const std::vector<long>& e, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    long nvars_;
    std::map<std::vector<long>, Rational> terms_;
};

// Dense square matrix of MultiPoly sharing one variable set.
class ParamMatrix {
  public:
    ParamMatrix() : size_(0), nvars_(0) {}
    ParamMatrix(long size, long nvars)
        : size_(size), nvars_(nvars), e_(size * size, MultiPoly(nvars)) {}

    static ParamMatrix identity(long size, long nvars) {
        ParamMatrix m(size, nvars);
        for (long i = 0; i < size; ++i) m.at(i, i) = MultiPoly::constant(nvars, 1);
        return m;
    }

    long size() const { return size_; }
    long nvars() const { return nvars_; }
    MultiPoly& at(long i, long j) { return e_[idx(i, j)]; }
    const MultiPoly& at(long i, long j) const { return e_[idx(i, j)]; }

    bool is_zero() const {
        for (const auto& p : e_)
            if (!p.is_zero()) return false;
        return true;
    }

    ParamMatrix& operator+=(const ParamMatrix& o) {
        check(o);
        for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
        return *this;
    }
    ParamMatrix& operator-=(const ParamMatrix& o) {
        check(o);
        for (size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
        return *this;
    }
    friend ParamMatrix operator+(ParamMatrix a, const ParamMatrix& b) { return a += b; }
    friend ParamMatrix operator-(ParamMatrix a, const ParamMatrix& b) { return a -= b; }
    ParamMatrix operator-() const {
        ParamMatrix r(size_, nvars_);
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
        return r;
    }
    friend ParamMatrix operator*(const ParamMatrix& a, const ParamMatrix& b) {
        a.check(b);
        ParamMatrix r(a.size_, a.nvars_);
        for (long i = 0; i < a.size_; ++i)
            for (long k = 0; k < a.size_; ++k) {
                const MultiPoly& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (long j = 0; j < a.size_; ++j)
                    if (!b.at(k, j).is_zero()) r.at(i, j) += aik * b.at(k, j);
            }
        return r;
    }
    ParamMatrix scaled(const Rational& c) const {
        ParamMatrix r(size_, nvars_);
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].scaled(c);
        return r;
    }
    ParamMatrix transpose() const {
        ParamMatrix r(size_, nvars_);
        for (long i = 0; i < size_; ++i)
            for (long j = 0; j < size_; ++j) r.at(j, i) = at(i, j);
        return r;
    }
    ParamMatrix derivative(long v) const {
        ParamMatrix r(size_, nvars_);
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].derivative(v);
        return r;
    }
    ParamMatrix log_derivative(long v) const {
        ParamMatrix r(size_, nvars_);
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].log_derivative(v);
        return r;
    }

    friend bool operator==(const ParamMatrix& a, const ParamMatrix& b) {
        return a.size_ == b.size_ && a.nvars_ == b.nvars_ && a.e_ == b.e_;
    }
    friend bool operator!=(const ParamMatrix& a, const ParamMatrix& b) { return !(a == b); }

    friend ParamMatrix commutator(const ParamMatrix& a, const ParamMatrix& b) {
        return a * b - b * a;
    }

  private:
    size_t idx(long i, long j) const {
        if (i < 0 || j < 0 || i >= size_ || j >= size_)
            throw std::out_of_range("ParamMatrix: index");
        return static_cast<size_t>(i) * size_ + j;
    }
    void check(const ParamMatrix& o) const {
        if (size_ != o.size_ || nvars_ != o.nvars_)
            throw std::invalid_argument("ParamMatrix: shape mismatch");
    }

    long size_;
    long nvars_;
    std::vector<MultiPoly> e_;
};

} // namespace froblim
