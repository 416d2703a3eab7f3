#pragma once

#include <froblim/rational.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace froblim {

// Weight vector (w_1,...,w_n) of positive integers. The rank of every module
// built from it is mu = 1 + w_1 + ... + w_n.
struct Weights {
    std::vector<long> w;

    Weights() = default;
    explicit Weights(std::vector<long> weights) : w(std::move(weights)) { validate(); }

    long n() const { return static_cast<long>(w.size()); }
    long mu() const {
        long m = 1;
        for (long wi : w) m += wi;
        return m;
    }
    long max_weight() const {
        long m = 0;
        for (long wi : w) m = std::max(m, wi);
        return m;
    }
    void validate() const {
        if (w.empty()) throw std::invalid_argument("Weights: empty weight list");
        for (long wi : w)
            if (wi <= 0) throw std::invalid_argument("Weights: weights must be positive");
    }
    std::string to_string() const;
};

struct Run {
    Rational value;
    long length;

    friend bool operator==(const Run& a, const Run& b) {
        return a.value == b.value && a.length == b.length;
    }
};

// The sorted multiset {l mu / w_i : 0 <= l < w_i}, i = 0..n with w_0 = 1,
// together with alpha_k = k - s_k and the maximal constant runs of s.
struct Spectrum {
    long mu = 0;
    long n = 0;
    std::vector<Rational> s;
    std::vector<Rational> alpha;
    std::vector<Run> runs;
};

Spectrum build_spectrum(const Weights& w);

struct CheckItem {
    std::string name;
    bool pass = false;
    std::string detail; // witness index / diagnostic on failure
};

struct CheckReport {
    std::vector<CheckItem> items;

    bool all_pass() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }
    void add(std::string name, bool pass, std::string detail = "") {
        items.push_back({std::move(name), pass, std::move(detail)});
    }
    void merge(const CheckReport& other, const std::string& prefix = "") {
        for (const auto& it : other.items)
            items.push_back({prefix.empty() ? it.name : prefix + "/" + it.name, it.pass, it.detail});
    }
};

// Evaluates every Spectrum invariant; failures carry a witness index.
CheckReport check_spectrum_symmetries(const Spectrum& sp);

std::vector<Run> constant_runs(const Spectrum& sp);

} // namespace froblim
