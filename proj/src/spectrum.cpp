#include <froblim/spectrum.hpp>

#include <algorithm>
#include <sstream>

namespace froblim {

std::string Weights::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    os << ")";
    return os.str();
}

Spectrum build_spectrum(const Weights& weights) {
    weights.validate();
    Spectrum sp;
    sp.n = weights.n();
    sp.mu = weights.mu();

    // Disjoint union over i = 0..n (w_0 = 1): equal values from different i
    // contribute separate entries, |S_w| = mu.
    sp.s.reserve(sp.mu);
    sp.s.emplace_back(0); // i = 0
    for (long wi : weights.w)
        for (long l = 0; l < wi; ++l) sp.s.push_back(Rational(l * sp.mu, wi));
    std::sort(sp.s.begin(), sp.s.end());

    sp.alpha.reserve(sp.mu);
    for (long k = 0; k < sp.mu; ++k) sp.alpha.push_back(Rational(k) - sp.s[k]);

    sp.runs = constant_runs(sp);
    return sp;
}

std::vector<Run> constant_runs(const Spectrum& sp) {
    std::vector<Run> runs;
    for (const auto& v : sp.s) {
        if (!runs.empty() && runs.back().value == v)
            ++runs.back().length;
        else
            runs.push_back({v, 1});
    }
    return runs;
}

CheckReport check_spectrum_symmetries(const Spectrum& sp) {
    CheckReport rep;
    const long mu = sp.mu, n = sp.n;
    auto witness = [](long k) { return "k=" + std::to_string(k); };

    {
        bool ok = static_cast<long>(sp.s.size()) == mu &&
                  static_cast<long>(sp.alpha.size()) == mu;
        rep.add("spectrum-size", ok, ok ? "" : "|S_w| != mu");
        if (!ok) return rep;
    }
    {
        bool ok = true;
        std::string d;
        for (long k = 0; k + 1 < mu && ok; ++k)
            if (sp.s[k + 1] < sp.s[k]) {
                ok = false;
                d = witness(k);
            }
        rep.add("s-nondecreasing", ok, d);
    }
    {
        bool ok = true;
        std::string d;
        for (long k = 0; k < mu && ok; ++k)
            if (sp.s[k].sign() < 0 || !(sp.s[k] < Rational(mu))) {
                ok = false;
                d = witness(k);
            }
        rep.add("s-range", ok, d);
    }
    {
        bool ok = true;
        std::string d;
        for (long k = 0; k <= n && ok; ++k)
            if (!sp.s[k].is_zero()) {
                ok = false;
                d = witness(k);
            }
        rep.add("s-zero-head", ok, d);
    }
    {
        bool ok = true;
        std::string d;
        if (mu > n + 1) {
            // s_{n+1} = mu / max_i w_i; max w_i = mu / s_{n+1} is recovered
            // from the smallest positive element.
            Rational smallest = sp.s[n + 1];
            ok = smallest.sign() > 0 && (Rational(mu) / smallest).is_integer();
            if (!ok) d = "s[n+1]=" + smallest.to_string();
        }
        rep.add("s-first-positive", ok, d);
    }
    {
        bool ok = true;
        std::string d;
        for (long k = n + 1; k < mu && ok; ++k)
            if (sp.s[k] + sp.s[mu + n - k] != Rational(mu)) {
                ok = false;
                d = witness(k);
            }
        rep.add("s-symmetry", ok, d);
    }
    {
        bool ok = true;
        std::string d;
        for (long k = 0; k <= n && ok; ++k)
            if (sp.alpha[k] != Rational(k)) {
                ok = false;
                d = witness(k);
            }
        rep.add("alpha-head", ok, d);
    }
    {
        bool ok = true;
        std::string d;
        for (long k = 0; k + 1 < mu && ok; ++k)
            if (!(sp.alpha[k + 1] <= sp.alpha[k] + Rational(1))) {
                ok = false;
                d = witness(k);
            }
        rep.add("alpha-step", ok, d);
    }
    {
        bool ok = true;
        std::string d;
        for (long k = n + 1; k < mu && ok; ++k)
            if (sp.alpha[k] + sp.alpha[mu + n - k] != Rational(n)) {
                ok = false;
                d = witness(k);
            }
        rep.add("alpha-symmetry-tail", ok, d);
    }
    {
        bool ok = true;
        std::string d;
        for (long k = 0; k <= n && ok; ++k)
            if (sp.alpha[k] + sp.alpha[n - k] != Rational(n)) {
                ok = false;
                d = witness(k);
            }
        rep.add("alpha-symmetry-head", ok, d);
    }
    {
        long total = 0;
        for (const auto& r : sp.runs) total += r.length;
        rep.add("runs-sum", total == mu, total == mu ? "" : "sum=" + std::to_string(total));
    }
    return rep;
}

} // namespace froblim
