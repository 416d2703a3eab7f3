// Python bindings for the exact engine: spectra, limit data and the full
// report pipelines. Values cross the boundary as strings ("p/q"), ints and
// plain containers so the exactness survives the trip.

#include <froblim/frobenius.hpp>
#include <froblim/pipeline.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace froblim;

namespace {

Weights make_weights(const std::vector<long>& w) { return Weights(w); }

py::list string_list(const std::vector<Rational>& v) {
    py::list out;
    for (const auto& r : v) out.append(r.to_string());
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact-arithmetic invariants of the mirror family of weighted "
              "projective spaces: spectra, connection normal forms and limit "
              "Frobenius structures";

    m.def(
        "spectrum",
        [](const std::vector<long>& w) {
            Spectrum sp = build_spectrum(make_weights(w));
            py::dict d;
            d["mu"] = sp.mu;
            d["n"] = sp.n;
            d["s"] = string_list(sp.s);
            d["alpha"] = string_list(sp.alpha);
            py::list runs;
            for (const auto& r : sp.runs)
                runs.append(py::make_tuple(r.value.to_string(), r.length));
            d["runs"] = runs;
            return d;
        },
        py::arg("weights"),
        "sorted spectrum multiset, alpha values and constant runs");

    m.def(
        "jordan_data",
        [](const std::vector<long>& w) {
            py::list out;
            for (const auto& c : jordan_data(make_weights(w)))
                out.append(py::make_tuple(c.eigenvalue.to_string(), c.block_sizes));
            return out;
        },
        py::arg("weights"),
        "per eigenvalue in [0,1): Jordan block sizes of the limit operator");

    m.def(
        "preprimitive",
        [](const std::vector<long>& w) {
            PreprimitiveResult r = preprimitive_check(limit_fts(make_weights(w)));
            return py::make_tuple(r.homogeneous, r.e0_preprimitive, r.any_preprimitive);
        },
        py::arg("weights"),
        "(homogeneous, e0 pre-primitive, any pre-primitive)");

    m.def(
        "limit_manifold",
        [](long n) {
            FrobeniusData f = limit_manifold(n);
            py::dict d;
            d["mu"] = f.mu;
            d["potential"] = f.potential.to_string();
            py::list euler;
            for (const auto& e : f.euler) euler.append(e.to_string());
            d["euler"] = euler;
            d["wdvv"] = wdvv_check(f);
            HomogeneityResult h = homogeneity_check(f);
            d["homogeneity_degree"] = h.degree.to_string();
            d["homogeneity_remainder"] = h.remainder.to_string();
            return d;
        },
        py::arg("n"),
        "potential, Euler field and consistency bits of the limit manifold "
        "(requires all weights equal to one, i.e. mu = n+1)");

    m.def(
        "log_report",
        [](const std::vector<long>& w) {
            LogReport r = log_structure(make_weights(w));
            py::dict d;
            d["metric_rank_at_0"] = r.metric_rank_at_0;
            d["metric_nondegenerate"] = r.metric_nondegenerate;
            py::dict sections;
            for (const auto& s : r.sections)
                sections[py::str(s.name)] =
                    py::make_tuple(s.flat, s.ic, s.gc, s.ec);
            d["sections"] = sections;
            return d;
        },
        py::arg("weights"), "logarithmic lattice report: (flat, IC, GC, EC) per section");

    m.def(
        "connection_matrices",
        [](const std::vector<long>& w, const std::string& basis) {
            Weights weights = make_weights(w);
            Basis b = basis_from_name(basis);
            py::dict d;
            d["A0"] = build_A0(weights, b).to_string();
            d["R"] = build_R(weights, b).to_string();
            d["Ainf"] = build_Ainf(weights).to_string();
            if (b == Basis::omega || b == Basis::phi)
                d["G"] = build_pairing(weights, b).G.to_string();
            return d;
        },
        py::arg("weights"), py::arg("basis"),
        "closed-form matrices in a frame ('omega', 'phi' or 'psi'), rendered "
        "as exact strings");

    m.def(
        "run",
        [](const std::string& command, const std::vector<long>& w) {
            return run_command(command, make_weights(w)).to_json().dump();
        },
        py::arg("command"), py::arg("weights"),
        "run a full pipeline; returns the JSON report as a string");

    m.def(
        "check",
        [](const std::vector<long>& w) { return run_command("check", make_weights(w)).pass; },
        py::arg("weights"), "true iff every identity check passes");

    m.attr("__version__") = "0.1.0";
}
