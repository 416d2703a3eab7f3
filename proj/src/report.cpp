#include <froblim/report.hpp>

#include <froblim/linalg.hpp>

#include <sstream>

namespace froblim {

using nlohmann::json;

json rational_to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const json& j) {
    return Rational::from_string(j.get<std::string>());
}

json laurent_poly_to_json(const LaurentPoly& p) {
    json terms = json::array();
    for (const auto& [key, coeff] : p.terms())
        terms.push_back({{"coeff", coeff.to_string()},
                         {"x_exp", key.first},
                         {"theta_exp", key.second}});
    return terms;
}

LaurentPoly laurent_poly_from_json(const json& j) {
    LaurentPoly p;
    for (const auto& t : j)
        p += LaurentPoly::monomial(Rational::from_string(t.at("coeff").get<std::string>()),
                                   t.at("x_exp").get<long>(), t.at("theta_exp").get<long>());
    return p;
}

json laurent_matrix_to_json(const LaurentMatrix& m) {
    json rows = json::array();
    for (long i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (long j = 0; j < m.size(); ++j) row.push_back(laurent_poly_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return {{"size", m.size()}, {"entries", std::move(rows)}};
}

LaurentMatrix laurent_matrix_from_json(const json& j) {
    const long size = j.at("size").get<long>();
    LaurentMatrix m(size);
    const auto& rows = j.at("entries");
    for (long i = 0; i < size; ++i)
        for (long k = 0; k < size; ++k) m.at(i, k) = laurent_poly_from_json(rows.at(i).at(k));
    return m;
}

json rational_matrix_to_json(const RationalMatrix& m) {
    return laurent_matrix_to_json(to_laurent_matrix(m));
}

namespace {

json checks_to_json(const std::vector<CheckItem>& checks) {
    json arr = json::array();
    for (const auto& c : checks)
        arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return arr;
}

std::vector<CheckItem> checks_from_json(const json& j) {
    std::vector<CheckItem> out;
    for (const auto& c : j)
        out.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>(),
                       c.at("detail").get<std::string>()});
    return out;
}

} // namespace

json Report::to_json() const {
    return {{"command", command}, {"weights", weights}, {"mu", mu},
            {"n", n},             {"checks", checks_to_json(checks)},
            {"matrices", matrices}, {"extras", extras},
            {"pass", pass},       {"status", status}};
}

Report Report::from_json(const json& j) {
    Report r;
    r.command = j.at("command").get<std::string>();
    r.weights = j.at("weights").get<std::vector<long>>();
    r.mu = j.at("mu").get<long>();
    r.n = j.at("n").get<long>();
    r.checks = checks_from_json(j.at("checks"));
    r.matrices = j.at("matrices");
    r.extras = j.at("extras");
    r.pass = j.at("pass").get<bool>();
    r.status = j.at("status").get<int>();
    return r;
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "command: " << command << "\nweights: (";
    for (size_t i = 0; i < weights.size(); ++i) os << (i ? "," : "") << weights[i];
    os << ")  mu=" << mu << "  n=" << n << "\n";
    for (const auto& c : checks) {
        os << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) os << "  [" << c.detail << "]";
        os << "\n";
    }
    if (!extras.empty()) os << "extras: " << extras.dump() << "\n";
    os << (pass ? "overall: PASS" : (status == 2 ? "overall: OBSTRUCTION" : "overall: FAIL"))
       << "\n";
    return os.str();
}

json GridReport::to_json() const {
    json reps = json::array();
    for (const auto& r : reports) reps.push_back(r.to_json());
    return {{"command", command},
            {"grid", {{"nmax", nmax}, {"wmax", wmax}}},
            {"reports", std::move(reps)},
            {"pass", pass}};
}

GridReport GridReport::from_json(const json& j) {
    GridReport g;
    g.command = j.at("command").get<std::string>();
    g.nmax = j.at("grid").at("nmax").get<long>();
    g.wmax = j.at("grid").at("wmax").get<long>();
    for (const auto& r : j.at("reports")) g.reports.push_back(Report::from_json(r));
    g.pass = j.at("pass").get<bool>();
    return g;
}

std::string GridReport::to_text() const {
    std::ostringstream os;
    os << "command: " << command << "  grid: n<=" << nmax << ", w<=" << wmax << "\n";
    for (const auto& r : reports) {
        os << "  (";
        for (size_t i = 0; i < r.weights.size(); ++i) os << (i ? "," : "") << r.weights[i];
        os << "): " << (r.pass ? "PASS" : (r.status == 2 ? "OBSTRUCTION" : "FAIL")) << "\n";
    }
    os << (pass ? "overall: PASS" : "overall: FAIL") << "\n";
    return os.str();
}

} // namespace froblim
