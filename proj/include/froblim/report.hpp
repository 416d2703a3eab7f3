#pragma once

#include <froblim/connection.hpp>
#include <froblim/spectrum.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace froblim {

// Structured result of one pipeline run. Serialization is exact: rationals
// as "p/q" strings, Laurent monomials as {coeff, x_exp, theta_exp} triples;
// parse(emit(r)) == r.
struct Report {
    std::string command;
    std::vector<long> weights;
    long mu = 0;
    long n = 0;
    std::vector<CheckItem> checks;
    nlohmann::json matrices = nlohmann::json::object();
    nlohmann::json extras = nlohmann::json::object();
    bool pass = false;
    int status = 0; // 0 ok, 2 mathematical obstruction

    nlohmann::json to_json() const;
    static Report from_json(const nlohmann::json& j);
    std::string to_text() const;

    friend bool operator==(const Report& a, const Report& b) {
        return a.to_json() == b.to_json();
    }
};

struct GridReport {
    std::string command;
    long nmax = 0;
    long wmax = 0;
    std::vector<Report> reports;
    bool pass = false;

    nlohmann::json to_json() const;
    static GridReport from_json(const nlohmann::json& j);
    std::string to_text() const;
};

nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);
nlohmann::json laurent_poly_to_json(const LaurentPoly& p);
LaurentPoly laurent_poly_from_json(const nlohmann::json& j);
nlohmann::json laurent_matrix_to_json(const LaurentMatrix& m);
LaurentMatrix laurent_matrix_from_json(const nlohmann::json& j);
nlohmann::json rational_matrix_to_json(const RationalMatrix& m);

} // namespace froblim
