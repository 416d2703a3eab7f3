// Command line front end: runs a pipeline over one weight vector (or a grid)
// and emits a JSON or text report.
//
// Exit codes: 0 all checks pass, 1 internal error, 2 mathematical
// obstruction (expected for `manifold` when mu >= n+2), 3 usage error.

#include <froblim/pipeline.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

froblim::Weights parse_weights(const std::string& csv) {
    std::vector<long> w;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        long v = 0;
        try {
            v = std::stol(item, &pos);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--weights", "not an integer: '" + item + "'");
        }
        if (pos != item.size())
            throw CLI::ValidationError("--weights", "not an integer: '" + item + "'");
        w.push_back(v);
    }
    if (w.empty()) throw CLI::ValidationError("--weights", "empty weight list");
    for (long v : w)
        if (v <= 0) throw CLI::ValidationError("--weights", "weights must be positive");
    return froblim::Weights(w);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << std::endl;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open output file '" + out_path + "'");
    f << text << std::endl;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact structures of the mirror family of weighted projective spaces:\n"
                 "spectra, connection normal forms, pairings, degeneration data at x = 0\n"
                 "and the limit Frobenius structures, all in exact rational arithmetic"};
    app.require_subcommand(1);

    std::string weights_csv, format = "json", out_path, grid_spec;
    app.add_option("--weights", weights_csv, "comma separated positive integers w1,w2,...");
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", out_path, "write the report to a file instead of stdout");
    app.add_option("--grid", grid_spec,
                   "batch mode over all weight vectors with n <= nmax, w_i <= wmax; "
                   "format nmax,wmax");

    for (const char* name : {"spectrum", "connection", "check", "limit", "manifold", "log", "all"})
        app.add_subcommand(name)->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        if (!grid_spec.empty()) {
            size_t comma = grid_spec.find(',');
            if (comma == std::string::npos) {
                std::cerr << "error: --grid expects nmax,wmax" << std::endl;
                return 3;
            }
            long nmax = 0, wmax = 0;
            try {
                nmax = std::stol(grid_spec.substr(0, comma));
                wmax = std::stol(grid_spec.substr(comma + 1));
            } catch (const std::exception&) {
                std::cerr << "error: --grid expects nmax,wmax" << std::endl;
                return 3;
            }
            if (nmax < 1 || wmax < 1) {
                std::cerr << "error: --grid bounds must be positive" << std::endl;
                return 3;
            }
            froblim::GridReport g = froblim::run_grid(command, nmax, wmax);
            emit(format == "json" ? g.to_json().dump(2) : g.to_text(), out_path);
            return g.pass ? 0 : 1;
        }

        if (weights_csv.empty()) {
            std::cerr << "error: --weights is required (or use --grid)" << std::endl;
            return 3;
        }
        froblim::Weights w = parse_weights(weights_csv);
        froblim::Report r = froblim::run_command(command, w);
        emit(format == "json" ? r.to_json().dump(2) : r.to_text(), out_path);
        if (r.status == 2) return 2;
        return r.pass ? 0 : 1;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << std::endl;
        return 1;
    }
}
