#include <froblim/multipoly.hpp>

#include <sstream>

namespace froblim {

std::string MultiPoly::to_string(const std::string& stem) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = c;
        if (!first) {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        bool bare = true;
        for (long v : e)
            if (v != 0) bare = false;
        bool printed_coeff = false;
        if (!a.is_one() || bare) {
            os << a.to_string();
            printed_coeff = true;
        }
        bool first_var = true;
        for (long i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (printed_coeff || !first_var) os << "*";
            os << stem << (i + 1);
            if (e[i] != 1) os << "^" << e[i];
            first_var = false;
        }
    }
    return os.str();
}

} // namespace froblim
