#include <froblim/laurent.hpp>

#include <sstream>

namespace froblim {

std::string LaurentPoly::to_string(const char* xname, const char* tname) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        Rational a = c;
        if (!first) {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        bool bare = k.first == 0 && k.second == 0;
        if (!a.is_one() || bare) os << a.to_string();
        auto power = [&os](const char* name, long e) {
            if (e == 0) return;
            os << name;
            if (e != 1) os << "^" << e;
        };
        if (!a.is_one() && !bare) os << "*";
        power(xname, k.first);
        if (k.first != 0 && k.second != 0) os << "*";
        power(tname, k.second);
    }
    return os.str();
}

std::string LaurentMatrix::to_string() const {
    std::ostringstream os;
    for (long i = 0; i < size_; ++i) {
        os << "[";
        for (long j = 0; j < size_; ++j) os << (j ? ", " : "") << at(i, j).to_string();
        os << "]";
        if (i + 1 < size_) os << "\n";
    }
    return os.str();
}

} // namespace froblim
