#include "ei/laurent.hpp"

#include <sstream>

namespace ei {

std::string LaurentPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : coeffs_) {
        Int a = abs_int(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << a.str();
        } else {
            if (a != 1) os << a.str() << "*";
            os << "t";
            if (k != 1) os << "^" << k;
        }
    }
    return os.str();
}

}  // namespace ei
