#include "ndr/polynomial.hpp"

#include <sstream>

namespace ndr {

std::string Poly::to_string(const std::string& var_prefix) const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print highest-degree terms first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;

        std::string vars;
        for (int i = 0; i < kMaxVars; ++i) {
            if (m.e[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += var_prefix + std::to_string(i);
            if (m.e[i] > 1) vars += "^" + std::to_string(static_cast<int>(m.e[i]));
        }
        if (vars.empty()) {
            os << rational_to_string(mag);
        } else {
            if (mag != 1) os << rational_to_string(mag) << "*";
            os << vars;
        }
    }
    return os.str();
}

} // namespace ndr
