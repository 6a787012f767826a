// Output conventions shared by the CLI and the golden tests.
//
// Homology groups render human-readably as "Z^b + Z/d1 + Z/d2 + ..." with the
// divisor chain normalized, and machine-readably as the bracketed list
// "[d1,d2,...,0,0]": torsion divisors in chain order, then one 0 per free
// factor.  Poincare polynomials render highest degree first ("120*t^5+272*t^4+t^3").

#pragma once

#include "symhom/integer.hpp"
#include "symhom/smith.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace symhom::render {

inline std::string homology_human(const linalg::HomologyResult& h) {
    if (h.betti == 0 && h.torsion.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    if (h.betti == 1) {
        os << "Z";
        first = false;
    } else if (h.betti > 1) {
        os << "Z^" << h.betti;
        first = false;
    }
    for (const auto& d : h.torsion) {
        if (!first) os << " + ";
        os << "Z/" << d;
        first = false;
    }
    return os.str();
}

inline std::string homology_machine(const linalg::HomologyResult& h) {
    std::ostringstream os;
    os << '[';
    bool first = true;
    for (const auto& d : h.torsion) {
        if (!first) os << ',';
        os << d;
        first = false;
    }
    for (int i = 0; i < h.betti; ++i) {
        if (!first) os << ',';
        os << 0;
        first = false;
    }
    os << ']';
    return os.str();
}

inline std::string poincare_human(const std::vector<Int>& coeffs) {
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(coeffs.size()); i-- > 0;) {
        if (coeffs[i] == 0) continue;
        if (!first) os << '+';
        if (i == 0) {
            os << coeffs[i];
        } else {
            if (coeffs[i] != 1) os << coeffs[i] << '*';
            os << 't';
            if (i > 1) os << '^' << i;
        }
        first = false;
    }
    if (first) os << '0';
    return os.str();
}

inline std::string poincare_machine(const std::vector<Int>& coeffs) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) os << ',';
        os << coeffs[i];
    }
    os << ']';
    return os.str();
}

} // namespace symhom::render
