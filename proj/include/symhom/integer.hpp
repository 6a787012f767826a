// Exact integer arithmetic and common error types.
//
// All homology computations run over unbounded integers; intermediate
// coefficient growth is expected and must not overflow silently.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace symhom {

using Int = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

// Thrown when a structural self-check fails (d∘d != 0, a chain map that does
// not commute, ...).  Reaching this indicates a bug, not bad user input.
struct verification_error : std::runtime_error {
    explicit verification_error(const std::string& what) : std::runtime_error(what) {}
};

inline Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

} // namespace symhom
