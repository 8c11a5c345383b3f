#ifndef QGRAPH_RATIONAL_HPP
#define QGRAPH_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace qgraph {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

// "p/q" with q > 0 and gcd(p, q) = 1; the denominator is always printed.
inline std::string rat_to_string(const Rat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "p/q" or a bare integer "p".
Rat rat_from_string(const std::string& s);

Rat binomial(unsigned n, unsigned k);

}  // namespace qgraph

#endif  // QGRAPH_RATIONAL_HPP
