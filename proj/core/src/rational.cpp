#include "qgraph/rational.hpp"

#include <stdexcept>

namespace qgraph {

Rat rat_from_string(const std::string& s) {
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rat(Int(s));
        Int p(s.substr(0, slash));
        Int q(s.substr(slash + 1));
        if (q == 0)
            throw std::invalid_argument("zero denominator in \"" + s + "\"");
        return Rat(p, q);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument("bad rational literal \"" + s + "\"");
    }
}

Rat binomial(unsigned n, unsigned k) {
    if (k > n)
        return Rat(0);
    Int num = 1, den = 1;
    for (unsigned i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return Rat(num, den);
}

}  // namespace qgraph
