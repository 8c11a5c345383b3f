#include "qgraph/limits.hpp"

#include <cstdlib>
#include <string>

namespace qgraph {

long long soft_limit() {
    static long long cached = [] {
        const char* env = std::getenv("QGRAPH_LIMIT");
        if (!env)
            return 5'000'000LL;
        try {
            long long v = std::stoll(env);
            return v > 0 ? v : 5'000'000LL;
        } catch (...) {
            return 5'000'000LL;
        }
    }();
    return cached;
}

}  // namespace qgraph
