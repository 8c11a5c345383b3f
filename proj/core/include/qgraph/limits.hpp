#ifndef QGRAPH_LIMITS_HPP
#define QGRAPH_LIMITS_HPP

namespace qgraph {

// Soft cap on combinatorial work (candidate orderings per canonicalization,
// generated assignments per enumeration call).  Default 5'000'000; override
// with the QGRAPH_LIMIT environment variable.  Exceeding it raises
// LimitExceeded rather than silently truncating.
long long soft_limit();

}  // namespace qgraph

#endif  // QGRAPH_LIMITS_HPP
