#ifndef QGRAPH_ERRORS_HPP
#define QGRAPH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qgraph {

struct InvalidGraph : std::runtime_error {
    explicit InvalidGraph(const std::string& msg)
        : std::runtime_error("InvalidGraph: " + msg) {}
};

struct Disconnected : std::runtime_error {
    explicit Disconnected(const std::string& msg)
        : std::runtime_error("Disconnected: " + msg) {}
};

struct WrongSubcomplex : std::runtime_error {
    explicit WrongSubcomplex(const std::string& msg)
        : std::runtime_error("WrongSubcomplex: " + msg) {}
};

// The coboundary of a white vertex of in_arity >= 4 produces graphs with two
// or more white vertices, which lie outside the domain handled here.
struct UnspecifiedDifferential : std::runtime_error {
    explicit UnspecifiedDifferential(const std::string& msg)
        : std::runtime_error("UnspecifiedDifferential: " + msg) {}
};

struct LimitExceeded : std::runtime_error {
    explicit LimitExceeded(const std::string& msg)
        : std::runtime_error("LimitExceeded: " + msg) {}
};

struct BasisNotClosed : std::runtime_error {
    explicit BasisNotClosed(const std::string& msg)
        : std::runtime_error("BasisNotClosed: " + msg) {}
};

struct NotACocycle : std::runtime_error {
    explicit NotACocycle(const std::string& msg)
        : std::runtime_error("NotACocycle: " + msg) {}
};

struct NotDiagonal : std::runtime_error {
    explicit NotDiagonal(const std::string& msg)
        : std::runtime_error("NotDiagonal: " + msg) {}
};

struct JacobiFailure : std::runtime_error {
    explicit JacobiFailure(const std::string& msg)
        : std::runtime_error("JacobiFailure: " + msg) {}
};

struct ParityMismatch : std::runtime_error {
    explicit ParityMismatch(const std::string& msg)
        : std::runtime_error("ParityMismatch: " + msg) {}
};

struct SlotMismatch : std::runtime_error {
    explicit SlotMismatch(const std::string& msg)
        : std::runtime_error("SlotMismatch: " + msg) {}
};

struct WhiteVertexPresent : std::runtime_error {
    explicit WhiteVertexPresent(const std::string& msg)
        : std::runtime_error("WhiteVertexPresent: " + msg) {}
};

struct NoNonzeroArcs : std::runtime_error {
    explicit NoNonzeroArcs(const std::string& msg)
        : std::runtime_error("NoNonzeroArcs: " + msg) {}
};

struct NotCyclic : std::runtime_error {
    explicit NotCyclic(const std::string& msg)
        : std::runtime_error("NotCyclic: " + msg) {}
};

struct BadPermutation : std::runtime_error {
    explicit BadPermutation(const std::string& msg)
        : std::runtime_error("BadPermutation: " + msg) {}
};

}  // namespace qgraph

#endif  // QGRAPH_ERRORS_HPP
