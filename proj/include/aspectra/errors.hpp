#ifndef ASPECTRA_ERRORS_HPP
#define ASPECTRA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace aspectra {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DisconnectedGraph : Error {
    DisconnectedGraph() : Error("graph is disconnected") {}
    explicit DisconnectedGraph(const std::string& what) : Error(what) {}
};

struct TreeHasNoBase : Error {
    TreeHasNoBase() : Error("acyclic graph has no base") {}
};

struct AlphaOutOfRange : Error {
    explicit AlphaOutOfRange(const std::string& got)
        : Error("alpha must lie in [0,1], got " + got) {}
};

struct NoConvergence : Error {
    long iterations;
    double residual;
    NoConvergence(long iters, double res)
        : Error("eigensolver did not converge after " + std::to_string(iters) +
                " iterations (residual " + std::to_string(res) + ")"),
          iterations(iters), residual(res) {}
};

struct NotUnitVector : Error {
    NotUnitVector() : Error("vector is not unit 2-norm") {}
};

struct VertexOutOfRange : Error {
    explicit VertexOutOfRange(int v)
        : Error("vertex " + std::to_string(v) + " out of range") {}
};

struct InvalidGraph : Error {
    using Error::Error;
};

struct InvalidFamilyParams : Error {
    explicit InvalidFamilyParams(const std::string& reason)
        : Error("invalid family parameters: " + reason) {}
};

struct InvalidMoveSet : Error {
    using Error::Error;
};

struct NotACutEdge : Error {
    NotACutEdge() : Error("edge is not a cut-edge") {}
};

struct SwitchConflict : Error {
    using Error::Error;
};

struct EdgeNotFound : Error {
    EdgeNotFound() : Error("edge not present in graph") {}
};

struct InvalidShift : Error {
    using Error::Error;
};

struct ClosedFormMismatch : Error {
    ClosedFormMismatch() : Error("path wronskian closed form disagrees with direct arithmetic") {}
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct CapExceeded : Error {
    explicit CapExceeded(int n, int cap)
        : Error("order " + std::to_string(n) + " exceeds enumeration cap " + std::to_string(cap)) {}
};

struct EmptySpace : Error {
    EmptySpace() : Error("search space contains no graphs") {}
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace aspectra

#endif
