#pragma once

#include <stdexcept>
#include <string>

namespace centralcurve {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// shape / input contract violations
struct MismatchedShape : Error {
    explicit MismatchedShape(const std::string& w) : Error("mismatched shape: " + w) {}
};
struct ZeroMatrix : Error {
    ZeroMatrix() : Error("matrix is identically zero") {}
};
struct RankDeficient : Error {
    explicit RankDeficient(const std::string& w) : Error("rank deficient: " + w) {}
};
struct DegenerateCost : Error {
    DegenerateCost() : Error("cost vector lies in the row space of the constraint matrix") {}
};
struct NotACircuit : Error {
    explicit NotACircuit(const std::string& w) : Error("not a circuit: " + w) {}
};
struct IdenticalPoints : Error {
    IdenticalPoints() : Error("line requires two distinct projective points") {}
};
struct ZeroRestriction : Error {
    ZeroRestriction() : Error("polynomial vanishes identically on the line") {}
};
struct AmbientNot2D : Error {
    explicit AmbientNot2D(const std::string& w) : Error("trace is not planar: " + w) {}
};
struct NotPlanar : Error {
    explicit NotPlanar(const std::string& w) : Error("plot requires a planar instance: " + w) {}
};
struct LimitExceeded : Error {
    explicit LimitExceeded(const std::string& w) : Error("size limit exceeded: " + w) {}
};
struct UnknownExample : Error {
    explicit UnknownExample(const std::string& w) : Error("unknown example name: " + w) {}
};

// numerical failures
struct NewtonDivergence : Error {
    explicit NewtonDivergence(const std::string& w) : Error("Newton iteration diverged: " + w) {}
};
struct LeftRegion : Error {
    explicit LeftRegion(const std::string& w) : Error("step left the region: " + w) {}
};

// input file problems, with position when known
struct ParseError : Error {
    int line = -1, column = -1;
    explicit ParseError(const std::string& w, int ln = -1, int col = -1)
        : Error(ln >= 0 ? "parse error at " + std::to_string(ln) + ":" + std::to_string(col) + ": " + w
                        : "parse error: " + w),
          line(ln), column(col) {}
};

// two independent internal computations disagreed: a bug, not bad input
struct InternalInconsistency : Error {
    explicit InternalInconsistency(const std::string& w) : Error("internal inconsistency: " + w) {}
};

} // namespace centralcurve
