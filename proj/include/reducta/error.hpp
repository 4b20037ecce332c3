#pragma once

#include <stdexcept>
#include <string>

namespace reducta {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero coefficient") {}
};

struct BadIndex : Error {
    explicit BadIndex(const std::string& what) : Error("bad index: " + what) {}
};

struct RingMismatch : Error {
    RingMismatch() : Error("coefficients from rings with different variable counts") {}
};

struct PoleHit : Error {
    explicit PoleHit(const std::string& what) : Error("evaluation point is a pole: " + what) {}
};

struct NotInRootLattice : Error {
    NotInRootLattice() : Error("weight is not in the root lattice") {}
};

struct TruncationCapExceeded : Error {
    explicit TruncationCapExceeded(const std::string& what)
        : Error("projector factor series exceeded its truncation cap: " + what) {}
};

struct StepCapExceeded : Error {
    explicit StepCapExceeded(const std::string& what)
        : Error("rewriting step cap exceeded: " + what) {}
};

struct MeasureIncreased : Error {
    explicit MeasureIncreased(const std::string& what)
        : Error("rewriting measure increased: " + what) {}
};

struct Singular : Error {
    Singular() : Error("matrix is singular") {}
};

struct SingularBlock : Error {
    explicit SingularBlock(const std::string& what)
        : Error("weight block system is singular: " + what) {}
};

struct ZeroDenominator : Error {
    ZeroDenominator() : Error("cauchy matrix node sum x_i + y_j vanishes") {}
};

struct DegenerateNodes : Error {
    DegenerateNodes() : Error("cauchy nodes are not pairwise distinct") {}
};

struct NotCuttable : Error {
    explicit NotCuttable(const std::string& what)
        : Error("relation has a column-(n+1) generator as a left factor: " + what) {}
};

struct SpanFailure : Error {
    explicit SpanFailure(const std::string& what)
        : Error("stabilization defect is outside the predicted span: " + what) {}
};

struct SyntaxError : Error {
    size_t pos;
    SyntaxError(const std::string& what, size_t position)
        : Error("syntax error at position " + std::to_string(position) + ": " + what),
          pos(position) {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& what) : Error("index out of range: " + what) {}
};

} // namespace reducta
