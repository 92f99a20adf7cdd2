#pragma once

#include <stdexcept>
#include <string>

namespace addel {

// Exception hierarchy. Every failure mode the library reports deliberately
// gets its own type so callers (and the CLI exit-code mapping) can tell
// input errors from computational limitations.

struct AddelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// -- arithmetic
struct DivisionByZero : AddelError {
    DivisionByZero() : AddelError("division by zero") {}
};
struct MixedBackends : AddelError {
    explicit MixedBackends(const std::string& what) : AddelError("mixed field backends: " + what) {}
};

// -- polynomials
struct DegreeMismatch : AddelError {
    explicit DegreeMismatch(const std::string& what) : AddelError("degree mismatch: " + what) {}
};
struct ZeroForm : AddelError {
    ZeroForm() : AddelError("operation undefined on the zero form") {}
};

// -- parsing
struct ParseError : AddelError {
    ParseError(const std::string& what, std::size_t line, std::size_t col)
        : AddelError("parse error at " + std::to_string(line) + ":" + std::to_string(col) + ": " + what),
          line(line), col(col) {}
    std::size_t line, col;
};

// -- curves
struct DuplicateComponent : AddelError {
    explicit DuplicateComponent(const std::string& what) : AddelError("duplicate component: " + what) {}
};
struct SingularConicDeclaredSmooth : AddelError {
    explicit SingularConicDeclaredSmooth(const std::string& what)
        : AddelError("conic declared smooth is singular: " + what) {}
};
struct NoRationalPointFound : AddelError {
    explicit NoRationalPointFound(const std::string& what)
        : AddelError("no rational point found on conic: " + what) {}
};
struct ComponentEqualsConic : AddelError {
    ComponentEqualsConic() : AddelError("a component of the curve equals the given conic") {}
};
struct ComponentEqualsLine : AddelError {
    ComponentEqualsLine() : AddelError("a component of the curve equals the given line") {}
};
struct NonSmoothComponent : AddelError {
    explicit NonSmoothComponent(const std::string& what)
        : AddelError("component not smooth (supply point: entries): " + what) {}
};

// -- graded computations
struct CapTooSmall : AddelError {
    explicit CapTooSmall(const std::string& what) : AddelError("degree cap too small: " + what) {}
};
struct InconsistentResolution : AddelError {
    explicit InconsistentResolution(const std::string& what)
        : AddelError("resolution data inconsistent with graded dimensions: " + what) {}
};

// -- singularities
struct NotSingularPoint : AddelError {
    explicit NotSingularPoint(const std::string& what) : AddelError("point is not singular: " + what) {}
};
struct NonIsolated : AddelError {
    explicit NonIsolated(const std::string& what)
        : AddelError("local dimension failed to stabilize: " + what) {}
};
struct SharedComponent : AddelError {
    SharedComponent() : AddelError("curves share an irreducible component") {}
};
struct UnsupportedPointField : AddelError {
    explicit UnsupportedPointField(const std::string& what)
        : AddelError("point lives in an unsupported field (use --modular): " + what) {}
};

// -- predictors
struct SourceNotFree : AddelError {
    explicit SourceNotFree(const std::string& what) : AddelError("source curve is not free: " + what) {}
};

}  // namespace addel
