#pragma once

#include <stdexcept>
#include <string>

namespace gordual {

/* Base class for all errors raised by the library. */
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DuplicateNameError : Error {
    explicit DuplicateNameError(const std::string& name)
        : Error("duplicate generator name: " + name) {}
};

struct NonPositiveDegreeError : Error {
    NonPositiveDegreeError(const std::string& name, long degree)
        : Error("generator " + name + " has non-positive degree " + std::to_string(degree)) {}
};

struct NonHomogeneousError : Error {
    explicit NonHomogeneousError(const std::string& what)
        : Error("non-homogeneous input: " + what) {}
};

struct UnsupportedCoefficientsError : Error {
    explicit UnsupportedCoefficientsError(const std::string& what)
        : Error("unsupported coefficients: " + what) {}
};

struct AmbientMismatchError : Error {
    explicit AmbientMismatchError(const std::string& what)
        : Error("ambient module mismatch: " + what) {}
};

struct InfiniteInWindowError : Error {
    explicit InfiniteInWindowError(long degree)
        : Error("module content at degree " + std::to_string(degree) +
                " is not known finite in the requested window") {}
};

struct NotPrimaryIdealError : Error {
    explicit NotPrimaryIdealError(const std::string& what)
        : Error("ideal is not primary to the maximal ideal: " + what) {}
};

struct NoStabilizationError : Error {
    long t_max;
    explicit NoStabilizationError(long cap)
        : Error("local cohomology did not stabilize within power cap t_max = " +
                std::to_string(cap)), t_max(cap) {}
};

struct NotTorsionError : Error {
    explicit NotTorsionError(const std::string& what)
        : Error("module is not torsion: " + what) {}
};

struct NotTorsionOnWindowError : Error {
    explicit NotTorsionOnWindowError(long degree)
        : Error("module has a free summand at degree " + std::to_string(degree)) {}
};

struct NotJTorsionError : Error {
    explicit NotJTorsionError(const std::string& what)
        : Error("module is not torsion over the augmentation ideal: " + what) {}
};

struct SyntaxError : Error {
    long line, column;
    SyntaxError(long l, long c, const std::string& what)
        : Error("syntax error at " + std::to_string(l) + ":" + std::to_string(c) + ": " + what),
          line(l), column(c) {}
};

struct InhomogeneousRelationError : Error {
    explicit InhomogeneousRelationError(const std::string& what)
        : Error("inhomogeneous relation: " + what) {}
};

struct DanglingEdgeError : Error {
    explicit DanglingEdgeError(const std::string& what)
        : Error("edge references a missing dot: " + what) {}
};

struct BadSlopeError : Error {
    explicit BadSlopeError(const std::string& what)
        : Error("edge violates its slope rule: " + what) {}
};

struct AmbiguousTowerError : Error {
    explicit AmbiguousTowerError(long degree)
        : Error("branching tower at degree " + std::to_string(degree) +
                "; not expressible as cyclic summands") {}
};

/* Internal invariant violations; seeing one of these is a bug. */
struct InternalError : Error {
    explicit InternalError(const std::string& what) : Error("internal error: " + what) {}
};

}  // namespace gordual
