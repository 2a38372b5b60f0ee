#ifndef RINF_ERRORS_HPP
#define RINF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rinf {

/// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands carry different ring tags.
struct RingMismatch : Error {
    explicit RingMismatch(const std::string& what) : Error(what) {}
};

/// Operands share a tag but disagree on the prime p.
struct ModulusMismatch : RingMismatch {
    explicit ModulusMismatch(const std::string& what) : RingMismatch(what) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

/// Inversion of a non-unit scalar, or a non-unit orbit entry.
struct NotAUnit : Error {
    explicit NotAUnit(const std::string& what) : Error(what) {}
};

/// Matrix determinant is not a unit of the coefficient ring.
struct NotInvertible : Error {
    explicit NotInvertible(const std::string& what) : Error(what) {}
};

struct RankTooSmall : Error {
    explicit RankTooSmall(const std::string& what) : Error(what) {}
};

/// A product/power failed the expected block pattern or degree bound.
/// Carries the offending entry coordinates.
struct ShapeViolation : Error {
    int row;
    int col;
    ShapeViolation(const std::string& what, int r, int c)
        : Error(what + " at entry (" + std::to_string(r) + "," + std::to_string(c) + ")"),
          row(r), col(c) {}
};

/// Point selection needs a polynomial of degree >= 1.
struct NonConstantRequired : Error {
    explicit NonConstantRequired(const std::string& what) : Error(what) {}
};

/// A matrix expected to satisfy the group's form identity does not.
struct NotInGroup : Error {
    explicit NotInGroup(const std::string& what) : Error(what) {}
};

/// Group closure exceeded the element cap.
struct CapExceeded : Error {
    explicit CapExceeded(const std::string& what) : Error(what) {}
};

/// Subgroup is not invariant under the supplied automorphism.
struct NotCharacteristic : Error {
    explicit NotCharacteristic(const std::string& what) : Error(what) {}
};

} // namespace rinf

#endif
