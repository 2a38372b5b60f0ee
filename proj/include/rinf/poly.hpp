#ifndef RINF_POLY_HPP
#define RINF_POLY_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace rinf {

using BigInt = mpz_class;

/// Dense univariate polynomial over arbitrary-precision integers.
///
/// coeffs()[i] is the coefficient of T^i. Canonical form: the highest-index
/// coefficient is nonzero; the zero polynomial is the empty sequence. The
/// degree of the zero polynomial is reported as std::nullopt (minus
/// infinity), never -1, so deg(a*b) = deg(a) + deg(b) holds for all nonzero
/// operands without special cases.
class PolyInt {
public:
    PolyInt() = default;
    PolyInt(const BigInt& constant);
    PolyInt(long constant) : PolyInt(BigInt(constant)) {}

    /// The monomial T.
    static PolyInt variable();
    /// Builds c * T^k.
    static PolyInt monomial(const BigInt& c, std::size_t k);
    /// Normalizes (strips trailing zeros).
    static PolyInt from_coeffs(std::vector<BigInt> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    /// Degree, or nullopt for the zero polynomial.
    std::optional<int> degree() const;

    /// Coefficient of T^i (zero beyond the degree).
    BigInt coeff(std::size_t i) const;
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    const BigInt& leading_coeff() const;

    /// Horner evaluation at an integer point; exact.
    BigInt evaluate(const BigInt& point) const;

    PolyInt operator-() const;
    PolyInt operator+(const PolyInt& rhs) const;
    PolyInt operator-(const PolyInt& rhs) const;
    PolyInt operator*(const PolyInt& rhs) const;
    PolyInt operator*(const BigInt& scalar) const;

    /// Quotient of an exact division; throws std::domain_error if rhs does
    /// not divide *this in Z[T].
    PolyInt divide_exact(const PolyInt& rhs) const;

    PolyInt pow(unsigned exponent) const;

    bool operator==(const PolyInt& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const PolyInt& rhs) const { return coeffs_ != rhs.coeffs_; }

    /// Human-readable form, e.g. "T^2 - 1".
    std::string str(const std::string& var = "T") const;

private:
    std::vector<BigInt> coeffs_;

    void normalize();
};

} // namespace rinf

#endif
