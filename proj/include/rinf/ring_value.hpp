#ifndef RINF_RING_VALUE_HPP
#define RINF_RING_VALUE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "rinf/localized.hpp"
#include "rinf/poly.hpp"
#include "rinf/prime_field.hpp"

namespace rinf {

enum class RingTag { Integer, Polynomial, Localized, PrimeField };

std::string ring_tag_name(RingTag tag);

/// Identifies a coefficient ring: the tag plus, where applicable, the prime.
struct RingKind {
    RingTag tag = RingTag::Integer;
    std::uint64_t p = 0; // meaningful for Localized and PrimeField only

    bool operator==(const RingKind&) const = default;
    std::string str() const;
};

/// Tagged exact scalar: big integer | integer polynomial | localized
/// rational at p | prime-field element. Arithmetic between mismatched tags
/// throws RingMismatch; between matching tags with different p throws
/// ModulusMismatch. Values are immutable; all operations return new values.
class RingValue {
public:
    RingValue() : v_(BigInt(0)) {}
    RingValue(BigInt v) : v_(std::move(v)) {}
    RingValue(long v) : v_(BigInt(v)) {}
    RingValue(PolyInt v) : v_(std::move(v)) {}
    RingValue(LocalizedAtP v) : v_(std::move(v)) {}
    RingValue(PrimeFieldElem v) : v_(std::move(v)) {}

    static RingValue integer(const BigInt& v) { return RingValue(v); }
    static RingValue poly(const PolyInt& v) { return RingValue(v); }
    static RingValue variable_T() { return RingValue(PolyInt::variable()); }
    static RingValue localized(const mpz_class& num, const mpz_class& den, std::uint64_t p) {
        return RingValue(LocalizedAtP(num, den, p));
    }
    static RingValue prime_field(std::int64_t v, std::uint64_t p) {
        return RingValue(PrimeFieldElem(v, p));
    }

    RingTag tag() const { return static_cast<RingTag>(v_.index()); }
    RingKind kind() const;

    /// Embeds an integer into the ring identified by proto (the canonical
    /// image of Z in each supported ring).
    static RingValue int_like(const RingValue& proto, const BigInt& v);
    static RingValue zero_like(const RingValue& proto) { return int_like(proto, 0); }
    static RingValue one_like(const RingValue& proto) { return int_like(proto, 1); }

    const BigInt& as_integer() const;
    const PolyInt& as_poly() const;
    const LocalizedAtP& as_localized() const;
    const PrimeFieldElem& as_prime_field() const;

    bool is_zero() const;
    bool is_one() const;

    /// Strict ring unit: +-1 in Z, constant +-1 in Z[T], p ∤ num in Z_(p),
    /// nonzero in F_p.
    bool is_unit() const;

    /// Inverse of a unit; throws NotAUnit otherwise.
    RingValue invert_unit() const;

    RingValue operator-() const;
    RingValue operator+(const RingValue& rhs) const;
    RingValue operator-(const RingValue& rhs) const;
    RingValue operator*(const RingValue& rhs) const;

    /// Exact division within the ring (used by fraction-free elimination);
    /// throws std::domain_error when the quotient is not in the ring.
    RingValue divide_exact(const RingValue& rhs) const;

    bool operator==(const RingValue& rhs) const { return v_ == rhs.v_; }
    bool operator!=(const RingValue& rhs) const { return v_ != rhs.v_; }

    std::string str() const;

private:
    std::variant<BigInt, PolyInt, LocalizedAtP, PrimeFieldElem> v_;

    void check_same_kind(const RingValue& rhs) const;
};

} // namespace rinf

#endif
