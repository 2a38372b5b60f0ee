#include "rinf/ring_value.hpp"

#include <stdexcept>

#include "rinf/errors.hpp"

namespace rinf {

std::string ring_tag_name(RingTag tag) {
    switch (tag) {
        case RingTag::Integer: return "Z";
        case RingTag::Polynomial: return "Z[T]";
        case RingTag::Localized: return "Z_(p)";
        case RingTag::PrimeField: return "F_p";
    }
    return "?";
}

std::string RingKind::str() const {
    switch (tag) {
        case RingTag::Integer: return "Z";
        case RingTag::Polynomial: return "Z[T]";
        case RingTag::Localized: return "Z_(" + std::to_string(p) + ")";
        case RingTag::PrimeField: return "F_" + std::to_string(p);
    }
    return "?";
}

RingKind RingValue::kind() const {
    RingKind k{tag(), 0};
    if (auto* l = std::get_if<LocalizedAtP>(&v_)) k.p = l->p();
    if (auto* f = std::get_if<PrimeFieldElem>(&v_)) k.p = f->p();
    return k;
}

RingValue RingValue::int_like(const RingValue& proto, const BigInt& v) {
    switch (proto.tag()) {
        case RingTag::Integer: return RingValue(v);
        case RingTag::Polynomial: return RingValue(PolyInt(v));
        case RingTag::Localized:
            return RingValue(LocalizedAtP::from_integer(v, proto.as_localized().p()));
        case RingTag::PrimeField:
            return RingValue(PrimeFieldElem(v, proto.as_prime_field().p()));
    }
    throw std::logic_error("unreachable ring tag");
}

const BigInt& RingValue::as_integer() const {
    if (auto* p = std::get_if<BigInt>(&v_)) return *p;
    throw RingMismatch("expected integer value, got " + ring_tag_name(tag()));
}

const PolyInt& RingValue::as_poly() const {
    if (auto* p = std::get_if<PolyInt>(&v_)) return *p;
    throw RingMismatch("expected polynomial value, got " + ring_tag_name(tag()));
}

const LocalizedAtP& RingValue::as_localized() const {
    if (auto* p = std::get_if<LocalizedAtP>(&v_)) return *p;
    throw RingMismatch("expected localized value, got " + ring_tag_name(tag()));
}

const PrimeFieldElem& RingValue::as_prime_field() const {
    if (auto* p = std::get_if<PrimeFieldElem>(&v_)) return *p;
    throw RingMismatch("expected prime-field value, got " + ring_tag_name(tag()));
}

void RingValue::check_same_kind(const RingValue& rhs) const {
    if (tag() != rhs.tag())
        throw RingMismatch("ring tag mismatch: " + ring_tag_name(tag()) + " vs " +
                           ring_tag_name(rhs.tag()));
    // Same tag with different p is reported by the scalar types themselves
    // (ModulusMismatch), so only the tag is checked here.
}

bool RingValue::is_zero() const {
    return std::visit(
        [](const auto& v) -> bool {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, BigInt>) return v == 0;
            else return v.is_zero();
        },
        v_);
}

bool RingValue::is_one() const {
    return std::visit(
        [](const auto& v) -> bool {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, BigInt>) return v == 1;
            else if constexpr (std::is_same_v<T, PolyInt>) return v == PolyInt(1);
            else return v.is_one();
        },
        v_);
}

bool RingValue::is_unit() const {
    switch (tag()) {
        case RingTag::Integer: {
            const BigInt& z = as_integer();
            return z == 1 || z == -1;
        }
        case RingTag::Polynomial: {
            const PolyInt& p = as_poly();
            return p == PolyInt(1) || p == PolyInt(-1);
        }
        case RingTag::Localized: return as_localized().is_unit();
        case RingTag::PrimeField: return as_prime_field().is_unit();
    }
    return false;
}

RingValue RingValue::invert_unit() const {
    switch (tag()) {
        case RingTag::Integer:
        case RingTag::Polynomial:
            if (!is_unit()) throw NotAUnit(str() + " is not a unit of " + kind().str());
            return *this; // +-1 are self-inverse
        case RingTag::Localized: return RingValue(as_localized().invert());
        case RingTag::PrimeField: return RingValue(as_prime_field().invert());
    }
    throw std::logic_error("unreachable ring tag");
}

RingValue RingValue::operator-() const {
    return std::visit([](const auto& v) { return RingValue(-v); }, v_);
}

RingValue RingValue::operator+(const RingValue& rhs) const {
    check_same_kind(rhs);
    return std::visit(
        [&rhs](const auto& a) {
            using T = std::decay_t<decltype(a)>;
            return RingValue(a + std::get<T>(rhs.v_));
        },
        v_);
}

RingValue RingValue::operator-(const RingValue& rhs) const { return *this + (-rhs); }

RingValue RingValue::operator*(const RingValue& rhs) const {
    check_same_kind(rhs);
    return std::visit(
        [&rhs](const auto& a) {
            using T = std::decay_t<decltype(a)>;
            return RingValue(a * std::get<T>(rhs.v_));
        },
        v_);
}

RingValue RingValue::divide_exact(const RingValue& rhs) const {
    check_same_kind(rhs);
    switch (tag()) {
        case RingTag::Integer: {
            const BigInt& a = as_integer();
            const BigInt& b = rhs.as_integer();
            if (b == 0) throw std::domain_error("division by zero");
            if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
                throw std::domain_error("inexact integer division");
            return RingValue(BigInt(a / b));
        }
        case RingTag::Polynomial: return RingValue(as_poly().divide_exact(rhs.as_poly()));
        case RingTag::Localized: {
            // Z_(p) division lands in the ring iff the reduced denominator is
            // coprime to p; the LocalizedAtP constructor enforces that.
            const LocalizedAtP& a = as_localized();
            const LocalizedAtP& b = rhs.as_localized();
            if (b.is_zero()) throw std::domain_error("division by zero");
            if (a.p() != b.p())
                throw ModulusMismatch("Z_(p) operands localized at different primes");
            try {
                return RingValue(LocalizedAtP(a.num() * b.den(), a.den() * b.num(), a.p()));
            } catch (const std::invalid_argument&) {
                throw std::domain_error("quotient not in Z_(p)");
            }
        }
        case RingTag::PrimeField:
            return RingValue(as_prime_field() * rhs.as_prime_field().invert());
    }
    throw std::logic_error("unreachable ring tag");
}

std::string RingValue::str() const {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, BigInt>) return v.get_str();
            else return v.str();
        },
        v_);
}

} // namespace rinf
