#ifndef RINF_PRIME_FIELD_HPP
#define RINF_PRIME_FIELD_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace rinf {

/// Element of F_p for a word-sized prime p, stored as the canonical
/// representative in [0, p).
class PrimeFieldElem {
public:
    PrimeFieldElem(std::int64_t value, std::uint64_t p);
    PrimeFieldElem(const mpz_class& value, std::uint64_t p);

    std::uint64_t value() const { return value_; }
    std::uint64_t p() const { return p_; }

    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_unit() const { return value_ != 0; }

    /// Multiplicative inverse; throws NotAUnit on zero.
    PrimeFieldElem invert() const;

    PrimeFieldElem operator-() const;
    PrimeFieldElem operator+(const PrimeFieldElem& rhs) const;
    PrimeFieldElem operator-(const PrimeFieldElem& rhs) const;
    PrimeFieldElem operator*(const PrimeFieldElem& rhs) const;

    PrimeFieldElem pow(std::uint64_t exponent) const;

    bool operator==(const PrimeFieldElem& rhs) const {
        return p_ == rhs.p_ && value_ == rhs.value_;
    }
    bool operator!=(const PrimeFieldElem& rhs) const { return !(*this == rhs); }

    std::string str() const { return std::to_string(value_); }

private:
    std::uint64_t value_;
    std::uint64_t p_;

    void check_same_field(const PrimeFieldElem& rhs) const;
};

} // namespace rinf

#endif
