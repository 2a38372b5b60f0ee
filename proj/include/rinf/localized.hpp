#ifndef RINF_LOCALIZED_HPP
#define RINF_LOCALIZED_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace rinf {

/// Element of the integers localized at a prime p: a fraction num/den with
/// p not dividing den. Kept fully reduced with positive denominator, so
/// equality is structural. Units are exactly the elements with p ∤ num.
class LocalizedAtP {
public:
    /// Constructs num/den in Z_(p). Throws std::invalid_argument if p is not
    /// prime, den is zero, or p divides den (the fraction is outside the ring).
    LocalizedAtP(mpz_class num, mpz_class den, std::uint64_t p);
    static LocalizedAtP from_integer(const mpz_class& value, std::uint64_t p);

    const mpz_class& num() const { return num_; }
    const mpz_class& den() const { return den_; }
    std::uint64_t p() const { return p_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    /// p ∤ num, i.e. invertible in Z_(p).
    bool is_unit() const;

    /// Throws NotAUnit when p divides the numerator.
    LocalizedAtP invert() const;

    LocalizedAtP operator-() const;
    LocalizedAtP operator+(const LocalizedAtP& rhs) const;
    LocalizedAtP operator-(const LocalizedAtP& rhs) const;
    LocalizedAtP operator*(const LocalizedAtP& rhs) const;

    bool operator==(const LocalizedAtP& rhs) const {
        return p_ == rhs.p_ && num_ == rhs.num_ && den_ == rhs.den_;
    }
    bool operator!=(const LocalizedAtP& rhs) const { return !(*this == rhs); }

    std::string str() const;

private:
    mpz_class num_;
    mpz_class den_;
    std::uint64_t p_;

    void reduce();
    void check_same_ring(const LocalizedAtP& rhs) const;
};

/// Deterministic primality check for word-sized moduli.
bool is_word_prime(std::uint64_t p);

} // namespace rinf

#endif
