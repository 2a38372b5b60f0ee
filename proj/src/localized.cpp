#include "rinf/localized.hpp"

#include <stdexcept>

#include "rinf/errors.hpp"

namespace rinf {

bool is_word_prime(std::uint64_t p) {
    if (p < 2) return false;
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
    return mpz_probab_prime_p(z.get_mpz_t(), 30) != 0;
}

LocalizedAtP::LocalizedAtP(mpz_class num, mpz_class den, std::uint64_t p)
    : num_(std::move(num)), den_(std::move(den)), p_(p) {
    if (!is_word_prime(p_)) throw std::invalid_argument("localization prime must be prime");
    if (den_ == 0) throw std::invalid_argument("zero denominator");
    reduce();
    if (mpz_divisible_ui_p(den_.get_mpz_t(), static_cast<unsigned long>(p_)))
        throw std::invalid_argument("denominator divisible by p: not an element of Z_(p)");
}

LocalizedAtP LocalizedAtP::from_integer(const mpz_class& value, std::uint64_t p) {
    return LocalizedAtP(value, 1, p);
}

void LocalizedAtP::reduce() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    num_ /= g;
    den_ /= g;
}

void LocalizedAtP::check_same_ring(const LocalizedAtP& rhs) const {
    if (p_ != rhs.p_)
        throw ModulusMismatch("Z_(p) operands localized at different primes: " +
                              std::to_string(p_) + " vs " + std::to_string(rhs.p_));
}

bool LocalizedAtP::is_unit() const {
    return num_ != 0 && !mpz_divisible_ui_p(num_.get_mpz_t(), static_cast<unsigned long>(p_));
}

LocalizedAtP LocalizedAtP::invert() const {
    if (!is_unit())
        throw NotAUnit("numerator divisible by " + std::to_string(p_) + ": not a unit of Z_(p)");
    return LocalizedAtP(den_, num_, p_);
}

LocalizedAtP LocalizedAtP::operator-() const { return LocalizedAtP(-num_, den_, p_); }

LocalizedAtP LocalizedAtP::operator+(const LocalizedAtP& rhs) const {
    check_same_ring(rhs);
    return LocalizedAtP(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_, p_);
}

LocalizedAtP LocalizedAtP::operator-(const LocalizedAtP& rhs) const { return *this + (-rhs); }

LocalizedAtP LocalizedAtP::operator*(const LocalizedAtP& rhs) const {
    check_same_ring(rhs);
    return LocalizedAtP(num_ * rhs.num_, den_ * rhs.den_, p_);
}

std::string LocalizedAtP::str() const {
    if (den_ == 1) return num_.get_str();
    return num_.get_str() + "/" + den_.get_str();
}

} // namespace rinf
