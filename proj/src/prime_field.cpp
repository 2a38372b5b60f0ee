#include "rinf/prime_field.hpp"

#include <stdexcept>

#include "rinf/errors.hpp"
#include "rinf/localized.hpp"

namespace rinf {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

} // namespace

PrimeFieldElem::PrimeFieldElem(std::int64_t value, std::uint64_t p) : p_(p) {
    if (!is_word_prime(p)) throw std::invalid_argument("field modulus must be prime");
    std::int64_t r = value % static_cast<std::int64_t>(p);
    if (r < 0) r += static_cast<std::int64_t>(p);
    value_ = static_cast<std::uint64_t>(r);
}

PrimeFieldElem::PrimeFieldElem(const mpz_class& value, std::uint64_t p) : p_(p) {
    if (!is_word_prime(p)) throw std::invalid_argument("field modulus must be prime");
    mpz_class r;
    mpz_class m(static_cast<unsigned long>(p));
    mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), m.get_mpz_t());
    value_ = mpz_get_ui(r.get_mpz_t());
}

void PrimeFieldElem::check_same_field(const PrimeFieldElem& rhs) const {
    if (p_ != rhs.p_)
        throw ModulusMismatch("F_p operands over different primes: " + std::to_string(p_) +
                              " vs " + std::to_string(rhs.p_));
}

PrimeFieldElem PrimeFieldElem::invert() const {
    if (value_ == 0) throw NotAUnit("zero is not invertible in F_p");
    // Fermat: a^(p-2) = a^(-1).
    return pow(p_ - 2);
}

PrimeFieldElem PrimeFieldElem::pow(std::uint64_t exponent) const {
    PrimeFieldElem acc(1, p_);
    std::uint64_t base = value_;
    while (exponent > 0) {
        if (exponent & 1u) acc.value_ = mul_mod(acc.value_, base, p_);
        exponent >>= 1u;
        base = mul_mod(base, base, p_);
    }
    return acc;
}

PrimeFieldElem PrimeFieldElem::operator-() const {
    PrimeFieldElem r = *this;
    r.value_ = value_ == 0 ? 0 : p_ - value_;
    return r;
}

PrimeFieldElem PrimeFieldElem::operator+(const PrimeFieldElem& rhs) const {
    check_same_field(rhs);
    PrimeFieldElem r = *this;
    r.value_ += rhs.value_;
    if (r.value_ >= p_) r.value_ -= p_;
    return r;
}

PrimeFieldElem PrimeFieldElem::operator-(const PrimeFieldElem& rhs) const {
    return *this + (-rhs);
}

PrimeFieldElem PrimeFieldElem::operator*(const PrimeFieldElem& rhs) const {
    check_same_field(rhs);
    PrimeFieldElem r = *this;
    r.value_ = mul_mod(value_, rhs.value_, p_);
    return r;
}

} // namespace rinf
