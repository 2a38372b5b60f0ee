#include "rinf/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace rinf {

PolyInt::PolyInt(const BigInt& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

PolyInt PolyInt::variable() { return monomial(1, 1); }

PolyInt PolyInt::monomial(const BigInt& c, std::size_t k) {
    PolyInt p;
    if (c != 0) {
        p.coeffs_.assign(k + 1, BigInt(0));
        p.coeffs_[k] = c;
    }
    return p;
}

PolyInt PolyInt::from_coeffs(std::vector<BigInt> coeffs) {
    PolyInt p;
    p.coeffs_ = std::move(coeffs);
    p.normalize();
    return p;
}

void PolyInt::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<int> PolyInt::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return static_cast<int>(coeffs_.size()) - 1;
}

BigInt PolyInt::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
}

const BigInt& PolyInt::leading_coeff() const {
    if (coeffs_.empty()) throw std::domain_error("leading_coeff of zero polynomial");
    return coeffs_.back();
}

BigInt PolyInt::evaluate(const BigInt& point) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * point + *it;
    return acc;
}

PolyInt PolyInt::operator-() const {
    PolyInt r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

PolyInt PolyInt::operator+(const PolyInt& rhs) const {
    std::vector<BigInt> out(std::max(coeffs_.size(), rhs.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
    return from_coeffs(std::move(out));
}

PolyInt PolyInt::operator-(const PolyInt& rhs) const { return *this + (-rhs); }

PolyInt PolyInt::operator*(const PolyInt& rhs) const {
    if (is_zero() || rhs.is_zero()) return PolyInt();
    std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return from_coeffs(std::move(out));
}

PolyInt PolyInt::operator*(const BigInt& scalar) const {
    PolyInt r = *this;
    for (auto& c : r.coeffs_) c *= scalar;
    r.normalize();
    return r;
}

PolyInt PolyInt::divide_exact(const PolyInt& rhs) const {
    if (rhs.is_zero()) throw std::domain_error("division by zero polynomial");
    if (is_zero()) return PolyInt();
    if (coeffs_.size() < rhs.coeffs_.size())
        throw std::domain_error("inexact polynomial division");
    std::vector<BigInt> rem = coeffs_;
    std::vector<BigInt> quot(coeffs_.size() - rhs.coeffs_.size() + 1, BigInt(0));
    const BigInt& lead = rhs.coeffs_.back();
    for (std::size_t i = quot.size(); i-- > 0;) {
        BigInt& top = rem[i + rhs.coeffs_.size() - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            throw std::domain_error("inexact polynomial division");
        BigInt q = top / lead;
        quot[i] = q;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            rem[i + j] -= q * rhs.coeffs_[j];
    }
    for (const auto& c : rem)
        if (c != 0) throw std::domain_error("inexact polynomial division");
    return from_coeffs(std::move(quot));
}

PolyInt PolyInt::pow(unsigned exponent) const {
    PolyInt acc(1);
    PolyInt base = *this;
    while (exponent > 0) {
        if (exponent & 1u) acc = acc * base;
        exponent >>= 1u;
        if (exponent > 0) base = base * base;
    }
    return acc;
}

std::string PolyInt::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const BigInt& c = coeffs_[i];
        if (c == 0) continue;
        BigInt a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

} // namespace rinf
