#include "rinf/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "rinf/errors.hpp"

namespace rinf {

SquareMatrix::SquareMatrix(int n, std::vector<RingValue> entries)
    : n_(n), entries_(std::move(entries)) {
    if (n_ < 1) throw DimensionMismatch("matrix dimension must be >= 1");
    check_uniform_kind();
}

SquareMatrix::SquareMatrix(int n, const std::function<RingValue(int, int)>& fn) : n_(n) {
    if (n_ < 1) throw DimensionMismatch("matrix dimension must be >= 1");
    entries_.reserve(static_cast<std::size_t>(n_) * n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) entries_.push_back(fn(i, j));
    check_uniform_kind();
}

void SquareMatrix::check_uniform_kind() const {
    const RingKind k = entries_.front().kind();
    for (const auto& e : entries_)
        if (e.kind() != k)
            throw RingMismatch("matrix entries mix ring kinds: " + k.str() + " vs " +
                               e.kind().str());
}

void SquareMatrix::check_compatible(const SquareMatrix& rhs, bool same_dim) const {
    if (same_dim && n_ != rhs.n_)
        throw DimensionMismatch("matrix dimensions differ: " + std::to_string(n_) + " vs " +
                                std::to_string(rhs.n_));
    if (kind() != rhs.kind())
        throw RingMismatch("matrix ring kinds differ: " + kind().str() + " vs " +
                           rhs.kind().str());
}

SquareMatrix SquareMatrix::from_rows(const std::vector<std::vector<RingValue>>& rows) {
    const int n = static_cast<int>(rows.size());
    std::vector<RingValue> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n)
            throw DimensionMismatch("matrix rows must form a square");
        for (const auto& e : row) entries.push_back(e);
    }
    return SquareMatrix(n, std::move(entries));
}

SquareMatrix SquareMatrix::identity(int n, const RingValue& proto) {
    return SquareMatrix(n, [&proto](int i, int j) {
        return RingValue::int_like(proto, i == j ? 1 : 0);
    });
}

SquareMatrix SquareMatrix::zero(int n, const RingValue& proto) {
    return SquareMatrix(n, [&proto](int, int) { return RingValue::zero_like(proto); });
}

SquareMatrix SquareMatrix::operator*(const SquareMatrix& rhs) const {
    check_compatible(rhs, true);
    std::vector<RingValue> out;
    out.reserve(entries_.size());
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            RingValue acc = at(i, 0) * rhs.at(0, j);
            for (int k = 1; k < n_; ++k) acc = acc + at(i, k) * rhs.at(k, j);
            out.push_back(std::move(acc));
        }
    }
    return SquareMatrix(n_, std::move(out));
}

SquareMatrix SquareMatrix::operator-() const {
    std::vector<RingValue> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(-e);
    return SquareMatrix(n_, std::move(out));
}

SquareMatrix SquareMatrix::operator+(const SquareMatrix& rhs) const {
    check_compatible(rhs, true);
    std::vector<RingValue> out;
    out.reserve(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) out.push_back(entries_[i] + rhs.entries_[i]);
    return SquareMatrix(n_, std::move(out));
}

SquareMatrix SquareMatrix::transpose() const {
    SquareMatrix r = *this;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < i; ++j)
            std::swap(r.entries_[static_cast<std::size_t>(i) * n_ + j],
                      r.entries_[static_cast<std::size_t>(j) * n_ + i]);
    return r;
}

SquareMatrix SquareMatrix::pow(unsigned exponent) const {
    SquareMatrix acc = identity(n_, entries_.front());
    SquareMatrix base = *this;
    while (exponent > 0) {
        if (exponent & 1u) acc = acc * base;
        exponent >>= 1u;
        if (exponent > 0) base = base * base;
    }
    return acc;
}

SquareMatrix SquareMatrix::direct_sum(const SquareMatrix& rhs) const {
    check_compatible(rhs, false);
    const RingValue zero = RingValue::zero_like(entries_.front());
    const int n = n_ + rhs.n_;
    return SquareMatrix(n, [this, &rhs, &zero](int i, int j) {
        if (i < n_ && j < n_) return at(i, j);
        if (i >= n_ && j >= n_) return rhs.at(i - n_, j - n_);
        return zero;
    });
}

RingValue SquareMatrix::trace() const {
    RingValue acc = at(0, 0);
    for (int i = 1; i < n_; ++i) acc = acc + at(i, i);
    return acc;
}

namespace {

// Fraction-free elimination: all divisions are exact in the coefficient
// ring; row swaps flip the sign.
RingValue bareiss_determinant(const SquareMatrix& m) {
    const int n = m.dim();
    std::vector<std::vector<RingValue>> a;
    a.reserve(n);
    for (int i = 0; i < n; ++i) {
        std::vector<RingValue> row;
        row.reserve(n);
        for (int j = 0; j < n; ++j) row.push_back(m.at(i, j));
        a.push_back(std::move(row));
    }
    const RingValue zero = RingValue::zero_like(m.at(0, 0));
    RingValue prev = RingValue::one_like(m.at(0, 0));
    bool negate = false;
    for (int k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r)
                if (!a[r][k].is_zero()) { pivot = r; break; }
            if (pivot < 0) return zero;
            std::swap(a[k], a[pivot]);
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).divide_exact(prev);
            a[i][k] = zero;
        }
        prev = a[k][k];
    }
    return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

} // namespace

RingValue determinant(const SquareMatrix& m) { return bareiss_determinant(m); }

SquareMatrix SquareMatrix::inverse() const {
    const RingValue det = determinant(*this);
    if (!det.is_unit())
        throw NotInvertible("determinant " + det.str() + " is not a unit of " + kind().str());
    const RingValue det_inv = det.invert_unit();

    SquareMatrix result = *this; // shape placeholder, overwritten below
    if (n_ == 1) {
        result.entries_[0] = det_inv;
    } else {
        std::vector<RingValue> adj;
        adj.reserve(entries_.size());
        for (int i = 0; i < n_; ++i) {
            for (int j = 0; j < n_; ++j) {
                // adj[i][j] = (-1)^(i+j) * minor(j, i)
                SquareMatrix sub(n_ - 1, [this, i, j](int r, int c) {
                    const int rr = r < j ? r : r + 1;
                    const int cc = c < i ? c : c + 1;
                    return at(rr, cc);
                });
                RingValue cof = determinant(sub) * det_inv;
                adj.push_back((i + j) % 2 == 0 ? std::move(cof) : -cof);
            }
        }
        result.entries_ = std::move(adj);
    }

    if (!(*this * result).is_identity())
        throw std::logic_error("inverse verification failed");
    return result;
}

SquareMatrix SquareMatrix::commutator(const SquareMatrix& rhs) const {
    return inverse() * rhs.inverse() * *this * rhs;
}

SquareMatrix SquareMatrix::map(const std::function<RingValue(const RingValue&)>& fn) const {
    std::vector<RingValue> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(fn(e));
    return SquareMatrix(n_, std::move(out));
}

SquareMatrix SquareMatrix::cast_int_entries(const RingValue& proto) const {
    return map([&proto](const RingValue& e) { return RingValue::int_like(proto, e.as_integer()); });
}

SquareMatrix SquareMatrix::evaluate_poly_entries(const BigInt& point) const {
    return map([&point](const RingValue& e) { return RingValue(e.as_poly().evaluate(point)); });
}

bool SquareMatrix::is_identity() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            if (i == j && !at(i, j).is_one()) return false;
            if (i != j && !at(i, j).is_zero()) return false;
        }
    return true;
}

bool SquareMatrix::operator==(const SquareMatrix& rhs) const {
    return n_ == rhs.n_ && entries_ == rhs.entries_;
}

std::string SquareMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < n_; ++i) {
        if (i > 0) os << "; ";
        for (int j = 0; j < n_; ++j) {
            if (j > 0) os << ", ";
            os << at(i, j).str();
        }
    }
    os << "]";
    return os.str();
}

} // namespace rinf
