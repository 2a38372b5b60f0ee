#ifndef RINF_MATRIX_HPP
#define RINF_MATRIX_HPP

#include <functional>
#include <string>
#include <vector>

#include "rinf/ring_value.hpp"

namespace rinf {

/// Dense square matrix over one ring kind. Value type with structural
/// equality; every entry shares one tag (and one p where applicable), which
/// is enforced at construction. No public mutation: operations return new
/// matrices.
class SquareMatrix {
public:
    /// n x n matrix with entries supplied by fn(row, col).
    SquareMatrix(int n, const std::function<RingValue(int, int)>& fn);

    static SquareMatrix from_rows(const std::vector<std::vector<RingValue>>& rows);
    static SquareMatrix identity(int n, const RingValue& proto);
    static SquareMatrix zero(int n, const RingValue& proto);

    int dim() const { return n_; }
    RingKind kind() const { return entries_.front().kind(); }
    const RingValue& at(int row, int col) const { return entries_[static_cast<std::size_t>(row) * n_ + col]; }

    SquareMatrix operator*(const SquareMatrix& rhs) const;
    SquareMatrix operator-() const;
    SquareMatrix operator+(const SquareMatrix& rhs) const;
    SquareMatrix transpose() const;
    SquareMatrix pow(unsigned exponent) const;

    /// Block-diagonal sum; (A1+B1 blocks)(A2+B2 blocks) multiply blockwise.
    SquareMatrix direct_sum(const SquareMatrix& rhs) const;

    RingValue trace() const;

    /// Exact inverse via adjugate over a fraction-free determinant. Requires
    /// the determinant to be a unit of the ring; throws NotInvertible
    /// otherwise. The product a * a^-1 = I is re-checked before returning.
    SquareMatrix inverse() const;

    /// a^-1 b^-1 a b.
    SquareMatrix commutator(const SquareMatrix& rhs) const;

    /// Entrywise image under fn; the result must again be kind-uniform.
    SquareMatrix map(const std::function<RingValue(const RingValue&)>& fn) const;

    /// Re-expresses an integer-tag matrix over the ring identified by proto.
    SquareMatrix cast_int_entries(const RingValue& proto) const;

    /// Evaluates a polynomial-tag matrix at an integer point.
    SquareMatrix evaluate_poly_entries(const BigInt& point) const;

    bool is_identity() const;
    bool operator==(const SquareMatrix& rhs) const;
    bool operator!=(const SquareMatrix& rhs) const { return !(*this == rhs); }

    std::string str() const;

private:
    int n_;
    std::vector<RingValue> entries_; // row-major

    SquareMatrix(int n, std::vector<RingValue> entries);
    void check_uniform_kind() const;
    void check_compatible(const SquareMatrix& rhs, bool same_dim) const;
};

/// Fraction-free (Bareiss) determinant; exact over every supported ring.
RingValue determinant(const SquareMatrix& m);

} // namespace rinf

#endif
