#include "rinf/forms.hpp"

#include "rinf/errors.hpp"

namespace rinf {

void FormKind::validate() const {
    if (l < min_rank())
        throw RankTooSmall(str() + " needs l >= " + std::to_string(min_rank()) + ", got l = " +
                           std::to_string(l));
}

std::string FormKind::str() const {
    switch (tag) {
        case FormTag::SymplecticJ: return "Sp_" + std::to_string(2 * l);
        case FormTag::OrthoD: return "O_" + std::to_string(2 * l) + "(f_D)";
        case FormTag::OrthoB: return "O_" + std::to_string(2 * l + 1) + "(f_B)";
    }
    return "?";
}

SquareMatrix form_matrix(FormKind kind, const RingValue& proto) {
    kind.validate();
    const int l = kind.l;
    auto hyperbolic = [l, &proto](bool skew) {
        return SquareMatrix(2 * l, [l, skew, &proto](int i, int j) {
            long v = 0;
            if (i < l && j == i + l) v = 1;
            if (i >= l && j == i - l) v = skew ? -1 : 1;
            return RingValue::int_like(proto, v);
        });
    };
    switch (kind.tag) {
        case FormTag::SymplecticJ: return hyperbolic(true);
        case FormTag::OrthoD: return hyperbolic(false);
        case FormTag::OrthoB:
            return SquareMatrix::identity(1, proto).direct_sum(hyperbolic(false));
    }
    throw std::logic_error("unreachable form tag");
}

bool is_member(const SquareMatrix& a, FormKind kind) {
    kind.validate();
    if (a.dim() != kind.dimension())
        throw DimensionMismatch("matrix of dimension " + std::to_string(a.dim()) +
                                " tested against " + kind.str());
    const SquareMatrix f = form_matrix(kind, a.at(0, 0));
    return a * f * a.transpose() == f;
}

bool center_element_check(const SquareMatrix& a, FormKind kind) {
    kind.validate();
    if (a.dim() != kind.dimension())
        throw DimensionMismatch("matrix of dimension " + std::to_string(a.dim()) +
                                " tested against " + kind.str());
    return a.is_identity() || (-a).is_identity();
}

SquareMatrix inverse_via_form(const SquareMatrix& a, FormKind kind) {
    if (!is_member(a, kind)) throw NotInGroup("matrix is not in " + kind.str());
    const SquareMatrix f = form_matrix(kind, a.at(0, 0));
    if (kind.tag == FormTag::SymplecticJ) return -(f * a.transpose() * f);
    return f * a.transpose() * f;
}

} // namespace rinf
