#ifndef RINF_FORMS_HPP
#define RINF_FORMS_HPP

#include "rinf/matrix.hpp"

namespace rinf {

/// The three bilinear-form families. SymplecticJ and OrthoD act in dimension
/// 2l, OrthoB in dimension 2l+1. The B/D constructions contain identity
/// blocks of size l-2, hence the higher rank floor.
enum class FormTag { SymplecticJ, OrthoD, OrthoB };

struct FormKind {
    FormTag tag;
    int l;

    int dimension() const { return tag == FormTag::OrthoB ? 2 * l + 1 : 2 * l; }
    int min_rank() const { return tag == FormTag::SymplecticJ ? 1 : 2; }

    /// Throws RankTooSmall when l is below the family's floor.
    void validate() const;

    std::string str() const;
};

/// Gram matrix of the form over the ring identified by proto:
///   SymplecticJ -> [[0, I], [-I, 0]]
///   OrthoD      -> [[0, I], [ I, 0]]
///   OrthoB      -> 1 (+) [[0, I], [I, 0]]
SquareMatrix form_matrix(FormKind kind, const RingValue& proto = RingValue(BigInt(0)));

/// True iff a * [f] * a^T = [f] exactly.
bool is_member(const SquareMatrix& a, FormKind kind);

/// True iff a = I or a = -I (the center of the groups in play).
bool center_element_check(const SquareMatrix& a, FormKind kind);

/// Group-element inverse through the form identity: -J a^T J for the
/// symplectic family, [f] a^T [f] for the orthogonal ones ([f]^2 = I).
/// Requires is_member(a, kind); throws NotInGroup otherwise.
SquareMatrix inverse_via_form(const SquareMatrix& a, FormKind kind);

} // namespace rinf

#endif
