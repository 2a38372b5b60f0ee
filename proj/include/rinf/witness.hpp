#ifndef RINF_WITNESS_HPP
#define RINF_WITNESS_HPP

#include <optional>
#include <string>
#include <vector>

#include "rinf/forms.hpp"
#include "rinf/matrix.hpp"

namespace rinf {

/// The three constructions, one per classical family. Case C lives in the
/// symplectic group, cases D and B in the orthogonal groups for f_D and f_B.
enum class CaseTag { C, D, B };

std::string case_tag_name(CaseTag tag);
FormKind form_for_case(CaseTag tag, int l);

/// Standard-form automorphism data.
///
/// Case C: A -> H1 H2 d(A) H2^-1 H1^-1, where d applies a periodic ring
/// automorphism entrywise and H2 = Y(beta). The automorphism is represented
/// by the orbit [beta, d(beta), ..., d^{k-1}(beta)] of unit scalars, not by
/// a ring-automorphism implementation: the constructions only consume the
/// orbit values, and d fixes every integer.
///
/// Cases D and B: A -> H Gamma(d(A)) H^-1 with Gamma central; only the
/// period k and the fact that the aggregated central factor lies in {+-I}
/// enter, so invariants separate by their squares.
///
/// The inner part H1 never affects class counts and is dropped before
/// certification; it is kept here so reports can echo the reduction.
struct AutomorphismSpec {
    CaseTag case_tag = CaseTag::C;
    int l = 1;
    int period = 1;                    // k; equals orbit.size() in case C
    std::vector<RingValue> orbit;      // case C only
    std::optional<SquareMatrix> inner; // H1
    bool central_sign_budget = false;  // D/B: aggregated central factor in {+-I}

    static AutomorphismSpec case_C(int l, std::vector<RingValue> orbit);
    static AutomorphismSpec case_D(int l, int k);
    static AutomorphismSpec case_B(int l, int k);

    /// Checks rank floors, orbit units, period consistency and (when
    /// present) membership of the inner conjugator.
    void validate() const;
};

/// Case C generators, 2l x 2l:
///   X(t) = [[t (+) I_{l-1}, I_l], [-I_l, 0]]   Y(y) = I_l (+) y I_l
///   Z = X(t) Y(y) = [[t (+) I_{l-1}, y I_l], [-I_l, 0]]
/// X(a) preserves the symplectic form for every scalar a; y must be a unit.
struct FamilyC {
    SquareMatrix x, y, z;
};
FamilyC family_C(int l, const RingValue& t, const RingValue& y);

/// Case D generators, 2l x 2l:
///   X(t) = [[1,t],[0,1]] (+) I_{l-2} (+) [[1,0],[-t,1]] (+) I_{l-2}
///   Y(t) = [[t,1],[-1,0]] (+) I_{l-2} (+) [[0,1],[-1,t]] (+) I_{l-2}
///   Z(t) = [X,Y] = [[t^2+1,-t],[-t,1]] (+) I_{l-2} (+) [[1,t],[t,t^2+1]] (+) I_{l-2}
/// z is computed as the commutator and checked against the closed form.
struct FamilyD {
    SquareMatrix x, y, z;
};
FamilyD family_D(int l, const RingValue& t);

/// Case B witness: 1 (+) Z_D(t), dimension 2l+1.
SquareMatrix family_B(int l, const RingValue& t);

/// Extracted block data from a symbolic product/power check.
struct ShapeReport {
    int l = 0;
    int k = 0;
    PolyInt f, g, h, p;                            // corner polynomials
    std::optional<int> deg_f, deg_g, deg_h, deg_p; // nullopt = zero polynomial
    bool ok = false;
};

/// Computes Z_{y_1}(T) ... Z_{y_k}(T) over Z[T] and verifies the block
/// pattern [[f (+) aI, g (+) bI], [h (+) cI, p (+) dI]] with scalar a,b,c,d,
/// deg f = k and deg g,h,p < k. Throws ShapeViolation on any breach (which
/// would falsify the underlying degree statement). For l = 1 the scalar
/// blocks are empty and only the degree bounds are checked.
ShapeReport aux_shape_check_C(int l, int k, const std::vector<BigInt>& ys);

/// Computes Z(T)^k over Z[T] and verifies the pattern
/// [[f,g],[h,p]] (+) I_{l-2} (+) [[p,-h],[-g,f]] (+) I_{l-2} with
/// deg f = 2k and deg g,h,p < 2k. Throws ShapeViolation on any breach.
ShapeReport aux_shape_check_D(int l, int k);

/// Symbolic separating invariant for case C:
///   psi(T) = tr(Z_{y_0}(T) Z_{y_1}(T) ... Z_{y_{k-1}}(T)),
/// a polynomial of degree exactly k. Available when the orbit values are
/// integers; nullopt otherwise (use invariant_C_at pointwise instead).
std::optional<PolyInt> psi_C(const AutomorphismSpec& spec);

/// Value of the case C invariant at an integer point, over the orbit's ring.
RingValue invariant_C_at(const AutomorphismSpec& spec, const BigInt& point);

/// Separating invariant for cases D and B: tr(Z(T)^k), resp.
/// tr((1 (+) Z(T))^k) = 1 + tr(Z(T)^k). Even, nonconstant, degree 2k.
PolyInt psi_BD(CaseTag case_tag, int l, int k);

/// Ascending integers a_1 < ... < a_count, scanned from 0 upward, whose
/// psi-values (squared values when need_distinct_squares) are pairwise
/// distinct. Throws NonConstantRequired when deg psi < 1.
std::vector<BigInt> select_points(const PolyInt& psi, int count, bool need_distinct_squares);

struct VerificationVerdict {
    bool ok = false;
    std::string detail; // empty when ok; names the first failing check
};

/// Finite, independently checkable witness list: the matrices and invariant
/// values whose pairwise-distinct (squared) invariants certify pairwise
/// non-twisted-conjugacy under every automorphism matching the spec. For
/// cases D and B the witnesses are commutators by construction, which is
/// what places them in the derived subgroup; verification re-derives that
/// provenance by rebuilding each witness from its point.
struct SeparationCertificate {
    AutomorphismSpec spec;
    std::vector<BigInt> points;
    std::vector<SquareMatrix> witnesses;
    std::vector<RingValue> invariants;
    std::optional<PolyInt> psi;
    std::optional<VerificationVerdict> verdict; // set by callers of verify_certificate
};

/// Case C: witnesses X(a_i) with invariants psi(a_i); cases D/B: witnesses
/// Z(a_i) resp. 1 (+) Z(a_i) with invariants of pairwise-distinct squares.
/// Deterministic for a given spec and count.
SeparationCertificate build_certificate(const AutomorphismSpec& spec, int count);

/// Recomputes every check from the certificate content alone: point
/// distinctness, form membership, witness reconstruction, invariant values
/// from the witnesses, pairwise (squared) distinctness, and consistency of
/// the recorded psi. Failures are reported in the verdict, never thrown.
VerificationVerdict verify_certificate(const SeparationCertificate& cert);

/// Result of replaying the k-fold twisted-product identity.
struct CollapseResult {
    SquareMatrix conjugate;  // A_i = D A_j phi(D^-1)
    SquareMatrix product_i;  // product of the per-level conjugated factors
    SquareMatrix product_j;  // Z_{y_0}(a_j) ... Z_{y_{k-1}}(a_j)
    SquareMatrix conjugator; // D, embedded into the working ring
    RingValue trace_i, trace_j;
    bool trace_equal = false;
};

/// Constructs A_i twisted-conjugate to A_j = X(a_j) by the given symplectic
/// conjugator and replays the system of level equalities: level m conjugates
/// Z_{y_m}(a_j) by the m-th twist of D (all twists coincide for an integer
/// conjugator, which d fixes). Multiplying the levels collapses the twisted
/// products to an ordinary conjugation, forcing equal traces. Arithmetic
/// runs in Z localized at a prime chosen coprime to the orbit so that H2 is
/// invertible. Throws NotInGroup if d does not preserve the symplectic form.
CollapseResult twisted_product_collapse(const SquareMatrix& d, const BigInt& a_j,
                                        const AutomorphismSpec& spec);

} // namespace rinf

#endif
