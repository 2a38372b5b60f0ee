#ifndef RINF_FINITE_GROUP_HPP
#define RINF_FINITE_GROUP_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "rinf/matrix.hpp"

namespace rinf {

/// Brute-force oracle for matrix groups over prime fields: elements are
/// enumerated by breadth-first closure from the generators, indexed by their
/// canonical entry list (row-major residues), and addressed by index from
/// then on. Element ordering is the deterministic BFS order. Desk-scale by
/// design; the default cap is 10^4 elements.
class FiniteGroupTable {
public:
    static constexpr std::size_t default_cap = 10000;

    /// Closure of the generators under multiplication. All generators must
    /// be invertible matrices over one prime field; throws CapExceeded when
    /// the closure grows beyond cap, NotInvertible for singular generators.
    static FiniteGroupTable generate(const std::vector<SquareMatrix>& gens,
                                     std::size_t cap = default_cap);

    std::size_t size() const { return elements_.size(); }
    const SquareMatrix& element(std::size_t i) const { return elements_[i]; }
    const std::vector<std::size_t>& generators() const { return generators_; }
    std::size_t identity_index() const { return 0; }
    std::uint64_t field_prime() const { return p_; }
    int dim() const { return n_; }

    std::size_t product(std::size_t a, std::size_t b) const;
    std::size_t inverse(std::size_t a) const { return inverse_[a]; }
    std::optional<std::size_t> index_of(const SquareMatrix& m) const;

    /// BFS derivation of element i: (parent index, generator position), or
    /// nullopt for the identity. parent < i always holds.
    std::optional<std::pair<std::size_t, std::size_t>> derivation(std::size_t i) const;

private:
    std::vector<SquareMatrix> elements_;
    std::map<std::vector<std::uint64_t>, std::size_t> index_;
    std::vector<std::size_t> generators_;
    std::vector<std::size_t> inverse_;
    std::vector<std::pair<std::size_t, std::size_t>> derivation_; // (npos,npos) for identity
    std::vector<std::uint32_t> table_; // full product table when small enough
    std::uint64_t p_ = 0;
    int n_ = 0;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    static std::vector<std::uint64_t> encode(const SquareMatrix& m);
};

/// Automorphism of an enumerated group, stored as the permutation of element
/// indices. The factory functions validate that the images form a bijection
/// compatible with the product table.
class FiniteAutomorphism {
public:
    static FiniteAutomorphism identity(const FiniteGroupTable& g);
    static FiniteAutomorphism inner(const FiniteGroupTable& g, std::size_t h);
    /// Entrywise x -> x^p. Over the prime field itself this is the identity
    /// map (included for parity with the q > p picture, where it is not).
    static FiniteAutomorphism frobenius(const FiniteGroupTable& g);
    /// Extends generator images through the BFS derivation and validates
    /// bijectivity plus img(x*g) = img(x)*img(g) for every element x and
    /// generator g, which pins the full homomorphism property.
    static FiniteAutomorphism from_generator_images(const FiniteGroupTable& g,
                                                    const std::vector<SquareMatrix>& images);
    /// x -> phi(h x h^-1), the composition tested by the inner-invariance law.
    static FiniteAutomorphism composed_with_inner(const FiniteGroupTable& g,
                                                  const FiniteAutomorphism& phi, std::size_t h);

    std::size_t apply(std::size_t i) const { return images_[i]; }
    const std::vector<std::size_t>& images() const { return images_; }

private:
    std::vector<std::size_t> images_;
    explicit FiniteAutomorphism(std::vector<std::size_t> images) : images_(std::move(images)) {}
};

/// Orbit partition of the action z . x = z x phi(z)^-1, as sorted index
/// lists ordered by their minimal element. The class count is R(phi).
std::vector<std::vector<std::size_t>> twisted_classes(const FiniteGroupTable& g,
                                                      const FiniteAutomorphism& phi);

std::size_t reidemeister_number(const FiniteGroupTable& g, const FiniteAutomorphism& phi);

/// Generic twisted-class partition over an abstract product table; used for
/// quotient groups.
std::vector<std::vector<std::size_t>> twisted_class_partition(
    std::size_t size, const std::function<std::size_t(std::size_t, std::size_t)>& product,
    const std::function<std::size_t(std::size_t)>& inverse,
    const std::function<std::size_t(std::size_t)>& phi);

struct InnerInvarianceReport {
    std::size_t base_reidemeister = 0;
    bool all_equal = false;
    std::vector<std::size_t> violating_elements; // expected empty
};

/// Composes phi with conjugation by every group element and checks that the
/// Reidemeister number never moves.
InnerInvarianceReport check_inner_invariance(const FiniteGroupTable& g,
                                             const FiniteAutomorphism& phi);

struct QuotientLemmaReport {
    std::size_t r_group = 0;
    std::size_t r_quotient = 0;
    std::size_t quotient_order = 0;
    bool holds = false; // r_group >= r_quotient
};

/// For a phi-invariant normal subgroup N (given as element indices), builds
/// the quotient with its induced automorphism and checks the surjectivity
/// inequality R_G(phi) >= R_{G/N}(induced phi). Throws NotCharacteristic
/// when phi does not preserve N, std::invalid_argument when N is not a
/// normal subgroup.
QuotientLemmaReport check_quotient_lemma(const FiniteGroupTable& g,
                                         const std::vector<std::size_t>& n_indices,
                                         const FiniteAutomorphism& phi);

} // namespace rinf

#endif
