#include "rinf/finite_group.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "rinf/errors.hpp"

namespace rinf {

std::vector<std::uint64_t> FiniteGroupTable::encode(const SquareMatrix& m) {
    std::vector<std::uint64_t> key;
    key.reserve(static_cast<std::size_t>(m.dim()) * m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) key.push_back(m.at(i, j).as_prime_field().value());
    return key;
}

FiniteGroupTable FiniteGroupTable::generate(const std::vector<SquareMatrix>& gens,
                                            std::size_t cap) {
    if (gens.empty()) throw std::invalid_argument("need at least one generator");
    FiniteGroupTable g;
    const RingKind kind = gens.front().kind();
    if (kind.tag != RingTag::PrimeField)
        throw RingMismatch("the finite oracle works over prime fields");
    g.p_ = kind.p;
    g.n_ = gens.front().dim();
    for (const auto& m : gens) {
        if (m.kind() != kind) throw RingMismatch("generators mix field moduli");
        if (m.dim() != g.n_) throw DimensionMismatch("generators mix dimensions");
        if (determinant(m).is_zero()) throw NotInvertible("singular generator");
    }

    const RingValue proto = RingValue::prime_field(0, g.p_);
    const SquareMatrix id = SquareMatrix::identity(g.n_, proto);
    g.elements_.push_back(id);
    g.index_.emplace(encode(id), 0);
    g.derivation_.emplace_back(npos, npos);

    // Record each distinct generator's index after closure starts; the BFS
    // itself multiplies by the given matrices.
    for (std::size_t head = 0; head < g.elements_.size(); ++head) {
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            const SquareMatrix next = g.elements_[head] * gens[gi];
            auto [it, inserted] = g.index_.emplace(encode(next), g.elements_.size());
            if (!inserted) continue;
            if (g.elements_.size() >= cap)
                throw CapExceeded("group closure exceeds cap of " + std::to_string(cap));
            g.elements_.push_back(next);
            g.derivation_.emplace_back(head, gi);
        }
    }

    for (const auto& m : gens) g.generators_.push_back(*g.index_of(m));

    g.inverse_.reserve(g.size());
    for (const auto& m : g.elements_) {
        auto idx = g.index_of(m.inverse());
        if (!idx) throw std::logic_error("closure is not inverse-closed");
        g.inverse_.push_back(*idx);
    }

    // Cache the full product table when it stays reasonably small.
    if (g.size() <= 1024) {
        g.table_.resize(g.size() * g.size());
        for (std::size_t a = 0; a < g.size(); ++a)
            for (std::size_t b = 0; b < g.size(); ++b) {
                auto idx = g.index_of(g.elements_[a] * g.elements_[b]);
                if (!idx) throw std::logic_error("closure is not product-closed");
                g.table_[a * g.size() + b] = static_cast<std::uint32_t>(*idx);
            }
    }
    return g;
}

std::size_t FiniteGroupTable::product(std::size_t a, std::size_t b) const {
    if (!table_.empty()) return table_[a * size() + b];
    return *index_of(elements_[a] * elements_[b]);
}

std::optional<std::size_t> FiniteGroupTable::index_of(const SquareMatrix& m) const {
    auto it = index_.find(encode(m));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::pair<std::size_t, std::size_t>> FiniteGroupTable::derivation(
    std::size_t i) const {
    if (derivation_[i].first == npos) return std::nullopt;
    return derivation_[i];
}

FiniteAutomorphism FiniteAutomorphism::identity(const FiniteGroupTable& g) {
    std::vector<std::size_t> images(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) images[i] = i;
    return FiniteAutomorphism(std::move(images));
}

FiniteAutomorphism FiniteAutomorphism::inner(const FiniteGroupTable& g, std::size_t h) {
    if (h >= g.size()) throw std::invalid_argument("inner conjugator index out of range");
    std::vector<std::size_t> images(g.size());
    const std::size_t hinv = g.inverse(h);
    for (std::size_t i = 0; i < g.size(); ++i) images[i] = g.product(g.product(h, i), hinv);
    return FiniteAutomorphism(std::move(images));
}

FiniteAutomorphism FiniteAutomorphism::frobenius(const FiniteGroupTable& g) {
    std::vector<std::size_t> images(g.size());
    const std::uint64_t p = g.field_prime();
    for (std::size_t i = 0; i < g.size(); ++i) {
        const SquareMatrix img = g.element(i).map(
            [p](const RingValue& e) { return RingValue(e.as_prime_field().pow(p)); });
        auto idx = g.index_of(img);
        if (!idx) throw std::logic_error("entrywise power map left the group");
        images[i] = *idx;
    }
    return FiniteAutomorphism(std::move(images));
}

FiniteAutomorphism FiniteAutomorphism::from_generator_images(
    const FiniteGroupTable& g, const std::vector<SquareMatrix>& images) {
    if (images.size() != g.generators().size())
        throw std::invalid_argument("need one image per generator");
    std::vector<std::size_t> gen_image(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
        auto idx = g.index_of(images[i]);
        if (!idx) throw std::invalid_argument("generator image is not a group element");
        gen_image[i] = *idx;
    }

    // Elements appear in BFS order, so every derivation parent is already
    // mapped when its children come up.
    std::vector<std::size_t> img(g.size());
    img[g.identity_index()] = g.identity_index();
    for (std::size_t i = 1; i < g.size(); ++i) {
        const auto der = g.derivation(i);
        img[i] = g.product(img[der->first], gen_image[der->second]);
    }

    std::vector<bool> hit(g.size(), false);
    for (std::size_t v : img) {
        if (hit[v]) throw std::invalid_argument("generator images do not extend to a bijection");
        hit[v] = true;
    }
    for (std::size_t x = 0; x < g.size(); ++x) {
        for (std::size_t pos = 0; pos < gen_image.size(); ++pos) {
            const std::size_t lhs = img[g.product(x, g.generators()[pos])];
            const std::size_t rhs = g.product(img[x], gen_image[pos]);
            if (lhs != rhs)
                throw std::invalid_argument(
                    "generator images do not extend to a homomorphism");
        }
    }
    return FiniteAutomorphism(std::move(img));
}

FiniteAutomorphism FiniteAutomorphism::composed_with_inner(const FiniteGroupTable& g,
                                                           const FiniteAutomorphism& phi,
                                                           std::size_t h) {
    if (h >= g.size()) throw std::invalid_argument("inner conjugator index out of range");
    std::vector<std::size_t> images(g.size());
    const std::size_t hinv = g.inverse(h);
    for (std::size_t i = 0; i < g.size(); ++i)
        images[i] = phi.apply(g.product(g.product(h, i), hinv));
    return FiniteAutomorphism(std::move(images));
}

std::vector<std::vector<std::size_t>> twisted_class_partition(
    std::size_t size, const std::function<std::size_t(std::size_t, std::size_t)>& product,
    const std::function<std::size_t(std::size_t)>& inverse,
    const std::function<std::size_t(std::size_t)>& phi) {
    std::vector<bool> visited(size, false);
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t x = 0; x < size; ++x) {
        if (visited[x]) continue;
        std::set<std::size_t> orbit;
        for (std::size_t z = 0; z < size; ++z)
            orbit.insert(product(product(z, x), inverse(phi(z))));
        std::vector<std::size_t> cls(orbit.begin(), orbit.end());
        for (std::size_t y : cls) visited[y] = true;
        classes.push_back(std::move(cls));
    }
    return classes;
}

std::vector<std::vector<std::size_t>> twisted_classes(const FiniteGroupTable& g,
                                                      const FiniteAutomorphism& phi) {
    return twisted_class_partition(
        g.size(), [&g](std::size_t a, std::size_t b) { return g.product(a, b); },
        [&g](std::size_t a) { return g.inverse(a); },
        [&phi](std::size_t a) { return phi.apply(a); });
}

std::size_t reidemeister_number(const FiniteGroupTable& g, const FiniteAutomorphism& phi) {
    return twisted_classes(g, phi).size();
}

InnerInvarianceReport check_inner_invariance(const FiniteGroupTable& g,
                                             const FiniteAutomorphism& phi) {
    InnerInvarianceReport rep;
    rep.base_reidemeister = reidemeister_number(g, phi);
    for (std::size_t h = 0; h < g.size(); ++h) {
        const auto twisted = FiniteAutomorphism::composed_with_inner(g, phi, h);
        if (reidemeister_number(g, twisted) != rep.base_reidemeister)
            rep.violating_elements.push_back(h);
    }
    rep.all_equal = rep.violating_elements.empty();
    return rep;
}

QuotientLemmaReport check_quotient_lemma(const FiniteGroupTable& g,
                                         const std::vector<std::size_t>& n_indices,
                                         const FiniteAutomorphism& phi) {
    std::set<std::size_t> nset(n_indices.begin(), n_indices.end());
    if (nset.empty()) throw std::invalid_argument("subgroup must be nonempty");
    for (std::size_t a : nset)
        if (a >= g.size()) throw std::invalid_argument("subgroup index out of range");
    if (!nset.count(g.identity_index()))
        throw std::invalid_argument("subgroup must contain the identity");
    for (std::size_t a : nset) {
        if (!nset.count(g.inverse(a)))
            throw std::invalid_argument("subgroup not closed under inverses");
        for (std::size_t b : nset)
            if (!nset.count(g.product(a, b)))
                throw std::invalid_argument("subgroup not closed under products");
    }
    for (std::size_t x = 0; x < g.size(); ++x)
        for (std::size_t a : nset)
            if (!nset.count(g.product(g.product(x, a), g.inverse(x))))
                throw std::invalid_argument("subgroup is not normal");
    for (std::size_t a : nset)
        if (!nset.count(phi.apply(a)))
            throw NotCharacteristic("automorphism does not preserve the subgroup");

    // Canonical coset representative: the smallest index in x N.
    std::vector<std::size_t> coset_rep(g.size());
    for (std::size_t x = 0; x < g.size(); ++x) {
        std::size_t rep = g.size();
        for (std::size_t a : nset) rep = std::min(rep, g.product(x, a));
        coset_rep[x] = rep;
    }
    std::vector<std::size_t> reps;
    for (std::size_t x = 0; x < g.size(); ++x)
        if (coset_rep[x] == x) reps.push_back(x);
    std::vector<std::size_t> rep_id(g.size(), 0);
    for (std::size_t qi = 0; qi < reps.size(); ++qi) rep_id[reps[qi]] = qi;

    auto qprod = [&](std::size_t qa, std::size_t qb) {
        return rep_id[coset_rep[g.product(reps[qa], reps[qb])]];
    };
    auto qinv = [&](std::size_t qa) { return rep_id[coset_rep[g.inverse(reps[qa])]]; };
    auto qphi = [&](std::size_t qa) { return rep_id[coset_rep[phi.apply(reps[qa])]]; };

    QuotientLemmaReport rep;
    rep.quotient_order = reps.size();
    rep.r_group = reidemeister_number(g, phi);
    rep.r_quotient = twisted_class_partition(reps.size(), qprod, qinv, qphi).size();
    rep.holds = rep.r_group >= rep.r_quotient;
    return rep;
}

} // namespace rinf
