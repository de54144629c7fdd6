#include "clasper/spinspace.hpp"

#include <algorithm>

namespace clasper {

SpinSpace::SpinSpace(FgAbelianGroup homology) : homology_(std::move(homology)) {
    positions_.resize(homology_.rank());
    for (std::size_t i = 0; i < homology_.rank(); ++i) {
        const Int& n = homology_.orders()[i];
        if (n % 2 == 0) {  // even or zero order
            positions_[i] = even_idx_.size();
            even_idx_.push_back(i);
        }
    }
    if (dim() >= 63) throw ClasperError("spin space too large for offset encoding");
    mod2_ = tensor_mod_aligned(homology_, 2);
    // The mod-2 duality pairing must be perfect on the surviving basis:
    // every unit on an even-or-zero generator is 1 mod 2.
    for (std::size_t i : even_idx_)
        if (mod_reduce(pairing_unit(2, homology_.orders()[i]), 2) != 1)
            throw ClasperError("mod-2 duality pairing degenerate on spin coordinates");
}

std::optional<std::size_t> SpinSpace::bit_position(std::size_t gen) const {
    return positions_.at(gen);
}

AffineFn::AffineFn(SpinSpace space, int constant, std::vector<Int> slope_bits)
    : space_(std::move(space)), constant_(constant & 1), slope_bits_(std::move(slope_bits)) {
    if (slope_bits_.size() != space_.homology().rank())
        throw GroupMismatchError("slope needs one coordinate per generator");
    for (std::size_t i = 0; i < slope_bits_.size(); ++i) {
        Int g = gcd(Int(2), space_.homology().orders()[i]);
        slope_bits_[i] = mod_reduce(slope_bits_[i], g);  // odd orders freeze at 0
    }
}

AffineFn AffineFn::zero(const SpinSpace& s) {
    return AffineFn(s, 0, std::vector<Int>(s.homology().rank()));
}

AffineFn AffineFn::one(const SpinSpace& s) {
    return AffineFn(s, 1, std::vector<Int>(s.homology().rank()));
}

AffineFn AffineFn::coordinate(const SpinSpace& s, std::size_t gen) {
    std::vector<Int> slope(s.homology().rank());
    slope.at(gen) = 1;
    return AffineFn(s, 0, std::move(slope));
}

int AffineFn::eval(SpinOffset offset) const {
    int acc = constant_;
    for (std::size_t b = 0; b < space_.dim(); ++b)
        if ((offset >> b) & 1)
            acc ^= static_cast<int>(slope_bits_[space_.even_indices()[b]] & 1);
    return acc;
}

AffineFn AffineFn::operator+(const AffineFn& other) const {
    if (space_ != other.space_) throw GroupMismatchError("affine functions on different spaces");
    std::vector<Int> slope(slope_bits_.size());
    for (std::size_t i = 0; i < slope.size(); ++i)
        slope[i] = slope_bits_[i] + other.slope_bits_[i];
    return AffineFn(space_, constant_ ^ other.constant_, std::move(slope));
}

GroupElement kappa(const AffineFn& f) {
    return f.space().mod2_module().element(f.slope_bits());
}

void CubicFn::toggle(std::vector<std::size_t> monomial) {
    if (monomial.size() > 3) throw ClasperError("cubic monomials have degree at most 3");
    if (!std::is_sorted(monomial.begin(), monomial.end()) ||
        std::adjacent_find(monomial.begin(), monomial.end()) != monomial.end())
        throw ClasperError("monomial indices must be strictly increasing");
    for (std::size_t i : monomial)
        if (!space_.bit_position(i))
            return;  // coordinate function of an odd-order generator is zero
    auto it = monomials_.find(monomial);
    if (it != monomials_.end())
        monomials_.erase(it);
    else
        monomials_.insert(std::move(monomial));
}

int CubicFn::eval(SpinOffset offset) const {
    int acc = 0;
    for (const auto& mono : monomials_) {
        int prod = 1;
        for (std::size_t gen : mono) {
            std::size_t b = *space_.bit_position(gen);
            prod &= static_cast<int>((offset >> b) & 1);
        }
        acc ^= prod;
    }
    return acc;
}

CubicFn CubicFn::operator+(const CubicFn& other) const {
    if (space_ != other.space_) throw GroupMismatchError("cubic functions on different spaces");
    CubicFn out = *this;
    for (const auto& mono : other.monomials_) out.toggle(mono);
    return out;
}

namespace {

// An affine function as a list of degree-<=1 monomials with coefficient 1.
std::vector<std::vector<std::size_t>> affine_terms(const AffineFn& f) {
    std::vector<std::vector<std::size_t>> terms;
    if (f.constant()) terms.push_back({});
    for (std::size_t i : f.space().even_indices())
        if (f.slope_bits()[i] == 1) terms.push_back({i});
    return terms;
}

}  // namespace

CubicFn cubic_product(const AffineFn& f1, const AffineFn& f2, const AffineFn& f3) {
    if (f1.space() != f2.space() || f2.space() != f3.space())
        throw GroupMismatchError("affine functions on different spaces");
    CubicFn out(f1.space());
    auto t1 = affine_terms(f1), t2 = affine_terms(f2), t3 = affine_terms(f3);
    for (const auto& a : t1)
        for (const auto& b : t2)
            for (const auto& c : t3) {
                std::set<std::size_t> u(a.begin(), a.end());
                u.insert(b.begin(), b.end());
                u.insert(c.begin(), c.end());
                out.toggle(std::vector<std::size_t>(u.begin(), u.end()));
            }
    return out;
}

Trivector d3(const CubicFn& f, SpinOffset base) {
    const SpinSpace& s = f.space();
    Trivector out{TrivectorSpace(s.mod2_module())};
    const auto& idx = s.even_indices();
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b)
            for (std::size_t c = b + 1; c < idx.size(); ++c) {
                int acc = 0;
                for (unsigned eps = 0; eps < 8; ++eps) {
                    SpinOffset off = base;
                    if (eps & 1) off ^= SpinOffset(1) << a;
                    if (eps & 2) off ^= SpinOffset(1) << b;
                    if (eps & 4) off ^= SpinOffset(1) << c;
                    acc ^= f.eval(off);
                }
                if (acc) out.add_term(idx[a], idx[b], idx[c], 1);
            }
    return out;
}

AffineFunctionGroup::AffineFunctionGroup(SpinSpace space) : space_(std::move(space)) {
    std::vector<Int> orders(1 + space_.dim(), Int(2));
    FgAbelianGroup g(std::move(orders));
    pair_ = SpecialPair(g, g.basis_element(0));
}

AffineFn AffineFunctionGroup::to_affine(const GroupElement& a) const {
    if (a.group() != pair_.group) throw GroupMismatchError("element not in A(S, Z2)");
    std::vector<Int> slope(space_.homology().rank());
    for (std::size_t b = 0; b < space_.dim(); ++b)
        slope[space_.even_indices()[b]] = a.coeffs()[1 + b];
    return AffineFn(space_, static_cast<int>(a.coeffs()[0] & 1), std::move(slope));
}

GroupElement AffineFunctionGroup::from_affine(const AffineFn& f) const {
    if (f.space() != space_) throw GroupMismatchError("affine function on a different space");
    std::vector<Int> c(1 + space_.dim());
    c[0] = f.constant();
    for (std::size_t b = 0; b < space_.dim(); ++b)
        c[1 + b] = f.slope_bits()[space_.even_indices()[b]];
    return pair_.group.element(std::move(c));
}

PullbackP::PullbackP(SpinSpace space) : space_(std::move(space)) {
    std::vector<Int> orders;
    orders.push_back(2);
    for (const Int& n : space_.homology().orders()) orders.push_back(n);
    FgAbelianGroup g(std::move(orders));
    pair_ = SpecialPair(g, g.basis_element(0));
}

GroupElement PullbackP::compose(const GroupElement& x, const AffineFn& f) const {
    if (x.group() != space_.homology()) throw GroupMismatchError("element not in H");
    if (f.space() != space_) throw GroupMismatchError("affine function on a different space");
    if (kappa(f) != space_.mod2_reduction().apply(x))
        throw ConstraintViolationError("pull-back constraint x tensor 1 = kappa(f) violated");
    std::vector<Int> c;
    c.push_back(f.constant());
    for (const Int& xi : x.coeffs()) c.push_back(xi);
    return pair_.group.element(std::move(c));
}

std::pair<GroupElement, AffineFn> PullbackP::decompose(const GroupElement& p) const {
    if (p.group() != pair_.group) throw GroupMismatchError("element not in the pull-back group");
    std::vector<Int> xc(p.coeffs().begin() + 1, p.coeffs().end());
    GroupElement x = space_.homology().element(std::move(xc));
    std::vector<Int> slope = x.coeffs();
    AffineFn f(space_, static_cast<int>(p.coeffs()[0] & 1), std::move(slope));
    return {std::move(x), std::move(f)};
}

CubicFn gamma_terms(const AffineFunctionGroup& ag, const std::vector<YTerm>& terms) {
    CubicFn out(ag.space());
    for (const YTerm& t : terms)
        out = out + cubic_product(ag.to_affine(t.a1), ag.to_affine(t.a2), ag.to_affine(t.a3));
    return out;
}

namespace {

// Shared lift-and-map: sends a normal form through a generator-wise map into
// any Z2-style accumulator.
template <typename Acc, typename GenMap>
Acc map_normal_form(const YGroupStructure& yg, const GroupElement& nf, Acc acc, GenMap&& gen_map) {
    if (nf.group() != yg.quotient()) throw GroupMismatchError("element not in the Y-group");
    for (std::size_t j = 0; j < nf.coeffs().size(); ++j) {
        const Int& c = nf.coeffs()[j];
        if (c == 0) continue;
        std::vector<Int> lifted = yg.lift(j);
        for (std::size_t g = 0; g < lifted.size(); ++g) {
            if (lifted[g] == 0) continue;
            acc = gen_map(std::move(acc), yg.generators()[g], c * lifted[g]);
        }
    }
    return acc;
}

}  // namespace

CubicFn gamma(const AffineFunctionGroup& ag, const YGroupStructure& yg,
              const GroupElement& nf) {
    if (yg.pair() != ag.pair()) throw GroupMismatchError("Y-group is not over A(S, Z2)");
    const FgAbelianGroup& a = ag.pair().group;
    return map_normal_form(
        yg, nf, CubicFn(ag.space()),
        [&](CubicFn acc, const std::array<std::size_t, 3>& gen, const Int& mult) {
            if (mod_reduce(mult, 2) == 0) return acc;
            CubicFn prod = cubic_product(ag.to_affine(a.basis_element(gen[0])),
                                         ag.to_affine(a.basis_element(gen[1])),
                                         ag.to_affine(a.basis_element(gen[2])));
            return acc + prod;
        });
}

std::vector<YTerm> epsilon_cubic(const AffineFunctionGroup& ag, const CubicFn& c) {
    const FgAbelianGroup& a = ag.pair().group;
    GroupElement one = a.basis_element(0);
    auto coord = [&](std::size_t gen) {
        return a.basis_element(1 + *ag.space().bit_position(gen));
    };
    std::vector<YTerm> out;
    for (const auto& mono : c.monomials()) {
        switch (mono.size()) {
            case 0: out.push_back({1, one, one, one}); break;
            case 1: out.push_back({1, coord(mono[0]), one, one}); break;
            case 2: out.push_back({1, coord(mono[0]), coord(mono[1]), one}); break;
            default: out.push_back({1, coord(mono[0]), coord(mono[1]), coord(mono[2])}); break;
        }
    }
    return out;
}

bool in_pullback(const SpinSpace& space, const WImage& w) {
    if (w.wedge_part.space().base() != space.homology()) return false;
    if (w.cubic_part.space() != space) return false;
    Trivector reduced = exterior_cube_hom(space.mod2_reduction(), w.wedge_part);
    return reduced == d3(w.cubic_part);
}

WImage w_map_terms(const PullbackP& p, const std::vector<YTerm>& terms) {
    const SpinSpace& s = p.space();
    WImage out{Trivector{TrivectorSpace(s.homology())}, CubicFn(s)};
    for (const YTerm& t : terms) {
        auto [x1, f1] = p.decompose(t.a1);
        auto [x2, f2] = p.decompose(t.a2);
        auto [x3, f3] = p.decompose(t.a3);
        out.wedge_part = out.wedge_part + wedge(x1, x2, x3) * Int(t.sign);
        out.cubic_part = out.cubic_part + cubic_product(f1, f2, f3);
    }
    return out;
}

WImage w_map(const PullbackP& p, const YGroupStructure& yg, const GroupElement& nf) {
    if (yg.pair() != p.pair()) throw GroupMismatchError("Y-group is not over the pull-back");
    const FgAbelianGroup& pg = p.pair().group;
    WImage zero{Trivector{TrivectorSpace(p.space().homology())}, CubicFn(p.space())};
    return map_normal_form(
        yg, nf, std::move(zero),
        [&](WImage acc, const std::array<std::size_t, 3>& gen, const Int& mult) {
            auto [x1, f1] = p.decompose(pg.basis_element(gen[0]));
            auto [x2, f2] = p.decompose(pg.basis_element(gen[1]));
            auto [x3, f3] = p.decompose(pg.basis_element(gen[2]));
            acc.wedge_part = acc.wedge_part + wedge(x1, x2, x3) * mult;
            if (mod_reduce(mult, 2) != 0)
                acc.cubic_part = acc.cubic_part + cubic_product(f1, f2, f3);
            return acc;
        });
}

std::vector<YTerm> epsilon_tri(const PullbackP& p, const WImage& target) {
    const SpinSpace& s = p.space();
    if (!in_pullback(s, target))
        throw ConstraintViolationError("element is not in the pull-back");
    const FgAbelianGroup& pg = p.pair().group;
    GroupElement one = pg.basis_element(0);
    auto leaf = [&](std::size_t gen) { return pg.basis_element(1 + gen); };

    std::vector<YTerm> out;
    CubicFn residual = target.cubic_part;
    // triple components, paired wedge + monomial; the multiplicity is
    // absorbed into the first color by multilinearity
    for (const auto& [t, c] : target.wedge_part.coeffs()) {
        out.push_back({1, leaf(t[0]) * c, leaf(t[1]), leaf(t[2])});
        if (mod_reduce(c, 2) != 0) residual.toggle({t[0], t[1], t[2]});
    }
    // the residual must now be at most quadratic
    for (const auto& mono : residual.monomials())
        if (mono.size() == 3)
            throw ConstraintViolationError("cubic part incompatible with the wedge part");
    for (const auto& mono : residual.monomials()) {
        switch (mono.size()) {
            case 0: out.push_back({1, one, one, one}); break;
            case 1: out.push_back({1, leaf(mono[0]), one, one}); break;
            default: out.push_back({1, leaf(mono[0]), leaf(mono[1]), one}); break;
        }
    }
    return out;
}

std::vector<std::vector<std::size_t>> cubic_monomial_basis(const SpinSpace& space) {
    const auto& idx = space.even_indices();
    std::vector<std::vector<std::size_t>> out;
    out.push_back({});
    for (std::size_t a = 0; a < idx.size(); ++a) out.push_back({idx[a]});
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b) out.push_back({idx[a], idx[b]});
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b)
            for (std::size_t c = b + 1; c < idx.size(); ++c)
                out.push_back({idx[a], idx[b], idx[c]});
    return out;
}

GroupElement offset_as_mod2(const SpinSpace& s, SpinOffset y) {
    std::vector<Int> c(s.homology().rank());
    for (std::size_t b = 0; b < s.dim(); ++b)
        if ((y >> b) & 1) c[s.even_indices()[b]] = 1;
    return s.mod2_module().element(std::move(c));
}

SpinOffset mod2_as_offset(const SpinSpace& s, const GroupElement& v) {
    SpinOffset y = 0;
    for (std::size_t b = 0; b < s.dim(); ++b)
        if (mod_reduce(v.coeffs()[s.even_indices()[b]], 2) == 1) y |= SpinOffset(1) << b;
    return y;
}

std::vector<Int> pullback_target_factors(const SpinSpace& space) {
    const FgAbelianGroup& h = space.homology();
    TrivectorSpace l3h(h);
    std::vector<IndexTriple> h_triples = l3h.basis_triples();
    std::vector<std::vector<std::size_t>> monomials = cubic_monomial_basis(space);
    const std::size_t a = h_triples.size(), b = monomials.size();

    // phi: L3H + C(S,Z2) -> L3H_(2), (X, f) -> reduction(X) - d3(f); rows are
    // the aligned mod-2 triples of the base, with order gcd(2, n_i, n_j, n_k).
    Mat phi(h_triples.size(), a + b);
    std::vector<Int> row_orders;
    for (std::size_t t = 0; t < h_triples.size(); ++t) {
        const auto& tr = h_triples[t];
        Int order = gcd(Int(2), l3h.basis_order(tr));
        row_orders.push_back(order);
        phi.at(t, t) = 1;  // reduction of the wedge basis vector
        for (std::size_t m = 0; m < b; ++m) {
            const auto& mono = monomials[m];
            if (mono.size() == 3 && mono[0] == tr[0] && mono[1] == tr[1] && mono[2] == tr[2])
                phi.at(t, a + m) = -1;  // d3 of the degree-3 monomial
        }
    }
    // kernel of phi modulo the row orders: solve [phi | -diag(orders)] = 0
    std::size_t extra = 0;
    for (const Int& o : row_orders)
        if (o > 0) ++extra;
    Mat aug(h_triples.size(), a + b + extra);
    for (std::size_t i = 0; i < h_triples.size(); ++i)
        for (std::size_t j = 0; j < a + b; ++j) aug.at(i, j) = phi.at(i, j);
    std::size_t col = a + b;
    for (std::size_t i = 0; i < h_triples.size(); ++i)
        if (row_orders[i] > 0) aug.at(i, col++) = -row_orders[i];

    std::vector<std::vector<Int>> kernel = kernel_lattice(aug);
    std::vector<std::vector<Int>> lattice_gens;
    for (const auto& v : kernel)
        lattice_gens.push_back(std::vector<Int>(v.begin(), v.begin() + (a + b)));
    std::vector<std::vector<Int>> basis = lattice_basis(lattice_gens, a + b);

    // order relations of L3H + C(S,Z2), expressed in the lattice basis
    std::vector<std::vector<Int>> rels;
    for (std::size_t t = 0; t < a; ++t) {
        Int order = l3h.basis_order(h_triples[t]);
        if (order == 0) continue;
        std::vector<Int> r(a + b);
        r[t] = order;
        rels.push_back(std::move(r));
    }
    for (std::size_t m = 0; m < b; ++m) {
        std::vector<Int> r(a + b);
        r[a + m] = 2;
        rels.push_back(std::move(r));
    }
    Mat basis_mat(a + b, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < a + b; ++i) basis_mat.at(i, j) = basis[j][i];
    Mat rel_in_basis(rels.size(), basis.size());
    for (std::size_t r = 0; r < rels.size(); ++r) {
        auto y = solve_linear(basis_mat, rels[r]);
        if (!y) throw ClasperError("order relation escaped the kernel lattice");
        for (std::size_t j = 0; j < basis.size(); ++j) rel_in_basis.at(r, j) = (*y)[j];
    }
    return group_from_presentation(basis.size(), rel_in_basis).group.orders();
}

}  // namespace clasper
