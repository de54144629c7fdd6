#include "clasper/fgab.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace clasper {

FgAbelianGroup::FgAbelianGroup(std::vector<Int> orders) : orders_(std::move(orders)) {
    for (const Int& n : orders_) {
        if (n < 0) throw ClasperError("generator order must be >= 0");
        if (n == 1) throw ClasperError("trivial (order-1) factors must be pruned");
    }
}

FgAbelianGroup FgAbelianGroup::aligned(std::vector<Int> orders) {
    for (const Int& n : orders)
        if (n < 0) throw ClasperError("generator order must be >= 0");
    FgAbelianGroup g;
    g.orders_ = std::move(orders);
    return g;
}

bool FgAbelianGroup::is_finite() const {
    return std::none_of(orders_.begin(), orders_.end(), [](const Int& n) { return n == 0; });
}

Int FgAbelianGroup::group_order() const {
    Int prod = 1;
    for (const Int& n : orders_) {
        if (n == 0) return 0;
        prod *= n;
    }
    return prod;
}

Int FgAbelianGroup::torsion_exponent() const {
    Int e = 1;
    for (const Int& n : orders_)
        if (n > 0) e = lcm(e, n);
    return e;
}

std::vector<std::size_t> FgAbelianGroup::torsion_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < orders_.size(); ++i)
        if (orders_[i] > 0) out.push_back(i);
    return out;
}

GroupElement FgAbelianGroup::zero() const {
    return GroupElement(*this, std::vector<Int>(rank()));
}

GroupElement FgAbelianGroup::basis_element(std::size_t i) const {
    std::vector<Int> c(rank());
    c.at(i) = 1;
    return GroupElement(*this, std::move(c));
}

GroupElement FgAbelianGroup::element(std::vector<Int> coeffs) const {
    return GroupElement(*this, std::move(coeffs));
}

GroupElement::GroupElement(FgAbelianGroup group, std::vector<Int> coeffs)
    : group_(std::move(group)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != group_.rank())
        throw GroupMismatchError("coefficient count does not match generator count");
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] = mod_reduce(coeffs_[i], group_.orders()[i]);
}

bool GroupElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Int& c) { return c == 0; });
}

GroupElement GroupElement::operator+(const GroupElement& other) const {
    if (group_ != other.group_) throw GroupMismatchError("adding elements of different groups");
    std::vector<Int> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeffs_[i] + other.coeffs_[i];
    return GroupElement(group_, std::move(c));
}

GroupElement GroupElement::operator-(const GroupElement& other) const {
    return *this + (-other);
}

GroupElement GroupElement::operator-() const {
    std::vector<Int> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coeffs_[i];
    return GroupElement(group_, std::move(c));
}

GroupElement GroupElement::operator*(const Int& scalar) const {
    std::vector<Int> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeffs_[i] * scalar;
    return GroupElement(group_, std::move(c));
}

bool GroupElement::operator<(const GroupElement& other) const {
    return coeffs_ < other.coeffs_;
}

Homomorphism::Homomorphism(FgAbelianGroup source, FgAbelianGroup target,
                           std::vector<GroupElement> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_.rank())
        throw GroupMismatchError("homomorphism needs one image per source generator");
    for (const GroupElement& im : images_)
        if (im.group() != target_) throw GroupMismatchError("image lies in the wrong group");
}

Homomorphism Homomorphism::identity(const FgAbelianGroup& g) {
    std::vector<GroupElement> images;
    for (std::size_t i = 0; i < g.rank(); ++i) images.push_back(g.basis_element(i));
    return Homomorphism(g, g, std::move(images));
}

bool Homomorphism::is_well_defined() const {
    for (std::size_t i = 0; i < source_.rank(); ++i) {
        const Int& n = source_.orders()[i];
        if (n > 0 && !(images_[i] * n).is_zero()) return false;
    }
    return true;
}

GroupElement Homomorphism::apply(const GroupElement& x) const {
    if (x.group() != source_) throw GroupMismatchError("element not in the source group");
    GroupElement out = target_.zero();
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (x.coeffs()[i] != 0) out = out + images_[i] * x.coeffs()[i];
    return out;
}

Homomorphism Homomorphism::compose_after(const Homomorphism& first) const {
    if (first.target_ != source_) throw GroupMismatchError("homomorphisms do not compose");
    std::vector<GroupElement> images;
    for (const GroupElement& im : first.images_) images.push_back(apply(im));
    return Homomorphism(first.source_, target_, std::move(images));
}

std::optional<Homomorphism> Homomorphism::inverse() const {
    if (!is_well_defined()) return std::nullopt;
    const std::size_t m = target_.rank(), k = source_.rank();
    // Solve A x = e_b modulo the target orders: augment with n'_j e_j columns.
    std::vector<std::size_t> finite_rows;
    for (std::size_t j = 0; j < m; ++j)
        if (target_.orders()[j] > 0) finite_rows.push_back(j);
    Mat aug(m, k + finite_rows.size());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < m; ++j) aug.at(j, i) = images_[i].coeffs()[j];
    for (std::size_t t = 0; t < finite_rows.size(); ++t)
        aug.at(finite_rows[t], k + t) = target_.orders()[finite_rows[t]];

    std::vector<GroupElement> preimages;
    for (std::size_t b = 0; b < m; ++b) {
        std::vector<Int> rhs(m);
        rhs[b] = 1;
        auto sol = solve_linear(aug, rhs);
        if (!sol) return std::nullopt;
        sol->resize(k);
        preimages.push_back(source_.element(std::move(*sol)));
    }
    Homomorphism candidate(target_, source_, std::move(preimages));
    if (!candidate.is_well_defined()) return std::nullopt;
    Homomorphism left = candidate.compose_after(*this);    // source -> source
    Homomorphism right = compose_after(candidate);         // target -> target
    if (left != Homomorphism::identity(source_)) return std::nullopt;
    if (right != Homomorphism::identity(target_)) return std::nullopt;
    return candidate;
}

bool Homomorphism::is_isomorphism() const { return inverse().has_value(); }

Int pairing_unit(const Int& modulus, const Int& gen_order) {
    if (modulus == 0) return gen_order == 0 ? Int(1) : Int(0);
    return modulus / gcd(modulus, gen_order);
}

DualGroup::DualGroup(FgAbelianGroup base, Int modulus)
    : base_(std::move(base)), modulus_(std::move(modulus)) {
    if (modulus_ < 0) throw ClasperError("dual modulus must be >= 0");
    std::vector<Int> orders;
    for (const Int& n : base_.orders()) orders.push_back(gcd(modulus_, n));
    dual_ = FgAbelianGroup::aligned(std::move(orders));
}

Int DualGroup::pairing_unit(std::size_t i) const {
    return clasper::pairing_unit(modulus_, base_.orders()[i]);
}

SmithResult smith_normal_form(const Mat& mat) { return smith(mat); }

PresentedGroup group_from_presentation(std::size_t generators, const Mat& relations) {
    if (relations.cols() != generators && relations.rows() > 0)
        throw ClasperError("relation matrix must have one column per generator");
    // Relations as columns: the quotient is Z^g / column space.
    Mat cols(generators, relations.rows());
    for (std::size_t r = 0; r < relations.rows(); ++r)
        for (std::size_t c = 0; c < generators; ++c) cols.at(c, r) = relations.at(r, c);
    SmithResult s = smith(cols);

    PresentedGroup out;
    out.u = s.u;
    out.uinv = s.uinv;
    std::vector<Int> orders;
    for (std::size_t i = 0; i < generators; ++i) {
        Int d = i < s.diag.size() ? s.diag[i] : Int(0);
        if (d == 1) continue;  // trivial factor, pruned
        out.kept.push_back(i);
        orders.push_back(d);
    }
    out.group = FgAbelianGroup(std::move(orders));

    FgAbelianGroup free_group(std::vector<Int>(generators, Int(0)));
    std::vector<GroupElement> images;
    for (std::size_t g = 0; g < generators; ++g) {
        std::vector<Int> c(out.kept.size());
        for (std::size_t j = 0; j < out.kept.size(); ++j) c[j] = s.u.at(out.kept[j], g);
        images.push_back(out.group.element(std::move(c)));
    }
    out.projection = Homomorphism(free_group, out.group, std::move(images));
    return out;
}

std::vector<Int> PresentedGroup::lift(std::size_t j) const {
    std::vector<Int> col(uinv.rows());
    for (std::size_t i = 0; i < uinv.rows(); ++i) col[i] = uinv.at(i, kept.at(j));
    return col;
}

std::vector<Int> invariant_factors(const FgAbelianGroup& g) {
    Mat relations(g.rank(), g.rank());
    for (std::size_t i = 0; i < g.rank(); ++i) relations.at(i, i) = g.orders()[i];
    PresentedGroup p = group_from_presentation(g.rank(), relations);
    return p.group.orders();
}

DualGroup dual_group(const FgAbelianGroup& h, const Int& n) { return DualGroup(h, n); }

Int pair(const DualGroup& dual, const GroupElement& y, const GroupElement& x) {
    if (y.group() != dual.group()) throw GroupMismatchError("functional not in the dual group");
    if (x.group() != dual.base()) throw GroupMismatchError("element not in the base group");
    Int acc = 0;
    for (std::size_t i = 0; i < x.coeffs().size(); ++i)
        acc += y.coeffs()[i] * x.coeffs()[i] * dual.pairing_unit(i);
    return mod_reduce(acc, dual.modulus());
}

TensorMod tensor_mod(const FgAbelianGroup& h, const Int& n) {
    std::vector<Int> orders;
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < h.rank(); ++i) {
        Int g = gcd(n, h.orders()[i]);
        if (g == 1) continue;
        kept.push_back(i);
        orders.push_back(g);
    }
    FgAbelianGroup t(std::move(orders));
    std::vector<GroupElement> images;
    for (std::size_t i = 0; i < h.rank(); ++i) {
        std::vector<Int> c(kept.size());
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (kept[j] == i) c[j] = 1;
        images.push_back(t.element(std::move(c)));
    }
    return TensorMod{t, Homomorphism(h, t, std::move(images))};
}

TensorMod tensor_mod_aligned(const FgAbelianGroup& h, const Int& n) {
    std::vector<Int> orders;
    for (const Int& ni : h.orders()) orders.push_back(gcd(n, ni));
    FgAbelianGroup t = FgAbelianGroup::aligned(std::move(orders));
    std::vector<GroupElement> images;
    for (std::size_t i = 0; i < h.rank(); ++i) images.push_back(t.basis_element(i));
    return TensorMod{t, Homomorphism(h, t, std::move(images))};
}

Homomorphism dual_hom(const Homomorphism& psi, const Int& n) {
    const FgAbelianGroup& h = psi.source();
    const FgAbelianGroup& hp = psi.target();
    DualGroup dsrc = dual_group(hp, n);  // source of the dual map
    DualGroup dtgt = dual_group(h, n);
    std::vector<GroupElement> images;
    for (std::size_t b = 0; b < hp.rank(); ++b) {
        std::vector<Int> c(h.rank());
        Int unit_b = dsrc.pairing_unit(b);
        for (std::size_t j = 0; j < h.rank(); ++j) {
            // c_j * <e_j*, e_j> = <e'_b*, psi(e_j)> in Z_n
            Int val = psi.images()[j].coeffs()[b] * unit_b;
            Int unit_j = dtgt.pairing_unit(j);
            if (n == 0) {
                if (unit_j == 0) {
                    if (val != 0)
                        throw ClasperError("dual map undefined: homomorphism not well-defined");
                    c[j] = 0;
                } else {
                    c[j] = val;
                }
            } else {
                val = mod_reduce(val, n);
                if (val % unit_j != 0)
                    throw ClasperError("dual map undefined: homomorphism not well-defined");
                c[j] = val / unit_j;
            }
        }
        images.push_back(dtgt.group().element(std::move(c)));
    }
    return Homomorphism(dsrc.group(), dtgt.group(), std::move(images));
}

std::vector<GroupElement> subgroup_generated(const FgAbelianGroup& hp,
                                             const std::vector<GroupElement>& gens) {
    if (!hp.is_finite()) throw InfiniteGroupError("subgroup closure needs a finite group");
    std::set<GroupElement> seen;
    std::vector<GroupElement> frontier{hp.zero()};
    seen.insert(hp.zero());
    while (!frontier.empty()) {
        std::vector<GroupElement> next;
        for (const GroupElement& x : frontier)
            for (const GroupElement& g : gens) {
                GroupElement y = x + g;
                if (seen.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

IsomorphismStream::IsomorphismStream(FgAbelianGroup source, FgAbelianGroup target)
    : source_(std::move(source)), target_(std::move(target)) {
    if (!source_.is_finite() || !target_.is_finite())
        throw InfiniteGroupError("isomorphism enumeration needs finite groups");
    std::vector<GroupElement> all = all_elements(target_);
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < source_.rank(); ++i) {
        const Int& n = source_.orders()[i];
        std::vector<GroupElement> cands;
        for (const GroupElement& x : all)
            if ((x * n).is_zero()) cands.push_back(x);
        if (cands.empty()) {
            done_ = true;  // cannot even build a well-defined map
            return;
        }
        candidates_.push_back(std::move(cands));
    }
    cursor_.assign(source_.rank(), 0);
    if (source_.group_order() != target_.group_order()) done_ = true;
}

bool IsomorphismStream::advance() {
    // Odometer with the last generator varying fastest: lexicographic order
    // of the concatenated image matrices.
    for (std::size_t i = cursor_.size(); i-- > 0;) {
        if (++cursor_[i] < candidates_[i].size()) return true;
        cursor_[i] = 0;
    }
    return false;
}

std::optional<Homomorphism> IsomorphismStream::next() {
    while (!done_) {
        if (!first_) {
            if (!advance()) break;
        }
        first_ = false;
        if (source_.rank() == 0) {
            done_ = true;  // unique trivial map; an isomorphism iff both trivial
            return Homomorphism(source_, target_, {});
        }
        std::vector<GroupElement> images;
        for (std::size_t i = 0; i < cursor_.size(); ++i)
            images.push_back(candidates_[i][cursor_[i]]);
        // Surjective + equal finite order implies bijective.
        if (Int(subgroup_generated(target_, images).size()) == target_.group_order())
            return Homomorphism(source_, target_, std::move(images));
    }
    done_ = true;
    return std::nullopt;
}

std::vector<Homomorphism> enumerate_isomorphisms(const FgAbelianGroup& h,
                                                 const FgAbelianGroup& hp) {
    IsomorphismStream stream(h, hp);
    std::vector<Homomorphism> out;
    while (auto iso = stream.next()) out.push_back(std::move(*iso));
    return out;
}

ElementRange::ElementRange(FgAbelianGroup group) : group_(std::move(group)) {
    if (!group_.is_finite()) throw InfiniteGroupError("cannot enumerate an infinite group");
    cursor_.assign(group_.rank(), Int(0));
}

std::optional<GroupElement> ElementRange::next() {
    if (done_) return std::nullopt;
    if (first_) {
        first_ = false;
        return group_.element(cursor_);
    }
    for (std::size_t i = cursor_.size(); i-- > 0;) {
        if (++cursor_[i] < std::max(group_.orders()[i], Int(1))) return group_.element(cursor_);
        cursor_[i] = 0;
    }
    done_ = true;
    return std::nullopt;
}

std::vector<GroupElement> all_elements(const FgAbelianGroup& g) {
    ElementRange range(g);
    std::vector<GroupElement> out;
    while (auto x = range.next()) out.push_back(std::move(*x));
    return out;
}

namespace {

void partitions_of(int n, int max_part, std::vector<int>& current,
                   std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(current);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        current.push_back(p);
        partitions_of(n - p, p, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<std::vector<Int>> abelian_group_types(const Int& max_order) {
    std::vector<std::vector<Int>> out;
    for (Int k = 1; k <= max_order; ++k) {
        // factor k
        std::map<Int, int> factorization;
        Int rest = k;
        for (Int p = 2; p * p <= rest; ++p)
            while (rest % p == 0) {
                ++factorization[p];
                rest /= p;
            }
        if (rest > 1) ++factorization[rest];
        // one partition choice per prime
        std::vector<std::vector<std::vector<Int>>> per_prime;
        for (const auto& [p, e] : factorization) {
            std::vector<std::vector<int>> parts;
            std::vector<int> buf;
            partitions_of(e, e, buf, parts);
            std::vector<std::vector<Int>> powers;
            for (const auto& part : parts) {
                std::vector<Int> factors;
                for (int a : part) {
                    Int q = 1;
                    for (int t = 0; t < a; ++t) q *= p;
                    factors.push_back(q);
                }
                powers.push_back(std::move(factors));
            }
            per_prime.push_back(std::move(powers));
        }
        // cross product across primes
        std::vector<std::vector<Int>> combos{{}};
        for (const auto& choices : per_prime) {
            std::vector<std::vector<Int>> next;
            for (const auto& base : combos)
                for (const auto& choice : choices) {
                    std::vector<Int> merged = base;
                    merged.insert(merged.end(), choice.begin(), choice.end());
                    next.push_back(std::move(merged));
                }
            combos = std::move(next);
        }
        for (auto& c : combos) {
            std::sort(c.begin(), c.end());
            out.push_back(std::move(c));
        }
    }
    return out;
}

}  // namespace clasper
