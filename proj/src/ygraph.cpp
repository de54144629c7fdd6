#include "clasper/ygraph.hpp"

#include <algorithm>
#include <cassert>

namespace clasper {

SpecialPair::SpecialPair(FgAbelianGroup g, GroupElement special)
    : group(std::move(g)), s(std::move(special)) {
    if (s.group() != group) throw GroupMismatchError("special element not in the group");
    if (!(s * 2).is_zero()) throw ClasperError("special element must have order at most 2");
}

namespace {

std::array<std::size_t, 3> canonical_rotation(std::size_t i, std::size_t j, std::size_t k) {
    std::array<std::size_t, 3> a{i, j, k}, b{j, k, i}, c{k, i, j};
    return std::min({a, b, c});
}

}  // namespace

YGroupStructure::YGroupStructure(SpecialPair pair) : pair_(std::move(pair)) {
    const std::size_t r = pair_.group.rank();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k) {
                auto rep = canonical_rotation(i, j, k);
                if (gen_index_.emplace(rep, gens_.size()).second) gens_.push_back(rep);
            }

    const auto& orders = pair_.group.orders();
    const auto& s = pair_.s.coeffs();
    std::vector<std::vector<Int>> relations;
    auto blank = [&] { return std::vector<Int>(gens_.size()); };

    // generator orders: gcd of the finite slot orders kills the class
    for (const auto& g : gens_) {
        Int d = gcd(orders[g[0]], gcd(orders[g[1]], orders[g[2]]));
        if (d == 0) continue;
        auto row = blank();
        row[gen_index_.at(g)] = d;
        relations.push_back(std::move(row));
    }
    // basis slide: Y[e_i, e_i, e_j] = Y[s, e_i, e_j]
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            auto row = blank();
            row[generator_index(i, i, j)] += 1;
            for (std::size_t l = 0; l < r; ++l)
                if (s[l] != 0) row[generator_index(l, i, j)] -= s[l];
            relations.push_back(std::move(row));
        }
    // polarized slide: Y[e_i+e_j, e_i+e_j, e_k] = Y[s, e_i+e_j, e_k]
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k) {
                auto row = blank();
                row[generator_index(i, i, k)] += 1;
                row[generator_index(i, j, k)] += 1;
                row[generator_index(j, i, k)] += 1;
                row[generator_index(j, j, k)] += 1;
                for (std::size_t l = 0; l < r; ++l)
                    if (s[l] != 0) {
                        row[generator_index(l, i, k)] -= s[l];
                        row[generator_index(l, j, k)] -= s[l];
                    }
                relations.push_back(std::move(row));
            }

    Mat rel(relations.size(), gens_.size());
    for (std::size_t a = 0; a < relations.size(); ++a)
        for (std::size_t b = 0; b < gens_.size(); ++b) rel.at(a, b) = relations[a][b];
    presented_ = group_from_presentation(gens_.size(), rel);
}

std::size_t YGroupStructure::generator_index(std::size_t i, std::size_t j,
                                             std::size_t k) const {
    return gen_index_.at(canonical_rotation(i, j, k));
}

std::vector<Int> YGroupStructure::expand(const std::vector<YTerm>& terms) const {
    std::vector<Int> vec(gens_.size());
    const std::size_t r = pair_.group.rank();
    for (const YTerm& term : terms) {
        if (term.a1.group() != pair_.group || term.a2.group() != pair_.group ||
            term.a3.group() != pair_.group)
            throw GroupMismatchError("Y-term color lies outside the structure group");
        for (std::size_t i = 0; i < r; ++i) {
            const Int& c1 = term.a1.coeffs()[i];
            if (c1 == 0) continue;
            for (std::size_t j = 0; j < r; ++j) {
                const Int& c2 = term.a2.coeffs()[j];
                if (c2 == 0) continue;
                for (std::size_t k = 0; k < r; ++k) {
                    const Int& c3 = term.a3.coeffs()[k];
                    if (c3 == 0) continue;
                    vec[generator_index(i, j, k)] += Int(term.sign) * c1 * c2 * c3;
                }
            }
        }
    }
    return vec;
}

GroupElement YGroupStructure::project(const std::vector<Int>& gen_vector) const {
    FgAbelianGroup free_group(std::vector<Int>(gens_.size(), Int(0)));
    return presented_.projection.apply(free_group.element(gen_vector));
}

GroupElement YGroupStructure::normal_form(const std::vector<YTerm>& terms) const {
    return project(expand(terms));
}

YGroupStructure y_group(const SpecialPair& pair) { return YGroupStructure(pair); }

GroupElement normal_form(const YGroupStructure& st, const std::vector<YTerm>& terms) {
    return st.normal_form(terms);
}

YMorphism::YMorphism(const YGroupStructure& source, const YGroupStructure& target,
                     const Homomorphism& f) {
    if (f.source() != source.pair().group || f.target() != target.pair().group)
        throw GroupMismatchError("morphism does not match the Y-group pairs");
    if (f.apply(source.pair().s) != target.pair().s)
        throw SpecialElementMismatchError("morphism does not respect the special elements");
    src_quotient_ = source.quotient();
    dst_quotient_ = target.quotient();

    // image of each source generator class as a target normal form
    std::vector<GroupElement> gen_images;
    for (const auto& g : source.generators()) {
        YTerm t{1, f.images()[g[0]], f.images()[g[1]], f.images()[g[2]]};
        gen_images.push_back(target.normal_form({t}));
    }
    matrix_ = Mat(dst_quotient_.rank(), src_quotient_.rank());
    for (std::size_t j = 0; j < src_quotient_.rank(); ++j) {
        std::vector<Int> lifted = source.lift(j);
        assert(lifted.size() == source.generators().size());
        GroupElement img = dst_quotient_.zero();
        for (std::size_t g = 0; g < lifted.size(); ++g)
            if (lifted[g] != 0) img = img + gen_images[g] * lifted[g];
        for (std::size_t i = 0; i < dst_quotient_.rank(); ++i)
            matrix_.at(i, j) = img.coeffs()[i];
    }
}

GroupElement YMorphism::apply(const GroupElement& nf) const {
    if (nf.group() != src_quotient_)
        throw GroupMismatchError("element not in the source Y-group");
    return dst_quotient_.element(matrix_.apply(nf.coeffs()));
}

YMorphism y_of_morphism(const YGroupStructure& source, const YGroupStructure& target,
                        const Homomorphism& f) {
    return YMorphism(source, target, f);
}

}  // namespace clasper
