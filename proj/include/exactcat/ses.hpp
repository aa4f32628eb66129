#pragma once

#include <string>
#include <utility>

#include "exactcat/rep_ops.hpp"

namespace exactcat {

/// Kernel-cokernel pair A >-i-> B -d->> C, validated at construction:
/// i vertexwise injective, d vertexwise surjective, d*i = 0, and
/// im(i) = ker(d) at every vertex (compared in canonical subspace form).
class ShortExactSequence {
public:
    ShortExactSequence(RepMorphism i, RepMorphism d)
        : i_(std::move(i)), d_(std::move(d)) {
        if (i_.target() != d_.source())
            throw invalid_input("ShortExactSequence: middle objects disagree");
        if (!i_.vertexwise_injective())
            throw invalid_input("ShortExactSequence: inflation is not injective");
        if (!d_.vertexwise_surjective())
            throw invalid_input("ShortExactSequence: deflation is not surjective");
        if (!compose(d_, i_).is_zero())
            throw invalid_input("ShortExactSequence: d * i != 0");
        for (int v = 0; v < i_.source().quiver().vertex_count(); ++v)
            if (!same_column_space(i_.map(v), d_.map(v).kernel_basis()))
                throw invalid_input("ShortExactSequence: im(i) != ker(d) at vertex " +
                                    std::to_string(v));
    }

    const RepMorphism& inflation() const { return i_; }
    const RepMorphism& deflation() const { return d_; }

    const Representation& sub() const { return i_.source(); }
    const Representation& middle() const { return i_.target(); }
    const Representation& quotient() const { return d_.target(); }

    bool operator==(const ShortExactSequence& o) const { return i_ == o.i_ && d_ == o.d_; }

private:
    RepMorphism i_, d_;
};

/// The canonical sequence K >-> X ->> X/K determined by a vertexwise-injective
/// morphism (its cokernel supplies the deflation).
inline ShortExactSequence sequence_of_monic(const RepMorphism& i) {
    return ShortExactSequence(i, cokernel(i).projection);
}

/// The canonical sequence Ker(d) >-> X ->> Q of a vertexwise-surjective morphism.
inline ShortExactSequence sequence_of_epic(const RepMorphism& d) {
    return ShortExactSequence(kernel(d).inclusion, d);
}

/// True iff the deflation admits a section s with d * s = id.  Solved as a
/// linear system over Hom(quotient, middle) coefficients.
inline bool sequence_splits(const ShortExactSequence& seq) {
    const Representation& c = seq.quotient();
    const Representation& b = seq.middle();
    std::vector<RepMorphism> homs = hom_basis(c, b);
    const Quiver& q = c.quiver();

    // Unknown coefficients x_k with sum_k x_k * (d * homs[k]) = id_C, read as a
    // linear system over all identity-matrix entries.
    int rows = 0;
    for (int v = 0; v < q.vertex_count(); ++v) rows += c.dim(v) * c.dim(v);
    Matrix lhs(c.field(), rows, static_cast<int>(homs.size()));
    Matrix rhs(c.field(), rows, 1);
    int r = 0;
    std::vector<RepMorphism> composites;
    composites.reserve(homs.size());
    for (const RepMorphism& h : homs) composites.push_back(compose(seq.deflation(), h));
    for (int v = 0; v < q.vertex_count(); ++v)
        for (int i = 0; i < c.dim(v); ++i)
            for (int j = 0; j < c.dim(v); ++j) {
                for (size_t k = 0; k < composites.size(); ++k)
                    lhs.set(r, static_cast<int>(k), composites[k].map(v).at(i, j));
                rhs.set(r, 0, i == j ? 1 : 0);
                ++r;
            }
    return lhs.solve(rhs).has_value();
}

}  // namespace exactcat
