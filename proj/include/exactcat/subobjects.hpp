#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exactcat/config.hpp"
#include "exactcat/exact_structure.hpp"

namespace exactcat {

/// All subspaces of F_p^d, each as its canonical basis matrix (d x k, the
/// transpose of a reduced-row-echelon matrix).  Enumeration order: rank
/// ascending, then pivot-column set lexicographic, then free entries in
/// odometer order.  column_space_basis of any output is the output itself.
inline std::vector<Matrix> subspaces_of(const PrimeField& f, int d) {
    std::vector<Matrix> out;
    out.emplace_back(f, d, 0);
    int p = f.order();
    for (int k = 1; k <= d; ++k) {
        std::vector<int> piv(k);
        for (int i = 0; i < k; ++i) piv[i] = i;
        while (true) {
            // Free slots of the k x d rref: entries right of the row's pivot
            // in non-pivot columns.
            std::vector<std::pair<int, int>> free_slots;
            for (int i = 0; i < k; ++i)
                for (int j = piv[i] + 1; j < d; ++j)
                    if (std::find(piv.begin(), piv.end(), j) == piv.end())
                        free_slots.emplace_back(i, j);
            std::vector<int> vals(free_slots.size(), 0);
            while (true) {
                Matrix r(f, k, d);
                for (int i = 0; i < k; ++i) r.set(i, piv[i], 1);
                for (size_t s = 0; s < free_slots.size(); ++s)
                    r.set(free_slots[s].first, free_slots[s].second, vals[s]);
                out.push_back(r.transpose());
                size_t idx = 0;
                while (idx < vals.size() && ++vals[idx] == p) vals[idx++] = 0;
                if (idx == vals.size()) break;
            }
            // next pivot combination, lexicographic
            int i = k - 1;
            while (i >= 0 && piv[i] == d - k + i) --i;
            if (i < 0) break;
            ++piv[i];
            for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
        }
    }
    return out;
}

/// An admissible subobject of a fixed parent: a representation together with
/// an inflation into the parent, identified by its canonical image subspaces
/// (one basis per vertex).  Construction verifies admissibility.
class AdmissibleSubobject {
public:
    AdmissibleSubobject(RepMorphism inflation, ExactStructure structure)
        : inflation_(std::move(inflation)), structure_(std::move(structure)) {
        if (!structure_.same_ambient(inflation_.target()))
            throw invalid_input("AdmissibleSubobject: wrong ambient");
        if (!is_admissible_monic(inflation_, structure_))
            throw invalid_input("AdmissibleSubobject: not an admissible monic for '" +
                                structure_.name() + "'");
        for (const Matrix& m : inflation_.maps()) images_.push_back(m.column_space_basis());
    }

    const Representation& object() const { return inflation_.source(); }
    const Representation& parent() const { return inflation_.target(); }
    const RepMorphism& inflation() const { return inflation_; }
    const ExactStructure& structure() const { return structure_; }
    const std::vector<Matrix>& canonical_images() const { return images_; }

    /// Subobject identity: same parent value and identical canonical images.
    bool same_subobject(const AdmissibleSubobject& o) const {
        return parent() == o.parent() && images_ == o.images_;
    }

    /// o's image is contained in this image at every vertex.
    bool contains(const AdmissibleSubobject& o) const {
        if (parent() != o.parent()) return false;
        for (size_t v = 0; v < images_.size(); ++v)
            if (!column_space_contained(o.images_[v], images_[v])) return false;
        return true;
    }

    bool is_full() const { return object().dims() == parent().dims(); }

private:
    RepMorphism inflation_;
    ExactStructure structure_;
    std::vector<Matrix> images_;
};

/// The canonical monic between nested subobjects of the same parent: solves
/// outer_basis * m = inner_basis at each vertex.  nullopt if not nested.
inline std::optional<RepMorphism> containment_monic(const AdmissibleSubobject& inner,
                                                    const AdmissibleSubobject& outer) {
    if (inner.parent() != outer.parent()) return std::nullopt;
    std::vector<Matrix> maps;
    for (size_t v = 0; v < inner.canonical_images().size(); ++v) {
        auto m = outer.inflation().map(static_cast<int>(v)).solve(
            inner.inflation().map(static_cast<int>(v)));
        if (!m) return std::nullopt;
        maps.push_back(*m);
    }
    RepMorphism mono(inner.object(), outer.object(), std::move(maps));
    if (compose(outer.inflation(), mono) != inner.inflation())
        throw internal_error("containment_monic: triangle fails");
    return mono;
}

struct SubobjectLattice {
    Representation parent;
    ExactStructure structure;
    std::vector<AdmissibleSubobject> elements;       // sorted, deterministic
    std::vector<std::pair<int, int>> containments;   // (i, j) with elem[i] <= elem[j], i != j
    int zero_index = -1;                             // -1 when absent from the lattice
    int full_index = -1;

    bool contains_pair(int i, int j) const {
        return std::find(containments.begin(), containments.end(), std::make_pair(i, j)) !=
               containments.end();
    }
};

namespace detail {

inline void check_enumeration_budget(const Representation& x, const Budgets& budgets) {
    // Gate = prod_v p^(d_v^2), compared in log space.
    double lg = 0;
    for (int d : x.dims()) lg += static_cast<double>(d) * d * std::log(x.field().order());
    if (lg > std::log(budgets.enumeration))
        throw budget_exceeded("subobject enumeration: prod_v p^(d_v^2) exceeds budget " +
                              std::to_string(budgets.enumeration));
}

}  // namespace detail

/// Exhaustive admissible-subobject lattice of x under e: every tuple of
/// subspaces (one per vertex) that is closed under the arrow maps and whose
/// inclusion is an admissible monic.  Elements are sorted by total dimension,
/// then dimension vector, then canonical basis entries; containments list all
/// strict-or-equal inclusions between distinct elements.
inline SubobjectLattice enumerate_admissible_subobjects(const Representation& x,
                                                        const ExactStructure& e,
                                                        const Budgets& budgets = kDefaultBudgets) {
    if (!e.same_ambient(x)) throw invalid_input("enumerate_admissible_subobjects: wrong ambient");
    detail::check_enumeration_budget(x, budgets);
    const Quiver& q = x.quiver();
    const PrimeField& f = x.field();

    std::vector<std::vector<Matrix>> per_vertex;
    per_vertex.reserve(q.vertex_count());
    for (int v = 0; v < q.vertex_count(); ++v) per_vertex.push_back(subspaces_of(f, x.dim(v)));

    std::vector<AdmissibleSubobject> elements;
    std::vector<size_t> idx(q.vertex_count(), 0);
    bool done = q.vertex_count() == 0;
    while (!done) {
        std::vector<Matrix> bases;
        bases.reserve(q.vertex_count());
        for (int v = 0; v < q.vertex_count(); ++v) bases.push_back(per_vertex[v][idx[v]]);

        // Arrow closure: each arrow map must carry the source subspace into
        // the target subspace; the solve also yields the induced arrow map.
        bool closed = true;
        std::vector<Matrix> arrows;
        for (int a = 0; a < q.arrow_count() && closed; ++a) {
            auto induced = bases[q.target(a)].solve(x.arrow_map(a) * bases[q.source(a)]);
            if (!induced)
                closed = false;
            else
                arrows.push_back(std::move(*induced));
        }
        if (closed) {
            std::vector<int> dims;
            for (const Matrix& b : bases) dims.push_back(b.cols());
            Representation sub(q, f, std::move(dims), std::move(arrows), x.total_dim());
            RepMorphism incl(sub, x, std::move(bases));
            if (is_admissible_monic(incl, e))
                elements.emplace_back(std::move(incl), e);
        }

        int v = 0;
        while (v < q.vertex_count() && ++idx[v] == per_vertex[v].size()) idx[v++] = 0;
        done = v == q.vertex_count();
    }
    if (q.vertex_count() == 0) {
        // Degenerate ambient: the zero representation is its own lattice.
        RepMorphism id = RepMorphism::identity(x);
        elements.emplace_back(id, e);
    }

    std::sort(elements.begin(), elements.end(),
              [](const AdmissibleSubobject& a, const AdmissibleSubobject& b) {
                  if (a.object().total_dim() != b.object().total_dim())
                      return a.object().total_dim() < b.object().total_dim();
                  if (a.object().dims() != b.object().dims())
                      return a.object().dims() < b.object().dims();
                  for (size_t v = 0; v < a.canonical_images().size(); ++v) {
                      const Matrix &ma = a.canonical_images()[v], &mb = b.canonical_images()[v];
                      for (int i = 0; i < ma.rows(); ++i)
                          for (int j = 0; j < ma.cols(); ++j)
                              if (ma.at(i, j) != mb.at(i, j)) return ma.at(i, j) < mb.at(i, j);
                  }
                  return false;
              });

    SubobjectLattice lat{x, e, std::move(elements), {}, -1, -1};
    for (int i = 0; i < static_cast<int>(lat.elements.size()); ++i) {
        if (lat.elements[i].object().is_zero()) lat.zero_index = i;
        if (lat.elements[i].is_full()) lat.full_index = i;
        for (int j = 0; j < static_cast<int>(lat.elements.size()); ++j)
            if (i != j && lat.elements[j].contains(lat.elements[i]))
                lat.containments.emplace_back(i, j);
    }
    return lat;
}

struct QuotientResult {
    Representation object;
    RepMorphism projection;  // parent ->> object
};

/// Canonical quotient of the parent by an admissible subobject.
inline QuotientResult quotient(const Representation& x, const AdmissibleSubobject& sub) {
    if (sub.parent() != x) throw invalid_input("quotient: subobject of a different parent");
    CokernelResult c = cokernel(sub.inflation());
    return {std::move(c.object), std::move(c.projection)};
}

/// Proper: the inflation is not an isomorphism (equivalently, the cokernel is
/// nonzero; for a vertexwise-injective map, total dims differ).
inline bool is_proper(const AdmissibleSubobject& sub) {
    return sub.object().total_dim() < sub.parent().total_dim();
}

/// E-simple: nonzero, and the only admissible subobjects are 0 and the object
/// itself (lattice has exactly two elements).
inline bool is_E_simple(const Representation& x, const ExactStructure& e,
                        const Budgets& budgets = kDefaultBudgets) {
    if (x.is_zero()) return false;
    return enumerate_admissible_subobjects(x, e, budgets).elements.size() == 2;
}

}  // namespace exactcat
