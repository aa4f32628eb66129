#pragma once

#include <string>
#include <utility>
#include <vector>

#include "exactcat/report_types.hpp"
#include "exactcat/subobjects.hpp"

namespace exactcat {

/// Intersection of two admissible subobjects of a common parent, realized as
/// the pullback of their inflations (Ker[i1 -i2] inside X1 (+) X2).
/// Convention used throughout: the first slot stays first -- to_first lands
/// in a.object(), to_second in b.object().
struct IntersectionResult {
    Representation object;
    RepMorphism to_first;     // object -> a.object()
    RepMorphism to_second;    // object -> b.object()
    RepMorphism into_parent;  // a.inflation * to_first = b.inflation * to_second
    bool ai_ok;               // both legs admissible monics under e
    Pullback raw;
};

inline IntersectionResult intersection(const AdmissibleSubobject& a, const AdmissibleSubobject& b,
                                       const ExactStructure& e) {
    if (a.parent() != b.parent())
        throw invalid_input("intersection: subobjects of different parents");
    Pullback pb = pullback(a.inflation(), b.inflation());
    RepMorphism into_parent = compose(a.inflation(), pb.to_first);
    if (into_parent != compose(b.inflation(), pb.to_second))
        throw internal_error("intersection: pullback square does not commute");
    bool ai = is_admissible_monic(pb.to_first, e) && is_admissible_monic(pb.to_second, e);
    return {pb.object, pb.to_first, pb.to_second, std::move(into_parent), ai, std::move(pb)};
}

/// Sum of two admissible subobjects: the pushout of the intersection legs,
/// with the mediating map u into the parent (u * from_first = a.inflation,
/// u * from_second = b.inflation).
struct SumResult {
    Representation object;
    RepMorphism from_first;   // a.object() -> object
    RepMorphism from_second;  // b.object() -> object
    RepMorphism mediating;    // object -> parent, always vertexwise injective here
    bool as_ok;               // mediating map admissible monic under e
    IntersectionResult inter;
    Pushout raw;
};

inline SumResult sum(const AdmissibleSubobject& a, const AdmissibleSubobject& b,
                     const ExactStructure& e) {
    IntersectionResult inter = intersection(a, b, e);
    Pushout po = pushout(inter.to_first, inter.to_second);
    RepMorphism u = pushout_universal(po, a.inflation(), b.inflation());
    if (!u.vertexwise_injective())
        throw internal_error("sum: mediating map not injective in the ambient category");
    bool as = is_admissible_monic(u, e);
    return {po.object, po.from_first, po.from_second, std::move(u), as, std::move(inter),
            std::move(po)};
}

/// Canonical image of the intersection inside the parent, one basis per vertex.
inline std::vector<Matrix> intersection_images(const IntersectionResult& r) {
    std::vector<Matrix> out;
    for (const Matrix& m : r.into_parent.maps()) out.push_back(m.column_space_basis());
    return out;
}

/// Canonical image of the sum inside the parent, one basis per vertex.
inline std::vector<Matrix> sum_images(const SumResult& r) {
    std::vector<Matrix> out;
    for (const Matrix& m : r.mediating.maps()) out.push_back(m.column_space_basis());
    return out;
}

/// Ambient-abelian intersection, independent route: Ker[d1; d2] where d_i is
/// the cokernel projection of the i-th inflation.
struct AbelianIntersection {
    Representation object;
    RepMorphism into_parent;
};

inline AbelianIntersection abelian_intersection(const AdmissibleSubobject& a,
                                                const AdmissibleSubobject& b) {
    if (a.parent() != b.parent())
        throw invalid_input("abelian_intersection: subobjects of different parents");
    RepMorphism d1 = cokernel(a.inflation()).projection;
    RepMorphism d2 = cokernel(b.inflation()).projection;
    DirectSum q = direct_sum(d1.target(), d2.target());
    RepMorphism stacked = compose(q.in_first, d1) + compose(q.in_second, d2);
    KernelResult k = kernel(stacked);
    return {std::move(k.object), std::move(k.inclusion)};
}

/// Ambient-abelian sum, independent route: Im[i1 i2] of X1 (+) X2 -> parent.
struct AbelianSum {
    Representation object;
    RepMorphism monic;  // object >-> parent
};

inline AbelianSum abelian_sum(const AdmissibleSubobject& a, const AdmissibleSubobject& b) {
    if (a.parent() != b.parent())
        throw invalid_input("abelian_sum: subobjects of different parents");
    DirectSum s = direct_sum(a.object(), b.object());
    RepMorphism spread = compose(a.inflation(), s.pr_first) + compose(b.inflation(), s.pr_second);
    ImageFactorization im = image_factorization(spread);
    return {std::move(im.image), std::move(im.monic)};
}

/// Monotonicity in the second slot: given y <= yp (via the admissible monic
/// inc with yp.inflation * inc = y.inflation), the mediating map
/// r: (x cap y) -> (x cap yp) with to_first' * r = to_first and
/// to_second' * r = inc * to_second.
inline RepMorphism intersection_monotone(const AdmissibleSubobject& x,
                                         const AdmissibleSubobject& y,
                                         const AdmissibleSubobject& yp, const RepMorphism& inc,
                                         const ExactStructure& e) {
    if (compose(yp.inflation(), inc) != y.inflation())
        throw invalid_input("intersection_monotone: inc is not the containment of y in yp");
    if (!is_admissible_monic(inc, e))
        throw invalid_input("intersection_monotone: inc is not an admissible monic");
    IntersectionResult small = intersection(x, y, e);
    IntersectionResult big = intersection(x, yp, e);
    return pullback_universal(big.raw, small.to_first, compose(inc, small.to_second));
}

/// Monotonicity for sums: the mediating map r: (x + y) -> (x + yp) with
/// r * from_first = from_first' and r * from_second = from_second' * inc,
/// compatible with both mediating maps into the parent.
inline RepMorphism sum_monotone(const AdmissibleSubobject& x, const AdmissibleSubobject& y,
                                const AdmissibleSubobject& yp, const RepMorphism& inc,
                                const ExactStructure& e) {
    if (compose(yp.inflation(), inc) != y.inflation())
        throw invalid_input("sum_monotone: inc is not the containment of y in yp");
    if (!is_admissible_monic(inc, e))
        throw invalid_input("sum_monotone: inc is not an admissible monic");
    SumResult small = sum(x, y, e);
    SumResult big = sum(x, yp, e);
    RepMorphism r = pushout_universal(small.raw, big.from_first, compose(big.from_second, inc));
    if (compose(big.mediating, r) != small.mediating)
        throw internal_error("sum_monotone: mediating triangle fails");
    return r;
}

/// The modular identity witnessed two ways: the canonical image of
/// (a cap b) in the parent must equal the image of the pullback of the two
/// sum legs a >-> (a + b) <-< b carried back into the parent.
inline bool intersection_over_sum_check(const AdmissibleSubobject& a,
                                        const AdmissibleSubobject& b, const ExactStructure& e) {
    IntersectionResult inter = intersection(a, b, e);
    SumResult s = sum(a, b, e);
    Pullback inside = pullback(s.from_first, s.from_second);
    RepMorphism into_parent =
        compose(s.mediating, compose(s.from_first, inside.to_first));
    std::vector<Matrix> left = intersection_images(inter);
    for (size_t v = 0; v < left.size(); ++v)
        if (left[v] != into_parent.map(static_cast<int>(v)).column_space_basis()) return false;
    return true;
}

namespace detail {

inline Json pair_witness(const AdmissibleSubobject& a, const AdmissibleSubobject& b) {
    return Json{{"parent", to_json(a.parent())},
                {"first", to_json(a.inflation())},
                {"second", to_json(b.inflation())}};
}

}  // namespace detail

/// AI: pullbacks of inflations along inflations have admissible-monic legs.
/// Swept over every ordered pair in every corpus object's lattice.
inline AxiomReport check_AI(const ExactStructure& e, const std::vector<Representation>& corpus,
                            const Budgets& budgets = kDefaultBudgets) {
    AxiomReport report;
    CheckBlock& blk = report.block("AI");
    for (const Representation& x : corpus) {
        SubobjectLattice lat = enumerate_admissible_subobjects(x, e, budgets);
        for (const AdmissibleSubobject& a : lat.elements)
            for (const AdmissibleSubobject& b : lat.elements) {
                ++blk.cases;
                IntersectionResult r = intersection(a, b, e);
                if (!r.ai_ok)
                    blk.fail("intersection leg not an admissible monic",
                             detail::pair_witness(a, b));
            }
    }
    return report;
}

/// AS: the mediating map from the pushout-sum into the parent is an
/// admissible monic, for every pair of admissible subobjects.
inline AxiomReport check_AS(const ExactStructure& e, const std::vector<Representation>& corpus,
                            const Budgets& budgets = kDefaultBudgets) {
    AxiomReport report;
    CheckBlock& blk = report.block("AS");
    for (const Representation& x : corpus) {
        SubobjectLattice lat = enumerate_admissible_subobjects(x, e, budgets);
        for (const AdmissibleSubobject& a : lat.elements)
            for (const AdmissibleSubobject& b : lat.elements) {
                ++blk.cases;
                SumResult r = sum(a, b, e);
                if (!r.as_ok)
                    blk.fail("sum mediating map not an admissible monic",
                             detail::pair_witness(a, b));
            }
    }
    return report;
}

/// AIS = AI and AS together (plus the sanity identity relating the two).
inline AxiomReport check_AIS(const ExactStructure& e, const std::vector<Representation>& corpus,
                             const Budgets& budgets = kDefaultBudgets) {
    AxiomReport report = check_AI(e, corpus, budgets);
    report.merge(check_AS(e, corpus, budgets));
    CheckBlock& blk = report.block("intersection_vs_sum");
    for (const Representation& x : corpus) {
        SubobjectLattice lat = enumerate_admissible_subobjects(x, e, budgets);
        for (const AdmissibleSubobject& a : lat.elements)
            for (const AdmissibleSubobject& b : lat.elements) {
                ++blk.cases;
                if (!intersection_over_sum_check(a, b, e))
                    blk.fail("intersection does not match the pullback over the sum",
                             detail::pair_witness(a, b));
            }
    }
    return report;
}

}  // namespace exactcat
