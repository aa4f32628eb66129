#pragma once

#include <utility>
#include <vector>

#include "exactcat/intersect_sum.hpp"

namespace exactcat {

enum class SequenceTag { second_iso, third_iso, three_by_three };

inline const char* to_string(SequenceTag t) {
    switch (t) {
        case SequenceTag::second_iso: return "second_iso";
        case SequenceTag::third_iso: return "third_iso";
        case SequenceTag::three_by_three: return "three_by_three";
    }
    return "?";
}

/// A constructed kernel-cokernel pair together with its membership verdict
/// under the structure it was built for.  Validity of the pair itself is
/// ambient-abelian and holds regardless of membership.
struct VerifiedSequence {
    ShortExactSequence seq;
    bool member;
    SequenceTag tag;
};

/// (y cap x) >-> y ->> (y + x)/x.  The inflation is the intersection leg into
/// y, the deflation is y's sum leg followed by the quotient of the sum by x.
inline VerifiedSequence second_iso_sequence(const AdmissibleSubobject& x,
                                            const AdmissibleSubobject& y,
                                            const ExactStructure& e) {
    IntersectionResult inter = intersection(x, y, e);
    SumResult s = sum(x, y, e);
    CokernelResult q = cokernel(s.from_first);
    ShortExactSequence seq(inter.to_second, compose(q.projection, s.from_second));
    bool member = e.member(seq);
    return {std::move(seq), member, SequenceTag::second_iso};
}

/// Two routes to the same object: y/(y cap x) and (y + x)/x are isomorphic.
inline bool second_iso_isomorphism_check(const AdmissibleSubobject& x,
                                         const AdmissibleSubobject& y, const ExactStructure& e,
                                         const Budgets& budgets = kDefaultBudgets) {
    IntersectionResult inter = intersection(x, y, e);
    SumResult s = sum(x, y, e);
    Representation left = cokernel(inter.to_second).object;   // y/(y cap x)
    Representation right = cokernel(s.from_first).object;     // (y + x)/x
    return is_isomorphic(left, right, budgets).has_value();
}

namespace detail {

/// Shared scaffolding between the third-isomorphism sequence and the 3x3
/// grid: both sums with x, the monotone map between them, the quotients by
/// the x-leg, and the induced map c between the quotients.
struct ThirdIsoParts {
    SumResult s1, s2;           // x + y1, x + y2
    RepMorphism r_sum;          // (x + y1) -> (x + y2)
    CokernelResult q1, q2;      // quotients by the x legs
    RepMorphism c;              // (y1 + x)/x >-> (y2 + x)/x
};

inline ThirdIsoParts third_iso_parts(const AdmissibleSubobject& x, const AdmissibleSubobject& y1,
                                     const AdmissibleSubobject& y2, const RepMorphism& inc,
                                     const ExactStructure& e) {
    SumResult s1 = sum(x, y1, e);
    SumResult s2 = sum(x, y2, e);
    RepMorphism r_sum = sum_monotone(x, y1, y2, inc, e);
    CokernelResult q1 = cokernel(s1.from_first);
    CokernelResult q2 = cokernel(s2.from_first);
    // c is the descent of r_sum to the quotients: c * q1 = q2 * r_sum.  It
    // exists because r_sum carries the x-leg of s1 onto the x-leg of s2.
    RepMorphism rhs = compose(q2.projection, r_sum);
    std::vector<Matrix> maps;
    for (int v = 0; v < rhs.source().quiver().vertex_count(); ++v)
        maps.push_back(detail::must_solve_left(q1.projection.map(v), rhs.map(v),
                                               "third_iso descent"));
    RepMorphism c(q1.object, q2.object, std::move(maps));
    if (compose(c, q1.projection) != rhs)
        throw internal_error("third_iso_parts: descent square fails");
    return {std::move(s1), std::move(s2), std::move(r_sum), std::move(q1), std::move(q2),
            std::move(c)};
}

}  // namespace detail

/// (y1 + x)/x >-> (y2 + x)/x ->> (y2 + x)/(y1 + x), for nested subobjects
/// y1 <= y2 witnessed by the admissible monic inc (y2.inflation * inc =
/// y1.inflation).
inline VerifiedSequence third_iso_sequence(const AdmissibleSubobject& x,
                                           const AdmissibleSubobject& y1,
                                           const AdmissibleSubobject& y2, const RepMorphism& inc,
                                           const ExactStructure& e) {
    detail::ThirdIsoParts parts = detail::third_iso_parts(x, y1, y2, inc, e);
    ShortExactSequence seq(parts.c, cokernel(parts.c).projection);
    bool member = e.member(seq);
    return {std::move(seq), member, SequenceTag::third_iso};
}

/// Full 3x3 grid on (x; y1 <= y2): the two second-isomorphism rows, the
/// monotone column maps with their cokernels, and the induced third row
///   (y2 cap x)/(y1 cap x) >-> y2/y1 ->> (y2 + x)/(y1 + x).
struct ThreeByThreeGrid {
    VerifiedSequence row1, row2;
    RepMorphism r;    // (y1 cap x) -> (y2 cap x)
    RepMorphism inc;  // y1 -> y2 (the input containment)
    RepMorphism c;    // (y1 + x)/x -> (y2 + x)/x
    CokernelResult col1, col2, col3;  // cokernels of r, inc, c
    RepMorphism alpha, beta;          // the third-row maps
    VerifiedSequence third_row;
};

/// Builds the grid, validating all six bordering sequences and checking the
/// four squares commute.  Membership flags are evaluated against e; the
/// construction itself is ambient-abelian and always succeeds on valid input.
inline ThreeByThreeGrid three_by_three_grid(const AdmissibleSubobject& x,
                                            const AdmissibleSubobject& y1,
                                            const AdmissibleSubobject& y2,
                                            const RepMorphism& inc, const ExactStructure& e) {
    VerifiedSequence row1 = second_iso_sequence(x, y1, e);
    VerifiedSequence row2 = second_iso_sequence(x, y2, e);
    RepMorphism r = intersection_monotone(x, y1, y2, inc, e);
    detail::ThirdIsoParts parts = detail::third_iso_parts(x, y1, y2, inc, e);

    if (compose(inc, row1.seq.inflation()) != compose(row2.seq.inflation(), r))
        throw internal_error("three_by_three: left square does not commute");
    if (compose(parts.c, row1.seq.deflation()) != compose(row2.seq.deflation(), inc))
        throw internal_error("three_by_three: right square does not commute");

    CokernelResult col1 = cokernel(r);
    CokernelResult col2 = cokernel(inc);
    CokernelResult col3 = cokernel(parts.c);
    ShortExactSequence(r, col1.projection);  // column validity
    ShortExactSequence(inc, col2.projection);
    ShortExactSequence(parts.c, col3.projection);

    // Third-row maps are the descents of the middle row to the cokernels.
    RepMorphism alpha_rhs = compose(col2.projection, row2.seq.inflation());
    std::vector<Matrix> alpha_maps;
    for (int v = 0; v < col1.object.quiver().vertex_count(); ++v)
        alpha_maps.push_back(detail::must_solve_left(col1.projection.map(v), alpha_rhs.map(v),
                                                     "three_by_three alpha"));
    RepMorphism alpha(col1.object, col2.object, std::move(alpha_maps));

    RepMorphism beta_rhs = compose(col3.projection, row2.seq.deflation());
    std::vector<Matrix> beta_maps;
    for (int v = 0; v < col2.object.quiver().vertex_count(); ++v)
        beta_maps.push_back(detail::must_solve_left(col2.projection.map(v), beta_rhs.map(v),
                                                    "three_by_three beta"));
    RepMorphism beta(col2.object, col3.object, std::move(beta_maps));

    if (compose(alpha, col1.projection) != alpha_rhs ||
        compose(beta, col2.projection) != beta_rhs)
        throw internal_error("three_by_three: bottom squares do not commute");

    ShortExactSequence seq(alpha, beta);
    bool member = e.member(seq);
    VerifiedSequence third{seq, member, SequenceTag::three_by_three};
    return {std::move(row1), std::move(row2), std::move(r), inc, std::move(parts.c),
            std::move(col1), std::move(col2), std::move(col3), std::move(alpha),
            std::move(beta), std::move(third)};
}

inline VerifiedSequence three_by_three_sequence(const AdmissibleSubobject& x,
                                                const AdmissibleSubobject& y1,
                                                const AdmissibleSubobject& y2,
                                                const RepMorphism& inc, const ExactStructure& e) {
    return three_by_three_grid(x, y1, y2, inc, e).third_row;
}

}  // namespace exactcat
