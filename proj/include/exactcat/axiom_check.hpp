#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "exactcat/report_types.hpp"
#include "exactcat/subobjects.hpp"

namespace exactcat {

namespace detail {

/// Deterministic pseudo-random automorphism of x: first vertexwise-invertible
/// coefficient combo among a bounded number of draws, else the identity.
inline RepMorphism random_automorphism(const Representation& x, std::mt19937_64& rng) {
    if (x.is_zero()) return RepMorphism::identity(x);
    std::vector<RepMorphism> basis = hom_basis(x, x);
    std::uniform_int_distribution<int> dist(0, x.field().order() - 1);
    for (int attempt = 0; attempt < 24; ++attempt) {
        std::vector<Matrix> maps;
        bool ok = true;
        for (int v = 0; v < x.quiver().vertex_count() && ok; ++v) {
            Matrix m(x.field(), x.dim(v), x.dim(v));
            maps.push_back(m);
        }
        std::vector<int> coeff(basis.size());
        for (int& c : coeff) c = dist(rng);
        for (int v = 0; v < x.quiver().vertex_count() && ok; ++v) {
            for (size_t b = 0; b < basis.size(); ++b)
                if (coeff[b] != 0) maps[v] = maps[v] + basis[b].map(v).scale(coeff[b]);
            ok = maps[v].is_invertible();
        }
        if (ok) return RepMorphism(x, x, std::move(maps));
    }
    return RepMorphism::identity(x);
}

inline Json morphism_witness(const char* role, const RepMorphism& f) {
    return Json{{"role", role}, {"morphism", to_json(f)}};
}

}  // namespace detail

/// Exact-structure axioms checked exhaustively over the corpus:
///   A0 / A0op    identities are admissible monics / epics
///   A1 / A1op    composites of admissible monics / epics are admissible
///   A2 / A2op    pushouts of admissible monics / pullbacks of admissible
///                epics along arbitrary corpus morphisms stay admissible
/// plus two structural audits every exact structure must satisfy:
///   split_containment   all split sequences of corpus pairs are members
///   iso_invariance      membership survives conjugation by sampled isos
///   monic_epic_iso      anything both admissible monic and epic is an iso
/// Admissible monics are drawn from the exhaustive subobject lattices;
/// admissible epics from the canonical quotient projections.
inline AxiomReport check_axioms(const ExactStructure& e,
                                const std::vector<Representation>& corpus,
                                const Budgets& budgets = kDefaultBudgets,
                                std::uint64_t seed = 0) {
    AxiomReport report;
    std::vector<SubobjectLattice> lattices;
    lattices.reserve(corpus.size());
    for (const Representation& x : corpus)
        lattices.push_back(enumerate_admissible_subobjects(x, e, budgets));

    {
        CheckBlock& a0 = report.block("A0");
        CheckBlock& a0op = report.block("A0op");
        for (const Representation& x : corpus) {
            RepMorphism id = RepMorphism::identity(x);
            ++a0.cases;
            if (!is_admissible_monic(id, e))
                a0.fail("identity not an admissible monic",
                        Json{{"object", to_json(x)}});
            ++a0op.cases;
            if (!is_admissible_epic(id, e))
                a0op.fail("identity not an admissible epic",
                          Json{{"object", to_json(x)}});
        }
    }

    {
        CheckBlock& a1 = report.block("A1");
        for (const SubobjectLattice& lat : lattices)
            for (const AdmissibleSubobject& outer : lat.elements) {
                SubobjectLattice inner_lat =
                    enumerate_admissible_subobjects(outer.object(), e, budgets);
                for (const AdmissibleSubobject& inner : inner_lat.elements) {
                    ++a1.cases;
                    RepMorphism composite = compose(outer.inflation(), inner.inflation());
                    if (!is_admissible_monic(composite, e))
                        a1.fail("composite of admissible monics not admissible",
                                Json{{"inner", to_json(inner.inflation())},
                                     {"outer", to_json(outer.inflation())}});
                }
            }
    }

    {
        CheckBlock& a1op = report.block("A1op");
        for (size_t c = 0; c < corpus.size(); ++c)
            for (const AdmissibleSubobject& sub : lattices[c].elements) {
                QuotientResult q1 = quotient(corpus[c], sub);
                SubobjectLattice mid_lat =
                    enumerate_admissible_subobjects(q1.object, e, budgets);
                for (const AdmissibleSubobject& sub2 : mid_lat.elements) {
                    ++a1op.cases;
                    QuotientResult q2 = quotient(q1.object, sub2);
                    RepMorphism composite = compose(q2.projection, q1.projection);
                    if (!is_admissible_epic(composite, e))
                        a1op.fail("composite of admissible epics not admissible",
                                  Json{{"first", to_json(q1.projection)},
                                       {"second", to_json(q2.projection)}});
                }
            }
    }

    {
        CheckBlock& a2 = report.block("A2");
        for (const SubobjectLattice& lat : lattices)
            for (const AdmissibleSubobject& sub : lat.elements)
                for (const Representation& c : corpus) {
                    std::vector<RepMorphism> maps = hom_basis(sub.object(), c);
                    maps.push_back(RepMorphism::zero(sub.object(), c));
                    for (const RepMorphism& h : maps) {
                        ++a2.cases;
                        Pushout po = pushout(sub.inflation(), h);
                        if (!is_admissible_monic(po.from_second, e))
                            a2.fail("pushout of admissible monic not admissible",
                                    Json{{"monic", to_json(sub.inflation())},
                                         {"along", to_json(h)}});
                    }
                }
    }

    {
        CheckBlock& a2op = report.block("A2op");
        for (size_t c = 0; c < corpus.size(); ++c)
            for (const AdmissibleSubobject& sub : lattices[c].elements) {
                QuotientResult q = quotient(corpus[c], sub);
                for (const Representation& other : corpus) {
                    std::vector<RepMorphism> maps = hom_basis(other, q.object);
                    maps.push_back(RepMorphism::zero(other, q.object));
                    for (const RepMorphism& g : maps) {
                        ++a2op.cases;
                        Pullback pb = pullback(q.projection, g);
                        if (!is_admissible_epic(pb.to_second, e))
                            a2op.fail("pullback of admissible epic not admissible",
                                      Json{{"epic", to_json(q.projection)},
                                           {"along", to_json(g)}});
                    }
                }
            }
    }

    {
        CheckBlock& blk = report.block("split_containment");
        for (const Representation& x : corpus)
            for (const Representation& y : corpus) {
                ++blk.cases;
                DirectSum ds = direct_sum(x, y);
                ShortExactSequence split_seq(ds.in_first, ds.pr_second);
                if (!e.member(split_seq))
                    blk.fail("split sequence rejected",
                             Json{{"sub", to_json(x)}, {"quotient", to_json(y)}});
            }
    }

    {
        CheckBlock& blk = report.block("iso_invariance");
        std::mt19937_64 rng(seed);
        for (size_t c = 0; c < corpus.size(); ++c)
            for (const AdmissibleSubobject& sub : lattices[c].elements) {
                ShortExactSequence seq = sequence_of_monic(sub.inflation());
                bool base = e.member(seq);
                for (int round = 0; round < 2; ++round) {
                    ++blk.cases;
                    RepMorphism fa = detail::random_automorphism(seq.sub(), rng);
                    RepMorphism fb = detail::random_automorphism(seq.middle(), rng);
                    RepMorphism fc = detail::random_automorphism(seq.quotient(), rng);
                    ShortExactSequence conj(
                        compose(fb, compose(seq.inflation(), fa.inverse())),
                        compose(fc, compose(seq.deflation(), fb.inverse())));
                    if (e.member(conj) != base)
                        blk.fail("membership changed under isomorphic conjugation",
                                 Json{{"original_member", base},
                                      {"inflation", to_json(seq.inflation())},
                                      {"conjugated_inflation", to_json(conj.inflation())}});
                }
            }
    }

    {
        CheckBlock& blk = report.block("monic_epic_iso");
        for (const Representation& x : corpus)
            for (const Representation& y : corpus)
                for (const RepMorphism& f : hom_basis(x, y)) {
                    ++blk.cases;
                    if (is_admissible_monic(f, e) && is_admissible_epic(f, e) &&
                        !f.vertexwise_invertible())
                        blk.fail("admissible monic+epic that is not an isomorphism",
                                 detail::morphism_witness("morphism", f));
                }
    }

    return report;
}

/// Redundant-axiom sweep: over corpus-drawn composable pairs (i, j), whenever
/// j*i is an admissible monic, i must be one too.  i ranges over lattice
/// inflations and Hom-basis elements; j over Hom-basis elements out of i's
/// target.
inline AxiomReport obscure_axiom_sweep(const ExactStructure& e,
                                       const std::vector<Representation>& corpus,
                                       const Budgets& budgets = kDefaultBudgets) {
    AxiomReport report;
    CheckBlock& blk = report.block("obscure_axiom");

    std::vector<RepMorphism> candidates;  // i-candidates with corpus targets
    for (const Representation& x : corpus) {
        SubobjectLattice lat = enumerate_admissible_subobjects(x, e, budgets);
        for (const AdmissibleSubobject& sub : lat.elements) candidates.push_back(sub.inflation());
    }
    for (const Representation& x : corpus)
        for (const Representation& y : corpus)
            for (const RepMorphism& f : hom_basis(x, y)) candidates.push_back(f);

    for (const RepMorphism& i : candidates)
        for (const Representation& c : corpus)
            for (const RepMorphism& j : hom_basis(i.target(), c)) {
                ++blk.cases;
                if (!obscure_axiom_holds(i, j, e))
                    blk.fail("j*i admissible monic but i is not",
                             Json{{"i", to_json(i)}, {"j", to_json(j)}});
            }
    return report;
}

}  // namespace exactcat
