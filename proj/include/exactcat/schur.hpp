#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exactcat/subobjects.hpp"

namespace exactcat {

/// What the E-Schur lemma pins down for one admissible morphism whose source
/// and/or target is E-simple.
enum class SchurConclusion {
    zero,            // f = 0: the lemma says nothing
    not_admissible,  // f has no admissible epi-mono factorization in E
    monic_forced,    // source E-simple: f must be (and is) an admissible monic
    epic_forced,     // target E-simple: f must be (and is) an admissible epic
    iso_forced,      // both E-simple: f must be (and is) an isomorphism
    no_constraint,   // nonzero admissible, but neither endpoint is E-simple
};

inline const char* to_string(SchurConclusion c) {
    switch (c) {
        case SchurConclusion::zero: return "zero";
        case SchurConclusion::not_admissible: return "not_admissible";
        case SchurConclusion::monic_forced: return "monic_forced";
        case SchurConclusion::epic_forced: return "epic_forced";
        case SchurConclusion::iso_forced: return "iso_forced";
        case SchurConclusion::no_constraint: return "no_constraint";
    }
    return "?";
}

struct SchurVerdict {
    RepMorphism morphism;
    SchurConclusion conclusion;
    std::optional<AdmissibleFactorization> factorization;
    bool source_simple = false;
    bool target_simple = false;
};

/// Apply the E-Schur lemma to f under e.  For a nonzero admissible f: if the
/// source is E-simple the epic half of the factorization must be invertible
/// (so f is an admissible monic); dually for the target; both simple forces
/// an isomorphism.  A conclusion inconsistent with the computed factorization
/// raises internal_error -- it would mean e is not actually exact.
inline SchurVerdict schur(const RepMorphism& f, const ExactStructure& e,
                          const Budgets& budgets = kDefaultBudgets) {
    SchurVerdict v{f, SchurConclusion::zero, std::nullopt, false, false};
    v.source_simple = is_E_simple(f.source(), e, budgets);
    v.target_simple = is_E_simple(f.target(), e, budgets);
    if (f.is_zero()) return v;

    v.factorization = admissible_factorization(f, e);
    if (!v.factorization) {
        v.conclusion = SchurConclusion::not_admissible;
        return v;
    }

    if (v.source_simple) {
        // The image is a nonzero admissible subobject of a simple source's
        // image-quotient chain: the epic half must be invertible.
        if (!v.factorization->epic.vertexwise_invertible())
            throw internal_error("schur: simple source but epic half not invertible under '" +
                                 e.name() + "'");
        if (!is_admissible_monic(f, e))
            throw internal_error("schur: simple source but f not an admissible monic");
    }
    if (v.target_simple) {
        if (!v.factorization->monic.vertexwise_invertible())
            throw internal_error("schur: simple target but monic half not invertible under '" +
                                 e.name() + "'");
        if (!is_admissible_epic(f, e))
            throw internal_error("schur: simple target but f not an admissible epic");
    }

    if (v.source_simple && v.target_simple) {
        if (!f.vertexwise_invertible())
            throw internal_error("schur: simple endpoints but f not invertible");
        v.conclusion = SchurConclusion::iso_forced;
    } else if (v.source_simple) {
        v.conclusion = SchurConclusion::monic_forced;
    } else if (v.target_simple) {
        v.conclusion = SchurConclusion::epic_forced;
    } else {
        v.conclusion = SchurConclusion::no_constraint;
    }
    return v;
}

/// Corollary check: the nonzero admissible endomorphisms of an E-simple
/// object are all isomorphisms and form a group under composition (identity
/// present, closed, inverses inside).  Enumerates the full endomorphism
/// coefficient cube; throws budget_exceeded past budgets.iso_search.
inline bool aut_group_check(const Representation& s, const ExactStructure& e,
                            const Budgets& budgets = kDefaultBudgets) {
    if (!is_E_simple(s, e, budgets))
        throw invalid_input("aut_group_check: object is not E-simple");
    std::vector<RepMorphism> basis = hom_basis(s, s);
    int p = s.field().order();
    long double combos = 1;
    for (size_t i = 0; i < basis.size(); ++i) {
        combos *= p;
        if (combos > static_cast<long double>(budgets.iso_search))
            throw budget_exceeded("aut_group_check: endomorphism cube too large");
    }

    std::vector<RepMorphism> autos;
    std::vector<int> coeff(basis.size(), 0);
    while (true) {
        size_t i = 0;
        while (i < coeff.size() && ++coeff[i] == p) coeff[i++] = 0;
        if (i == coeff.size()) break;
        std::vector<Matrix> maps;
        for (int v = 0; v < s.quiver().vertex_count(); ++v) {
            Matrix m(s.field(), s.dim(v), s.dim(v));
            for (size_t b = 0; b < basis.size(); ++b)
                if (coeff[b] != 0) m = m + basis[b].map(v).scale(coeff[b]);
            maps.push_back(std::move(m));
        }
        RepMorphism f(s, s, std::move(maps));
        if (f.is_zero()) continue;
        if (!admissible_factorization(f, e)) continue;
        // Schur corollary: every nonzero admissible endomorphism is invertible.
        if (!f.vertexwise_invertible()) return false;
        autos.push_back(std::move(f));
    }

    auto member = [&autos](const RepMorphism& g) {
        for (const RepMorphism& a : autos)
            if (a == g) return true;
        return false;
    };
    if (!member(RepMorphism::identity(s))) return false;
    for (const RepMorphism& a : autos) {
        if (!member(a.inverse())) return false;
        for (const RepMorphism& b : autos)
            if (!member(compose(a, b))) return false;
    }
    return true;
}

}  // namespace exactcat
