#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "exactcat/axiom_check.hpp"
#include "exactcat/intersect_sum.hpp"
#include "exactcat/iso_theorems.hpp"
#include "exactcat/jordan_holder.hpp"
#include "exactcat/schur.hpp"
#include "exactcat/workspace.hpp"

namespace exactcat {

/// Outcome of one CLI command: the (deterministic) JSON report and the
/// process exit code.  0 = everything verified, 1 = a checked property
/// failed; input/budget problems are thrown and become exit code 2.
struct CommandResult {
    Json report;
    int exit_code = 0;
};

namespace detail {

inline Json report_envelope(const Workspace& ws, const std::string& command,
                            const std::string& structure_name, std::uint64_t seed) {
    return Json{{"tool", "exactcat"},     {"report_format", 1},
                {"command", command},     {"workspace", ws.path},
                {"workspace_digest", ws.digest},
                {"field", ws.field.order()},
                {"quiver", to_json(ws.quiver)},
                {"structure", structure_name},
                {"seed", seed}};
}

/// Deterministic stand-in for wall-clock timings: logical case counts per
/// check block.  Real elapsed time goes to stderr so reports stay
/// byte-identical across runs.
inline Json timings_json(const AxiomReport& report) {
    Json blocks = Json::object();
    for (const CheckBlock& b : report.blocks) blocks[b.name] = b.cases;
    return Json{{"unit", "cases_examined"},
                {"blocks", std::move(blocks)},
                {"total", report.total_cases()}};
}

inline bool block_passed(const AxiomReport& report, const std::string& name) {
    for (const CheckBlock& b : report.blocks)
        if (b.name == name) return b.passed;
    return false;
}

}  // namespace detail

/// check-axioms: the exact-structure axioms plus the redundant ("obscure")
/// axiom, swept over the workspace corpus.
inline CommandResult cmd_check_axioms(const Workspace& ws, const std::string& structure_name,
                                      std::uint64_t seed) {
    ExactStructure e = ws.structure(structure_name);
    std::vector<Representation> corpus = ws.corpus();
    AxiomReport report = check_axioms(e, corpus, ws.budgets, seed);
    report.merge(obscure_axiom_sweep(e, corpus, ws.budgets));

    Json out = detail::report_envelope(ws, "check-axioms", structure_name, seed);
    out["checks"] = report.to_json();
    out["all_passed"] = report.all_passed();
    out["timings"] = detail::timings_json(report);
    return {std::move(out), report.all_passed() ? 0 : 1};
}

/// classify: axioms plus the AI / AS / AIS properties; the classification
/// string summarizes which hold over the corpus.  Always exits 0 — the
/// classification itself is the answer.
inline CommandResult cmd_classify(const Workspace& ws, const std::string& structure_name,
                                  std::uint64_t seed) {
    ExactStructure e = ws.structure(structure_name);
    std::vector<Representation> corpus = ws.corpus();
    AxiomReport axioms = check_axioms(e, corpus, ws.budgets, seed);
    axioms.merge(obscure_axiom_sweep(e, corpus, ws.budgets));
    AxiomReport ais = check_AIS(e, corpus, ws.budgets);

    const bool exact = axioms.all_passed();
    const bool has_ai = detail::block_passed(ais, "AI");
    const bool has_as = detail::block_passed(ais, "AS");
    const bool has_ais = ais.all_passed();
    std::string classification = !exact     ? "not_exact"
                                 : has_ais  ? "exact_AIS"
                                 : has_ai   ? "exact_AI"
                                 : has_as   ? "exact_AS"
                                            : "exact_plain";

    Json out = detail::report_envelope(ws, "classify", structure_name, seed);
    out["axioms"] = axioms.to_json();
    out["ai_as_checks"] = ais.to_json();
    out["verdicts"] = Json{{"exact", exact},
                           {"AI", has_ai},
                           {"AS", has_as},
                           {"AIS", has_ais},
                           {"classification", classification}};
    AxiomReport merged;
    merged.merge(std::move(axioms));
    merged.merge(std::move(ais));
    out["timings"] = detail::timings_json(merged);
    return {std::move(out), 0};
}

/// simples: which corpus objects are E-simple, the Schur dichotomy over every
/// morphism between E-simples, and the automorphism-group corollary.
inline CommandResult cmd_simples(const Workspace& ws, const std::string& structure_name,
                                 std::uint64_t seed) {
    ExactStructure e = ws.structure(structure_name);
    AxiomReport tally_report;
    CheckBlock& schur_blk = tally_report.block("schur_sweep");
    CheckBlock& aut_blk = tally_report.block("aut_group");

    Json objects = Json::array();
    std::vector<std::pair<std::string, Representation>> simples;
    for (const std::string& name : ws.corpus_names) {
        const Representation& x = ws.rep(name);
        SubobjectLattice lat = enumerate_admissible_subobjects(x, e, ws.budgets);
        bool simple = !x.is_zero() && lat.elements.size() == 2;
        objects.push_back(Json{{"object", name},
                               {"dims", x.dims()},
                               {"lattice_size", lat.elements.size()},
                               {"is_E_simple", simple}});
        if (simple) simples.emplace_back(name, x);
    }

    Json conclusion_tally = Json::object();
    for (const char* c : {"zero", "not_admissible", "monic_forced", "epic_forced", "iso_forced",
                          "no_constraint"})
        conclusion_tally[c] = 0;
    Json pairs = Json::array();
    for (const auto& [sname, s] : simples)
        for (const auto& [tname, t] : simples) {
            std::vector<RepMorphism> basis = hom_basis(s, t);
            const int p = ws.field.order();
            long double combos = 1;
            for (size_t i = 0; i < basis.size(); ++i) {
                combos *= p;
                if (combos > static_cast<long double>(ws.budgets.iso_search))
                    throw budget_exceeded("simples: Hom cube too large for the Schur sweep");
            }
            Json local = Json::object();
            std::vector<int> coeff(basis.size(), 0);
            bool more = true;
            while (more) {
                std::vector<Matrix> maps;
                for (int v = 0; v < s.quiver().vertex_count(); ++v) {
                    Matrix m(ws.field, t.dim(v), s.dim(v));
                    for (size_t b = 0; b < basis.size(); ++b)
                        if (coeff[b] != 0) m = m + basis[b].map(v).scale(coeff[b]);
                    maps.push_back(std::move(m));
                }
                ++schur_blk.cases;
                // schur() raises internal_error if the forced conclusion fails,
                // so a completed sweep is itself the verification.
                SchurVerdict v = schur(RepMorphism(s, t, std::move(maps)), e, ws.budgets);
                const char* key = to_string(v.conclusion);
                conclusion_tally[key] = conclusion_tally[key].get<int>() + 1;
                local[key] = (local.contains(key) ? local[key].get<int>() : 0) + 1;

                size_t i = 0;
                while (i < coeff.size() && ++coeff[i] == p) coeff[i++] = 0;
                more = i < coeff.size();
            }
            pairs.push_back(Json{{"source", sname}, {"target", tname},
                                 {"hom_dim", basis.size()}, {"conclusions", local}});
        }

    Json aut = Json::array();
    for (const auto& [name, s] : simples) {
        ++aut_blk.cases;
        bool ok = aut_group_check(s, e, ws.budgets);
        if (!ok)
            aut_blk.fail("nonzero admissible endomorphisms do not form a group",
                         Json{{"object", name}});
        aut.push_back(Json{{"object", name}, {"group_laws_hold", ok}});
    }

    Json out = detail::report_envelope(ws, "simples", structure_name, seed);
    out["objects"] = std::move(objects);
    out["schur"] = Json{{"pairs", std::move(pairs)}, {"conclusions", std::move(conclusion_tally)}};
    out["aut_groups"] = std::move(aut);
    out["all_passed"] = tally_report.all_passed();
    out["timings"] = detail::timings_json(tally_report);
    return {std::move(out), tally_report.all_passed() ? 0 : 1};
}

namespace detail {

inline Json series_json(const CompositionSeries& s) {
    Json chain = Json::array();
    for (const AdmissibleSubobject& c : s.chain) chain.push_back(c.object().dims());
    Json factors = Json::array();
    for (const Representation& f : s.factors) factors.push_back(f.dims());
    return Json{{"length", s.length()}, {"chain_dims", std::move(chain)},
                {"factor_dims", std::move(factors)}};
}

}  // namespace detail

/// series: greedy and exhaustive composition-series search, plus the factor
/// multiset of the first series found.  Informational; exits 0.
inline CommandResult cmd_series(const Workspace& ws, const std::string& structure_name,
                                const std::string& object_name, std::uint64_t seed) {
    ExactStructure e = ws.structure(structure_name);
    std::vector<std::string> names;
    if (object_name.empty())
        names = ws.corpus_names;
    else
        names.push_back(object_name);

    Json objects = Json::array();
    for (const std::string& name : names) {
        const Representation& x = ws.rep(name);
        Json entry{{"object", name}, {"dims", x.dims()}};

        auto greedy = find_composition_series(x, e, ws.budgets);
        entry["greedy"] = greedy ? detail::series_json(*greedy) : Json(nullptr);

        std::vector<CompositionSeries> all = all_composition_series(x, e, ws.budgets);
        Json listed = Json::array();
        for (const CompositionSeries& s : all) listed.push_back(detail::series_json(s));
        entry["all"] = Json{{"count", all.size()}, {"series", std::move(listed)}};

        if (!all.empty()) {
            FactorMultiset ms = composition_factors(all.front(), ws.budgets);
            Json classes = Json::array();
            for (const FactorClass& c : ms.classes)
                classes.push_back(Json{{"representative", to_json(c.representative)},
                                       {"multiplicity", c.multiplicity}});
            entry["factors"] = std::move(classes);
        } else {
            entry["factors"] = Json(nullptr);
        }
        objects.push_back(std::move(entry));
    }

    Json out = detail::report_envelope(ws, "series", structure_name, seed);
    out["objects"] = std::move(objects);
    return {std::move(out), 0};
}

/// jh: the Jordan-Hoelder property over the corpus (all series per object
/// agree in length and factor multiset) plus the intersect-and-sum refinement
/// comparison on every ordered pair of series.  On an AIS-verified structure
/// a comparison failure is a property failure; otherwise it is recorded as an
/// observation on an unsupported structure.
inline CommandResult cmd_jh(const Workspace& ws, const std::string& structure_name,
                            std::uint64_t seed) {
    ExactStructure e = ws.structure(structure_name);
    std::vector<Representation> corpus = ws.corpus();

    const bool ais_verified = check_AIS(e, corpus, ws.budgets).all_passed();
    AxiomReport report = jh_property_check(e, corpus, ws.budgets);
    CheckBlock& cmp_blk = report.block("baumslag_comparison");
    CheckBlock& agree_blk = report.block("baumslag_agreement");

    Json comparisons = Json::array();
    for (size_t ci = 0; ci < corpus.size(); ++ci) {
        const Representation& x = corpus[ci];
        std::vector<CompositionSeries> all = all_composition_series(x, e, ws.budgets);
        std::vector<FactorMultiset> msets;
        msets.reserve(all.size());
        for (const CompositionSeries& s : all) msets.push_back(composition_factors(s, ws.budgets));
        for (size_t i = 0; i < all.size(); ++i)
            for (size_t j = 0; j < all.size(); ++j) {
                ++cmp_blk.cases;
                JHComparisonResult cmp =
                    baumslag_compare(all[i], all[j], e, ais_verified, ws.budgets);
                Json entry{{"object", ws.corpus_names[ci]},
                           {"left", i},
                           {"right", j},
                           {"ok", cmp.ok},
                           {"supported", cmp.supported},
                           {"equal_length", cmp.equal_length}};
                if (cmp.ok) {
                    entry["sigma"] = cmp.sigma;
                    Json pivots = Json::array();
                    for (const RefinementLevel& lvl : cmp.trace) pivots.push_back(lvl.pivot);
                    entry["pivots"] = std::move(pivots);
                } else {
                    entry["failure"] = cmp.failure;
                    entry["failure_witness"] = cmp.failure_witness;
                    if (cmp.supported)
                        cmp_blk.fail("refinement comparison failed on an AIS-verified structure",
                                     Json{{"object", ws.corpus_names[ci]},
                                          {"left", i}, {"right", j},
                                          {"failure", cmp.failure}});
                }
                ++agree_blk.cases;
                bool multiset_equal = factor_multisets_equal(msets[i], msets[j], ws.budgets);
                bool lengths_equal = all[i].length() == all[j].length();
                if (cmp.ok && !(multiset_equal && lengths_equal))
                    agree_blk.fail(
                        "comparison succeeded but multiset comparison disagrees",
                        Json{{"object", ws.corpus_names[ci]}, {"left", i}, {"right", j}});
                comparisons.push_back(std::move(entry));
            }
    }

    Json out = detail::report_envelope(ws, "jh", structure_name, seed);
    out["ais_verified"] = ais_verified;
    out["checks"] = report.to_json();
    out["comparisons"] = std::move(comparisons);
    out["all_passed"] = report.all_passed();
    out["timings"] = detail::timings_json(report);
    return {std::move(out), report.all_passed() ? 0 : 1};
}

/// iso-theorems: the second/third isomorphism sequences and the 3x3 bottom
/// row, swept over lattice pairs/triples of every corpus object.  Sequence
/// validity (kernel-cokernel shape) is unconditional; membership in E is a
/// failure only when the structure verified AIS.
inline CommandResult cmd_iso_theorems(const Workspace& ws, const std::string& structure_name,
                                      std::uint64_t seed) {
    ExactStructure e = ws.structure(structure_name);
    std::vector<Representation> corpus = ws.corpus();
    const bool ais_verified = check_AIS(e, corpus, ws.budgets).all_passed();

    AxiomReport report;
    CheckBlock& second = report.block("second_iso");
    CheckBlock& second_iso_obj = report.block("second_iso_isomorphism");
    CheckBlock& third = report.block("third_iso");
    CheckBlock& grid = report.block("three_by_three");
    std::int64_t members_seen = 0, sequences_seen = 0;

    for (size_t ci = 0; ci < corpus.size(); ++ci) {
        const Representation& x = corpus[ci];
        SubobjectLattice lat = enumerate_admissible_subobjects(x, e, ws.budgets);
        const auto& els = lat.elements;

        for (size_t a = 0; a < els.size(); ++a)
            for (size_t b = 0; b < els.size(); ++b) {
                ++second.cases;
                VerifiedSequence vs = second_iso_sequence(els[a], els[b], e);
                ++sequences_seen;
                members_seen += vs.member ? 1 : 0;
                if (!vs.member && ais_verified)
                    second.fail("second-isomorphism sequence not admissible",
                                detail::pair_witness(els[a], els[b]));
                ++second_iso_obj.cases;
                if (!second_iso_isomorphism_check(els[a], els[b], e, ws.budgets))
                    second_iso_obj.fail("y/(y cap x) and (y+x)/x are not isomorphic",
                                        detail::pair_witness(els[a], els[b]));
            }

        for (const auto& [i, j] : lat.containments) {
            auto inc = containment_monic(els[i], els[j]);
            if (!inc || !is_admissible_monic(*inc, e)) continue;
            for (size_t a = 0; a < els.size(); ++a) {
                ++third.cases;
                VerifiedSequence vt = third_iso_sequence(els[a], els[i], els[j], *inc, e);
                ++sequences_seen;
                members_seen += vt.member ? 1 : 0;
                if (!vt.member && ais_verified)
                    third.fail("third-isomorphism sequence not admissible",
                               Json{{"object", ws.corpus_names[ci]},
                                    {"x_dims", els[a].object().dims()},
                                    {"y1_dims", els[i].object().dims()},
                                    {"y2_dims", els[j].object().dims()}});
                ++grid.cases;
                VerifiedSequence vg = three_by_three_sequence(els[a], els[i], els[j], *inc, e);
                ++sequences_seen;
                members_seen += vg.member ? 1 : 0;
                if (!vg.member && ais_verified)
                    grid.fail("3x3 bottom-row sequence not admissible",
                              Json{{"object", ws.corpus_names[ci]},
                                   {"x_dims", els[a].object().dims()},
                                   {"y1_dims", els[i].object().dims()},
                                   {"y2_dims", els[j].object().dims()}});
            }
        }
    }

    Json out = detail::report_envelope(ws, "iso-theorems", structure_name, seed);
    out["ais_verified"] = ais_verified;
    out["checks"] = report.to_json();
    out["sequences_built"] = sequences_seen;
    out["sequences_admissible"] = members_seen;
    out["all_passed"] = report.all_passed();
    out["timings"] = detail::timings_json(report);
    return {std::move(out), report.all_passed() ? 0 : 1};
}

}  // namespace exactcat
