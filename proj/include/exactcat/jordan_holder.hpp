#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "exactcat/intersect_sum.hpp"
#include "exactcat/iso_theorems.hpp"
#include "exactcat/report_types.hpp"
#include "exactcat/schur.hpp"

namespace exactcat {

/// E-composition series of an object X: an increasing chain of admissible
/// subobjects 0 = X_0 < X_1 < ... < X_n = X together with the connecting
/// admissible monics and their E-simple cokernel factors.
struct CompositionSeries {
    Representation object;
    std::vector<AdmissibleSubobject> chain;  // n+1 entries, zero first, full last
    std::vector<RepMorphism> steps;          // steps[l]: chain[l].object -> chain[l+1].object
    std::vector<Representation> factors;     // factors[l] = coker(steps[l])

    int length() const { return static_cast<int>(steps.size()); }
};

/// Re-checks a series from scratch, independently of how it was built:
/// endpoints, triangles, properness, step admissibility, factor values and
/// factor simplicity.  Throws invalid_input with a description on violation.
inline void validate_composition_series(const CompositionSeries& s, const ExactStructure& e,
                                        const Budgets& budgets = kDefaultBudgets) {
    if (s.chain.empty()) throw invalid_input("series: empty chain");
    if (s.chain.size() != s.steps.size() + 1 || s.factors.size() != s.steps.size())
        throw invalid_input("series: chain/steps/factors sizes disagree");
    if (!s.chain.front().object().is_zero())
        throw invalid_input("series: chain does not start at the zero subobject");
    if (!s.chain.back().is_full()) throw invalid_input("series: chain does not end at the object");
    for (const AdmissibleSubobject& c : s.chain)
        if (c.parent() != s.object) throw invalid_input("series: chain element of wrong parent");
    for (size_t l = 0; l < s.steps.size(); ++l) {
        const RepMorphism& step = s.steps[l];
        if (step.source() != s.chain[l].object() || step.target() != s.chain[l + 1].object())
            throw invalid_input("series: step endpoints disagree with the chain");
        if (compose(s.chain[l + 1].inflation(), step) != s.chain[l].inflation())
            throw invalid_input("series: step triangle fails at index " + std::to_string(l));
        if (s.chain[l].object().total_dim() >= s.chain[l + 1].object().total_dim())
            throw invalid_input("series: step not proper at index " + std::to_string(l));
        if (!is_admissible_monic(step, e))
            throw invalid_input("series: step not an admissible monic at index " +
                                std::to_string(l));
        if (cokernel(step).object != s.factors[l])
            throw invalid_input("series: stored factor differs from coker(step) at index " +
                                std::to_string(l));
        if (!is_E_simple(s.factors[l], e, budgets))
            throw invalid_input("series: factor not E-simple at index " + std::to_string(l));
    }
}

namespace detail {

inline std::optional<AdmissibleSubobject> try_subobject(const RepMorphism& inflation,
                                                        const ExactStructure& e) {
    if (!is_admissible_monic(inflation, e)) return std::nullopt;
    return AdmissibleSubobject(inflation, e);
}

/// Series assembled from lattice element indices along a containment path.
inline CompositionSeries series_from_path(const SubobjectLattice& lat,
                                          const std::vector<int>& path) {
    CompositionSeries s{lat.parent, {}, {}, {}};
    for (int i : path) s.chain.push_back(lat.elements[i]);
    for (size_t l = 0; l + 1 < path.size(); ++l) {
        auto step = containment_monic(lat.elements[path[l]], lat.elements[path[l + 1]]);
        if (!step) throw internal_error("series_from_path: chain not nested");
        s.factors.push_back(cokernel(*step).object);
        s.steps.push_back(std::move(*step));
    }
    return s;
}

}  // namespace detail

/// Greedy top-down search: repeatedly take the first (in lattice order)
/// maximal proper admissible subobject with E-simple quotient, then recurse
/// into it.  Commit-greedy: if the recursion dead-ends the answer is nullopt,
/// no backtracking across other maximals.
inline std::optional<CompositionSeries> find_composition_series(
    const Representation& x, const ExactStructure& e, const Budgets& budgets = kDefaultBudgets) {
    if (x.is_zero()) {
        auto whole = detail::try_subobject(RepMorphism::identity(x), e);
        if (!whole) return std::nullopt;
        return CompositionSeries{x, {*whole}, {}, {}};
    }
    SubobjectLattice lat = enumerate_admissible_subobjects(x, e, budgets);
    if (lat.full_index < 0) return std::nullopt;

    for (int i = 0; i < static_cast<int>(lat.elements.size()); ++i) {
        const AdmissibleSubobject& m = lat.elements[i];
        if (!is_proper(m)) continue;
        bool maximal = true;
        for (int j = 0; j < static_cast<int>(lat.elements.size()) && maximal; ++j)
            if (j != i && is_proper(lat.elements[j]) && lat.elements[j].contains(m) &&
                !m.contains(lat.elements[j]))
                maximal = false;
        if (!maximal) continue;
        QuotientResult q = quotient(x, m);
        if (!is_E_simple(q.object, e, budgets)) continue;

        auto sub = find_composition_series(m.object(), e, budgets);
        if (!sub) return std::nullopt;

        CompositionSeries s{x, {}, {}, {}};
        for (const AdmissibleSubobject& c : sub->chain) {
            auto lifted = detail::try_subobject(compose(m.inflation(), c.inflation()), e);
            if (!lifted) return std::nullopt;
            s.chain.push_back(std::move(*lifted));
        }
        s.chain.push_back(lat.elements[lat.full_index]);
        s.steps = sub->steps;
        s.factors = sub->factors;
        auto top_step = containment_monic(s.chain[s.chain.size() - 2], s.chain.back());
        if (!top_step) return std::nullopt;
        s.factors.push_back(cokernel(*top_step).object);
        s.steps.push_back(std::move(*top_step));
        validate_composition_series(s, e, budgets);
        return s;
    }
    return std::nullopt;
}

/// Every composition series, as exhaustive DFS over the subobject lattice
/// (candidates in lattice order, so the output order is deterministic).
inline std::vector<CompositionSeries> all_composition_series(
    const Representation& x, const ExactStructure& e, const Budgets& budgets = kDefaultBudgets) {
    std::vector<CompositionSeries> out;
    if (x.is_zero()) {
        auto whole = detail::try_subobject(RepMorphism::identity(x), e);
        if (whole) out.push_back(CompositionSeries{x, {*whole}, {}, {}});
        return out;
    }
    SubobjectLattice lat = enumerate_admissible_subobjects(x, e, budgets);
    if (lat.zero_index < 0 || lat.full_index < 0) return out;

    std::vector<int> path{lat.zero_index};
    auto dfs = [&](auto&& self, int current) -> void {
        if (current == lat.full_index) {
            CompositionSeries s = detail::series_from_path(lat, path);
            validate_composition_series(s, e, budgets);
            out.push_back(std::move(s));
            return;
        }
        for (int j = 0; j < static_cast<int>(lat.elements.size()); ++j) {
            if (j == current || !lat.elements[j].contains(lat.elements[current])) continue;
            auto step = containment_monic(lat.elements[current], lat.elements[j]);
            if (!step || !is_admissible_monic(*step, e)) continue;
            if (!is_E_simple(cokernel(*step).object, e, budgets)) continue;
            path.push_back(j);
            self(self, j);
            path.pop_back();
        }
    };
    dfs(dfs, lat.zero_index);
    return out;
}

/// Multiset of composition factors up to isomorphism, with deterministic
/// class representatives (minimal under dims-then-entries order) and class
/// order.
struct FactorClass {
    Representation representative;
    int multiplicity = 0;
};

struct FactorMultiset {
    std::vector<FactorClass> classes;
};

namespace detail {

inline bool rep_key_less(const Representation& a, const Representation& b) {
    if (a.total_dim() != b.total_dim()) return a.total_dim() < b.total_dim();
    if (a.dims() != b.dims()) return a.dims() < b.dims();
    for (int arrow = 0; arrow < a.quiver().arrow_count(); ++arrow) {
        const Matrix &ma = a.arrow_map(arrow), &mb = b.arrow_map(arrow);
        for (int i = 0; i < ma.rows(); ++i)
            for (int j = 0; j < ma.cols(); ++j)
                if (ma.at(i, j) != mb.at(i, j)) return ma.at(i, j) < mb.at(i, j);
    }
    return false;
}

}  // namespace detail

inline FactorMultiset composition_factors(const CompositionSeries& s,
                                          const Budgets& budgets = kDefaultBudgets) {
    std::vector<std::vector<Representation>> groups;
    for (const Representation& f : s.factors) {
        bool placed = false;
        for (auto& g : groups)
            if (is_isomorphic(g.front(), f, budgets)) {
                g.push_back(f);
                placed = true;
                break;
            }
        if (!placed) groups.push_back({f});
    }
    FactorMultiset out;
    for (auto& g : groups) {
        Representation rep = g.front();
        for (const Representation& r : g)
            if (detail::rep_key_less(r, rep)) rep = r;
        out.classes.push_back(FactorClass{std::move(rep), static_cast<int>(g.size())});
    }
    std::sort(out.classes.begin(), out.classes.end(),
              [](const FactorClass& a, const FactorClass& b) {
                  return detail::rep_key_less(a.representative, b.representative);
              });
    return out;
}

inline bool factor_multisets_equal(const FactorMultiset& a, const FactorMultiset& b,
                                   const Budgets& budgets = kDefaultBudgets) {
    if (a.classes.size() != b.classes.size()) return false;
    std::vector<bool> used(b.classes.size(), false);
    for (const FactorClass& ca : a.classes) {
        bool matched = false;
        for (size_t j = 0; j < b.classes.size() && !matched; ++j) {
            if (used[j] || b.classes[j].multiplicity != ca.multiplicity) continue;
            if (is_isomorphic(ca.representative, b.classes[j].representative, budgets)) {
                used[j] = true;
                matched = true;
            }
        }
        if (!matched) return false;
    }
    return true;
}

/// One recursion level of the intersect-and-sum comparison: where the sum
/// chain jumped and the dimension profiles of the derived data.
struct RefinementLevel {
    int pivot = -1;
    std::vector<std::vector<int>> sum_dims;      // dims of (X'_l + M) for l = 0..n
    std::vector<std::vector<int>> derived_dims;  // dims of the derived chain of M
};

struct JHComparisonResult {
    bool ok = false;
    std::string failure;  // nonempty iff !ok
    Json failure_witness;
    bool supported = true;  // false when e was not AIS-verified by the caller
    bool equal_length = false;
    std::vector<int> sigma;                // factors1[l] ~ factors2[sigma[l]]
    std::vector<RepMorphism> factor_isos;  // witnesses factors1[l] -> factors2[sigma[l]]
    std::vector<RefinementLevel> trace;
};

namespace detail {

struct BaumslagFail {
    std::string message;
    Json witness;
};

/// Core recursion.  Invariants: s1, s2 are valid series of the same object.
/// Any certificate that the AIS theory promises but the data refuses is
/// reported as BaumslagFail (never internal_error): on non-AIS structures
/// those refusals are legitimate observations.
inline std::variant<JHComparisonResult, BaumslagFail> baumslag_recurse(
    const CompositionSeries& s1, const CompositionSeries& s2, const ExactStructure& e,
    const Budgets& budgets) {
    JHComparisonResult res;
    res.ok = true;
    int m = s1.length(), n = s2.length();

    if (m == 0 || n == 0) {
        if (m != n)
            return BaumslagFail{"length mismatch at the zero object",
                                Json{{"left_length", m}, {"right_length", n}}};
        res.equal_length = true;
        return res;
    }

    if (m == 1) {
        if (n != 1)
            return BaumslagFail{"object is E-simple on one side but refines on the other",
                                Json{{"left_length", m}, {"right_length", n}}};
        if (s1.factors[0] == s2.factors[0]) {
            res.factor_isos = {RepMorphism::identity(s1.factors[0])};
        } else {
            auto found = is_isomorphic(s1.factors[0], s2.factors[0], budgets);
            if (!found)
                return BaumslagFail{"base factors not isomorphic",
                                    Json{{"left", to_json(s1.factors[0])},
                                         {"right", to_json(s2.factors[0])}}};
            res.factor_isos = {std::move(*found)};
        }
        res.sigma = {0};
        res.equal_length = true;
        return res;
    }

    const AdmissibleSubobject& top = s1.chain[m - 1];  // M = X_{m-1}

    // Sums S_l = X'_l + M for l = 0..n, and their canonical images in X.
    std::vector<SumResult> sums;
    sums.reserve(n + 1);
    for (int l = 0; l <= n; ++l) sums.push_back(sum(top, s2.chain[l], e));
    std::vector<std::vector<Matrix>> images;
    images.reserve(n + 1);
    for (const SumResult& s : sums) images.push_back(sum_images(s));

    RefinementLevel level;
    for (const SumResult& s : sums) level.sum_dims.push_back(s.object.dims());

    std::vector<Matrix> full_images;
    for (int v = 0; v < s1.object.quiver().vertex_count(); ++v)
        full_images.push_back(Matrix::identity(s1.object.field(), s1.object.dim(v)));

    if (images.front() != top.canonical_images())
        return BaumslagFail{"sum chain does not start at M", Json{{"level", 0}}};
    if (images.back() != full_images)
        return BaumslagFail{"sum chain does not end at the whole object", Json{{"level", n}}};
    std::vector<int> jumps;
    for (int l = 0; l < n; ++l)
        if (images[l] != images[l + 1]) jumps.push_back(l);
    if (jumps.size() != 1) {
        Json dims = Json::array();
        for (const SumResult& s : sums) dims.push_back(s.object.dims());
        return BaumslagFail{"sum chain must jump exactly once (pivot)",
                            Json{{"jumps", jumps}, {"sum_dims", dims}}};
    }
    int k = jumps[0];
    level.pivot = k;

    // Per-level 3x3 grids; certificates pin each level to the Schur dichotomy.
    std::vector<ThreeByThreeGrid> grids;
    grids.reserve(n);
    for (int l = 0; l < n; ++l)
        grids.push_back(three_by_three_grid(top, s2.chain[l], s2.chain[l + 1], s2.steps[l], e));

    for (int l = 0; l < n; ++l) {
        if (l == k) {
            if (!grids[l].col1.object.is_zero())
                return BaumslagFail{"pivot level has a nonzero intersection factor",
                                    Json{{"level", l}, {"dims", grids[l].col1.object.dims()}}};
            if (!grids[l].beta.vertexwise_invertible())
                return BaumslagFail{"pivot level deflation is not an isomorphism",
                                    Json{{"level", l}, {"beta", to_json(grids[l].beta)}}};
        } else {
            if (!grids[l].col3.object.is_zero())
                return BaumslagFail{"non-pivot level has a nonzero sum factor",
                                    Json{{"level", l}, {"dims", grids[l].col3.object.dims()}}};
            if (!grids[l].alpha.vertexwise_invertible())
                return BaumslagFail{"non-pivot level inflation is not an isomorphism",
                                    Json{{"level", l}, {"alpha", to_json(grids[l].alpha)}}};
        }
    }

    // Derived series of M: chain indices 0..n skipping k+1 (A_k = A_{k+1} at
    // the pivot), steps r_l, with the two pivot-adjacent steps composed.
    std::vector<int> kept;
    for (int l = 0; l <= n; ++l)
        if (l != k + 1) kept.push_back(l);

    CompositionSeries derived{top.object(), {}, {}, {}};
    for (int idx : kept) {
        IntersectionResult inter = intersection(top, s2.chain[idx], e);
        auto sub = try_subobject(inter.to_first, e);
        if (!sub)
            return BaumslagFail{"derived chain element not an admissible subobject of M",
                                Json{{"chain_index", idx},
                                     {"dims", inter.object.dims()}}};
        derived.chain.push_back(std::move(*sub));
        level.derived_dims.push_back(inter.object.dims());
    }
    for (size_t t = 0; t + 1 < kept.size(); ++t) {
        RepMorphism step = kept[t + 1] == kept[t] + 1
                               ? grids[kept[t]].r
                               : compose(grids[k + 1].r, grids[k].r);
        if (compose(derived.chain[t + 1].inflation(), step) != derived.chain[t].inflation())
            return BaumslagFail{"derived step triangle fails",
                                Json{{"position", static_cast<int>(t)}}};
        if (!is_admissible_monic(step, e))
            return BaumslagFail{"derived step not an admissible monic",
                                Json{{"position", static_cast<int>(t)},
                                     {"step", to_json(step)}}};
        Representation factor = cokernel(step).object;
        if (!is_E_simple(factor, e, budgets))
            return BaumslagFail{"derived factor not E-simple",
                                Json{{"position", static_cast<int>(t)},
                                     {"dims", factor.dims()}}};
        derived.steps.push_back(std::move(step));
        derived.factors.push_back(std::move(factor));
    }

    // Truncation of s1 to a series of M.
    CompositionSeries trunc{top.object(), {}, {}, {}};
    for (int l = 0; l <= m - 1; ++l) {
        std::vector<Matrix> maps;
        for (int v = 0; v < top.object().quiver().vertex_count(); ++v) {
            auto mv = top.inflation().map(v).solve(s1.chain[l].inflation().map(v));
            if (!mv)
                return BaumslagFail{"series chain element not contained in M",
                                    Json{{"chain_index", l}}};
            maps.push_back(std::move(*mv));
        }
        RepMorphism infl(s1.chain[l].object(), top.object(), std::move(maps));
        auto sub = try_subobject(infl, e);
        if (!sub)
            return BaumslagFail{"truncated chain element not admissible over M",
                                Json{{"chain_index", l}}};
        trunc.chain.push_back(std::move(*sub));
    }
    trunc.steps.assign(s1.steps.begin(), s1.steps.end() - 1);
    trunc.factors.assign(s1.factors.begin(), s1.factors.end() - 1);

    auto sub_result = baumslag_recurse(trunc, derived, e, budgets);
    if (std::holds_alternative<BaumslagFail>(sub_result)) return sub_result;
    JHComparisonResult sub = std::get<JHComparisonResult>(std::move(sub_result));

    // sigma: recursion positions lift over the pivot; the top factor maps to k.
    res.sigma.assign(m, -1);
    res.factor_isos.reserve(m);
    for (int l = 0; l <= m - 2; ++l) {
        int j = sub.sigma[l];
        int lv = j < k ? j : j + 1;
        res.sigma[l] = lv;
        if (sub.factor_isos[l].target() != grids[lv].alpha.source())
            return BaumslagFail{"derived factor does not line up with its grid",
                                Json{{"position", l}, {"level", lv}}};
        RepMorphism bridge = compose(grids[lv].alpha, sub.factor_isos[l]);
        if (!bridge.vertexwise_invertible())
            return BaumslagFail{"composed factor witness not invertible",
                                Json{{"position", l}, {"level", lv}}};
        res.factor_isos.push_back(std::move(bridge));
    }

    // Top factor X/M against factors2[k]: go through the pivot grid.
    //   factors1[m-1] --phi^{-1}--> (X'_{k+1} + M)/M == coker(c_k) --beta^{-1}--> factors2[k]
    {
        CokernelResult qk = cokernel(sums[k].from_first);
        if (!qk.object.is_zero())
            return BaumslagFail{"pivot sum quotient by M is nonzero", Json{{"level", k}}};
        CokernelResult qk1 = cokernel(sums[k + 1].from_first);
        if (grids[k].col3.object != qk1.object)
            return BaumslagFail{"pivot grid right factor differs from the sum quotient",
                                Json{{"level", k}}};
        const RepMorphism& u = sums[k + 1].mediating;
        if (!u.vertexwise_invertible())
            return BaumslagFail{"mediating map of the jumped sum is not onto X",
                                Json{{"level", k + 1}}};
        RepMorphism top_infl = s1.chain.back().inflation();  // full: vertexwise invertible
        RepMorphism proj = cokernel(s1.steps[m - 1]).projection;
        if (cokernel(s1.steps[m - 1]).object != s1.factors[m - 1])
            return BaumslagFail{"stored top factor differs from coker(step)", Json{}};
        RepMorphism rhs = compose(proj, compose(top_infl.inverse(), u));
        std::vector<Matrix> phi_maps;
        for (int v = 0; v < qk1.object.quiver().vertex_count(); ++v) {
            auto mv = solve_left(qk1.projection.map(v), rhs.map(v));
            if (!mv)
                return BaumslagFail{"top-factor descent does not exist", Json{{"level", k}}};
            phi_maps.push_back(std::move(*mv));
        }
        RepMorphism phi(qk1.object, s1.factors[m - 1], std::move(phi_maps));
        if (compose(phi, qk1.projection) != rhs)
            return BaumslagFail{"top-factor descent square fails", Json{{"level", k}}};
        if (!phi.vertexwise_invertible())
            return BaumslagFail{"top-factor descent not invertible", Json{{"level", k}}};
        res.sigma[m - 1] = k;
        res.factor_isos.push_back(compose(grids[k].beta.inverse(), phi.inverse()));
    }

    res.trace.push_back(std::move(level));
    for (RefinementLevel& t : sub.trace) res.trace.push_back(std::move(t));
    res.equal_length = m == n;
    return res;
}

}  // namespace detail

/// Compare two composition series of the same object by the intersect-and-sum
/// refinement scheme.  On success: a bijection sigma and per-factor
/// isomorphism witnesses, plus a per-level trace (pivot positions and derived
/// dimension profiles).  ais_verified records whether the caller verified the
/// structure is AIS on the relevant corpus; when false the result is labeled
/// unsupported but the comparison still runs, and any certificate the theory
/// would guarantee may legitimately fail (reported as a structured failure,
/// not an exception).
inline JHComparisonResult baumslag_compare(const CompositionSeries& s1,
                                           const CompositionSeries& s2, const ExactStructure& e,
                                           bool ais_verified = true,
                                           const Budgets& budgets = kDefaultBudgets) {
    JHComparisonResult res;
    res.supported = ais_verified;
    if (s1.object != s2.object) {
        res.failure = "series of different objects";
        return res;
    }
    try {
        validate_composition_series(s1, e, budgets);
        validate_composition_series(s2, e, budgets);
    } catch (const invalid_input& err) {
        res.failure = std::string("invalid input series: ") + err.what();
        return res;
    }

    auto outcome = detail::baumslag_recurse(s1, s2, e, budgets);
    if (std::holds_alternative<detail::BaumslagFail>(outcome)) {
        detail::BaumslagFail f = std::get<detail::BaumslagFail>(std::move(outcome));
        res.failure = f.message;
        res.failure_witness = std::move(f.witness);
        return res;
    }
    JHComparisonResult got = std::get<JHComparisonResult>(std::move(outcome));
    got.supported = ais_verified;

    // Final independent verification of the certificate.
    std::vector<bool> hit(s2.length(), false);
    for (int l = 0; l < s1.length(); ++l) {
        int j = got.sigma[l];
        if (j < 0 || j >= s2.length() || hit[j]) {
            res.failure = "sigma is not a bijection";
            return res;
        }
        hit[j] = true;
        const RepMorphism& w = got.factor_isos[l];
        if (w.source() != s1.factors[l] || w.target() != s2.factors[j] ||
            !w.vertexwise_invertible()) {
            res.failure = "factor witness fails verification";
            res.failure_witness = Json{{"position", l}};
            return res;
        }
    }
    return got;
}

/// Jordan-Hoelder property over a corpus: every object's composition series
/// (all of them) agree in length and in factor multiset, pairwise.
inline AxiomReport jh_property_check(const ExactStructure& e,
                                     const std::vector<Representation>& corpus,
                                     const Budgets& budgets = kDefaultBudgets) {
    AxiomReport report;
    CheckBlock& exist = report.block("series_exist");
    CheckBlock& lengths = report.block("jh_lengths");
    CheckBlock& factors = report.block("jh_factors");
    for (const Representation& x : corpus) {
        ++exist.cases;
        std::vector<CompositionSeries> all = all_composition_series(x, e, budgets);
        if (all.empty()) {
            exist.fail("object admits no composition series", Json{{"object", to_json(x)}});
            continue;
        }
        std::vector<FactorMultiset> msets;
        msets.reserve(all.size());
        for (const CompositionSeries& s : all) msets.push_back(composition_factors(s, budgets));
        for (size_t i = 0; i < all.size(); ++i)
            for (size_t j = i + 1; j < all.size(); ++j) {
                ++lengths.cases;
                if (all[i].length() != all[j].length())
                    lengths.fail("two series of different length",
                                 Json{{"object", to_json(x)},
                                      {"left_length", all[i].length()},
                                      {"right_length", all[j].length()}});
                ++factors.cases;
                if (!factor_multisets_equal(msets[i], msets[j], budgets))
                    factors.fail("two series with different factor multisets",
                                 Json{{"object", to_json(x)}});
            }
    }
    return report;
}

}  // namespace exactcat
