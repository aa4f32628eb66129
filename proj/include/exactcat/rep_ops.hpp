#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "exactcat/config.hpp"
#include "exactcat/morphism.hpp"

namespace exactcat {

/// Basis of Hom(x, y) as a list of morphisms, in the deterministic order
/// induced by the canonical kernel basis of the intertwining constraint
/// system (unknowns: vertex-map entries, row-major, vertices ascending).
inline std::vector<RepMorphism> hom_basis(const Representation& x, const Representation& y) {
    if (!x.same_ambient(y)) throw invalid_input("hom_basis: different ambients");
    const Quiver& q = x.quiver();
    const PrimeField& f = x.field();

    std::vector<int> offset(q.vertex_count() + 1, 0);
    for (int v = 0; v < q.vertex_count(); ++v)
        offset[v + 1] = offset[v] + y.dim(v) * x.dim(v);
    int unknowns = offset[q.vertex_count()];

    int rows = 0;
    for (int a = 0; a < q.arrow_count(); ++a)
        rows += y.dim(q.target(a)) * x.dim(q.source(a));

    Matrix constraints(f, rows, unknowns);
    int r = 0;
    for (int a = 0; a < q.arrow_count(); ++a) {
        int s = q.source(a), t = q.target(a);
        const Matrix& xa = x.arrow_map(a);
        const Matrix& ya = y.arrow_map(a);
        // T_t * X_a - Y_a * T_s = 0, entry (i, j) for each i < y.dim(t), j < x.dim(s)
        for (int i = 0; i < y.dim(t); ++i)
            for (int j = 0; j < x.dim(s); ++j) {
                for (int k = 0; k < x.dim(t); ++k)
                    constraints.set(r, offset[t] + i * x.dim(t) + k, xa.at(k, j));
                for (int k = 0; k < y.dim(s); ++k)
                    constraints.set(r, offset[s] + k * x.dim(s) + j,
                                    f.sub(constraints.at(r, offset[s] + k * x.dim(s) + j),
                                          ya.at(i, k)));
                ++r;
            }
    }

    Matrix basis = constraints.kernel_basis();
    std::vector<RepMorphism> result;
    result.reserve(basis.cols());
    for (int c = 0; c < basis.cols(); ++c) {
        std::vector<Matrix> maps;
        maps.reserve(q.vertex_count());
        for (int v = 0; v < q.vertex_count(); ++v) {
            Matrix m(f, y.dim(v), x.dim(v));
            for (int i = 0; i < y.dim(v); ++i)
                for (int j = 0; j < x.dim(v); ++j)
                    m.set(i, j, basis.at(offset[v] + i * x.dim(v) + j, c));
            maps.push_back(std::move(m));
        }
        result.emplace_back(x, y, std::move(maps));
    }
    return result;
}

struct KernelResult {
    Representation object;
    RepMorphism inclusion;  // object -> source(f)
};

struct CokernelResult {
    Representation object;
    RepMorphism projection;  // target(f) -> object
};

struct ImageFactorization {
    Representation image;
    RepMorphism epic;   // source(f) ->> image
    RepMorphism monic;  // image >-> target(f)
};

namespace detail {

// Induced arrow maps on a vertexwise-chosen sub/quotient basis must exist by
// construction; a failed solve here is a library bug.
inline Matrix must_solve(const Matrix& a, const Matrix& b, const char* where) {
    auto x = a.solve(b);
    if (!x) throw internal_error(std::string(where) + ": induced map does not exist");
    return *x;
}

inline Matrix must_solve_left(const Matrix& a, const Matrix& b, const char* where) {
    auto x = solve_left(a, b);
    if (!x) throw internal_error(std::string(where) + ": induced map does not exist");
    return *x;
}

}  // namespace detail

/// Vertexwise kernel with induced arrow maps and the canonical inclusion.
inline KernelResult kernel(const RepMorphism& f) {
    const Representation& x = f.source();
    const Quiver& q = x.quiver();
    std::vector<Matrix> bases;
    std::vector<int> dims;
    for (int v = 0; v < q.vertex_count(); ++v) {
        bases.push_back(f.map(v).kernel_basis());
        dims.push_back(bases.back().cols());
    }
    std::vector<Matrix> arrows;
    for (int a = 0; a < q.arrow_count(); ++a)
        // K_t * k_a = X_a * K_s (the arrow map restricts to kernels).
        arrows.push_back(detail::must_solve(bases[q.target(a)],
                                            x.arrow_map(a) * bases[q.source(a)], "kernel"));
    Representation obj(q, x.field(), std::move(dims), std::move(arrows), x.total_dim());
    RepMorphism incl(obj, x, std::move(bases));
    return {std::move(obj), std::move(incl)};
}

/// Vertexwise cokernel with induced arrow maps and the canonical projection.
/// The projection matrices depend only on the column spaces of f's maps.
inline CokernelResult cokernel(const RepMorphism& f) {
    const Representation& y = f.target();
    const Quiver& q = y.quiver();
    std::vector<Matrix> projs;
    std::vector<int> dims;
    for (int v = 0; v < q.vertex_count(); ++v) {
        projs.push_back(f.map(v).cokernel_projection());
        dims.push_back(projs.back().rows());
    }
    std::vector<Matrix> arrows;
    for (int a = 0; a < q.arrow_count(); ++a)
        // q_a * Q_s = Q_t * Y_a (the arrow map descends to quotients).
        arrows.push_back(detail::must_solve_left(projs[q.source(a)],
                                                 projs[q.target(a)] * y.arrow_map(a),
                                                 "cokernel"));
    Representation obj(q, y.field(), std::move(dims), std::move(arrows), y.total_dim());
    RepMorphism proj(y, obj, std::move(projs));
    return {std::move(obj), std::move(proj)};
}

/// Epi-mono factorization through the canonical image bases.
inline ImageFactorization image_factorization(const RepMorphism& f) {
    const Representation& y = f.target();
    const Quiver& q = y.quiver();
    std::vector<Matrix> bases;
    std::vector<int> dims;
    for (int v = 0; v < q.vertex_count(); ++v) {
        bases.push_back(f.map(v).column_space_basis());
        dims.push_back(bases.back().cols());
    }
    std::vector<Matrix> arrows, epic_maps;
    for (int a = 0; a < q.arrow_count(); ++a)
        arrows.push_back(detail::must_solve(bases[q.target(a)],
                                            y.arrow_map(a) * bases[q.source(a)], "image"));
    for (int v = 0; v < q.vertex_count(); ++v)
        epic_maps.push_back(detail::must_solve(bases[v], f.map(v), "image epic"));
    Representation img(q, y.field(), std::move(dims), std::move(arrows), y.total_dim());
    RepMorphism e(f.source(), img, std::move(epic_maps));
    RepMorphism m(img, y, std::move(bases));
    if (compose(m, e) != f) throw internal_error("image_factorization: m*e != f");
    return {std::move(img), std::move(e), std::move(m)};
}

struct DirectSum {
    Representation object;
    RepMorphism in_first, in_second;  // coordinate inclusions
    RepMorphism pr_first, pr_second;  // coordinate projections
};

inline DirectSum direct_sum(const Representation& x, const Representation& y) {
    if (!x.same_ambient(y)) throw invalid_input("direct_sum: different ambients");
    const Quiver& q = x.quiver();
    const PrimeField& f = x.field();
    std::vector<int> dims;
    for (int v = 0; v < q.vertex_count(); ++v) dims.push_back(x.dim(v) + y.dim(v));
    std::vector<Matrix> arrows;
    for (int a = 0; a < q.arrow_count(); ++a) {
        int s = q.source(a), t = q.target(a);
        Matrix block(f, dims[t], dims[s]);
        const Matrix& xa = x.arrow_map(a);
        const Matrix& ya = y.arrow_map(a);
        for (int i = 0; i < xa.rows(); ++i)
            for (int j = 0; j < xa.cols(); ++j) block.set(i, j, xa.at(i, j));
        for (int i = 0; i < ya.rows(); ++i)
            for (int j = 0; j < ya.cols(); ++j)
                block.set(x.dim(t) + i, x.dim(s) + j, ya.at(i, j));
        arrows.push_back(std::move(block));
    }
    Representation obj(q, f, dims, std::move(arrows), x.total_dim() + y.total_dim());

    std::vector<Matrix> i1, i2, p1, p2;
    for (int v = 0; v < q.vertex_count(); ++v) {
        Matrix a(f, dims[v], x.dim(v)), b(f, dims[v], y.dim(v));
        Matrix c(f, x.dim(v), dims[v]), d(f, y.dim(v), dims[v]);
        for (int i = 0; i < x.dim(v); ++i) a.set(i, i, 1), c.set(i, i, 1);
        for (int i = 0; i < y.dim(v); ++i) b.set(x.dim(v) + i, i, 1), d.set(i, x.dim(v) + i, 1);
        i1.push_back(std::move(a));
        i2.push_back(std::move(b));
        p1.push_back(std::move(c));
        p2.push_back(std::move(d));
    }
    return {obj, RepMorphism(x, obj, std::move(i1)), RepMorphism(y, obj, std::move(i2)),
            RepMorphism(obj, x, std::move(p1)), RepMorphism(obj, y, std::move(p2))};
}

struct Pullback {
    Representation object;
    RepMorphism to_first;    // object -> source(g)
    RepMorphism to_second;   // object -> source(j)
    RepMorphism difference;  // B (+) C -> D, the map whose kernel this is
    RepMorphism kernel_inclusion;  // object >-> B (+) C
    DirectSum sum;                 // B (+) C with its legs
};

/// Pullback of g: B -> D along j: C -> D, realized as Ker[g -j] inside B (+) C.
inline Pullback pullback(const RepMorphism& g, const RepMorphism& j) {
    if (g.target() != j.target()) throw invalid_input("pullback: targets disagree");
    DirectSum s = direct_sum(g.source(), j.source());
    RepMorphism diff = compose(g, s.pr_first) - compose(j, s.pr_second);
    KernelResult k = kernel(diff);
    RepMorphism to_first = compose(s.pr_first, k.inclusion);
    RepMorphism to_second = compose(s.pr_second, k.inclusion);
    return {k.object, std::move(to_first), std::move(to_second), std::move(diff),
            k.inclusion, std::move(s)};
}

/// Mediating map into a pullback: the unique u with to_first * u = v1 and
/// to_second * u = v2.  Requires g * v1 == j * v2.
inline RepMorphism pullback_universal(const Pullback& pb, const RepMorphism& v1,
                                      const RepMorphism& v2) {
    if (v1.source() != v2.source()) throw invalid_input("pullback_universal: sources disagree");
    if (v1.target() != pb.to_first.target() || v2.target() != pb.to_second.target())
        throw invalid_input("pullback_universal: legs do not match the pullback");
    RepMorphism w = compose(pb.sum.in_first, v1) + compose(pb.sum.in_second, v2);
    // w must land in the kernel: check the cone commutes.
    if (!compose(pb.difference, w).is_zero())
        throw invalid_input("pullback_universal: cone does not commute");
    std::vector<Matrix> maps;
    for (int v = 0; v < v1.source().quiver().vertex_count(); ++v)
        maps.push_back(detail::must_solve(pb.kernel_inclusion.map(v), w.map(v),
                                          "pullback_universal"));
    RepMorphism u(v1.source(), pb.object, std::move(maps));
    if (compose(pb.to_first, u) != v1 || compose(pb.to_second, u) != v2)
        throw internal_error("pullback_universal: mediating map fails its triangles");
    return u;
}

struct Pushout {
    Representation object;
    RepMorphism from_first;   // target(i) -> object
    RepMorphism from_second;  // target(h) -> object
    RepMorphism difference;   // A -> B (+) C, the map whose cokernel this is
    RepMorphism projection;   // B (+) C ->> object
    DirectSum sum;            // B (+) C with its legs
};

/// Pushout of i: A -> B along h: A -> C, realized as Coker[i; -h] of B (+) C.
inline Pushout pushout(const RepMorphism& i, const RepMorphism& h) {
    if (i.source() != h.source()) throw invalid_input("pushout: sources disagree");
    DirectSum s = direct_sum(i.target(), h.target());
    RepMorphism diff = compose(s.in_first, i) - compose(s.in_second, h);
    CokernelResult c = cokernel(diff);
    RepMorphism from_first = compose(c.projection, s.in_first);
    RepMorphism from_second = compose(c.projection, s.in_second);
    return {c.object, std::move(from_first), std::move(from_second), std::move(diff),
            c.projection, std::move(s)};
}

/// Mediating map out of a pushout: the unique u with u * from_first = g1 and
/// u * from_second = g2.  Requires g1 * i == g2 * h.
inline RepMorphism pushout_universal(const Pushout& po, const RepMorphism& g1,
                                     const RepMorphism& g2) {
    if (g1.target() != g2.target()) throw invalid_input("pushout_universal: targets disagree");
    if (g1.source() != po.from_first.source() || g2.source() != po.from_second.source())
        throw invalid_input("pushout_universal: legs do not match the pushout");
    RepMorphism w = compose(g1, po.sum.pr_first) + compose(g2, po.sum.pr_second);
    if (!compose(w, po.difference).is_zero())
        throw invalid_input("pushout_universal: cocone does not commute");
    std::vector<Matrix> maps;
    for (int v = 0; v < g1.target().quiver().vertex_count(); ++v)
        maps.push_back(detail::must_solve_left(po.projection.map(v), w.map(v),
                                               "pushout_universal"));
    RepMorphism u(po.object, g1.target(), std::move(maps));
    if (compose(u, po.from_first) != g1 || compose(u, po.from_second) != g2)
        throw internal_error("pushout_universal: mediating map fails its triangles");
    return u;
}

namespace detail {

inline std::optional<RepMorphism> combo_if_iso(const Representation& x, const Representation& y,
                                               const std::vector<RepMorphism>& basis,
                                               const std::vector<int>& coeff) {
    const Quiver& q = x.quiver();
    std::vector<Matrix> maps;
    maps.reserve(q.vertex_count());
    for (int v = 0; v < q.vertex_count(); ++v) {
        Matrix m(x.field(), y.dim(v), x.dim(v));
        for (size_t b = 0; b < basis.size(); ++b)
            if (coeff[b] != 0) m = m + basis[b].map(v).scale(coeff[b]);
        if (!m.is_invertible()) return std::nullopt;
        maps.push_back(std::move(m));
    }
    return RepMorphism(x, y, std::move(maps));
}

}  // namespace detail

/// Search for an isomorphism x -> y over the Hom-space coefficient cube.
/// Dimension vectors must match for any candidate to exist.  While
/// p^dim(Hom) <= budgets.iso_search the cube is exhausted in canonical
/// odometer order (a nullopt answer is a proof of non-isomorphism); past the
/// cutoff a seeded deterministic sample runs, and a fruitless sample raises
/// budget_exceeded because "not found" would be unproven.
inline std::optional<RepMorphism> is_isomorphic(const Representation& x, const Representation& y,
                                                const Budgets& budgets = kDefaultBudgets,
                                                std::uint64_t seed = 0) {
    if (!x.same_ambient(y)) throw invalid_input("is_isomorphic: different ambients");
    if (x.dims() != y.dims()) return std::nullopt;
    if (x.total_dim() == 0) return RepMorphism::zero(x, y);

    std::vector<RepMorphism> basis = hom_basis(x, y);
    if (basis.empty()) return std::nullopt;
    int p = x.field().order();
    int h = static_cast<int>(basis.size());

    long double combos = std::pow(static_cast<long double>(p), h);
    if (combos <= static_cast<long double>(budgets.iso_search)) {
        std::vector<int> coeff(h, 0);
        while (true) {
            // odometer increment; coefficient 0 moves fastest
            int i = 0;
            while (i < h && ++coeff[i] == p) coeff[i++] = 0;
            if (i == h) return std::nullopt;  // wrapped: cube exhausted
            if (auto iso = detail::combo_if_iso(x, y, basis, coeff)) return iso;
        }
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(0, p - 1);
    for (std::int64_t trial = 0; trial < budgets.iso_search; ++trial) {
        std::vector<int> coeff(h);
        bool nonzero = false;
        for (int& c : coeff) {
            c = dist(rng);
            nonzero = nonzero || c != 0;
        }
        if (!nonzero) continue;
        if (auto iso = detail::combo_if_iso(x, y, basis, coeff)) return iso;
    }
    throw budget_exceeded("is_isomorphic: Hom-space has " + std::to_string(h) +
                          " basis elements; exhaustive bound exceeded and sampling "
                          "found no isomorphism (result would be unproven)");
}

}  // namespace exactcat
