#pragma once

#include <string>
#include <utility>
#include <vector>

#include "exactcat/representation.hpp"

namespace exactcat {

/// Morphism of quiver representations: one matrix per vertex, checked at
/// construction to intertwine every arrow map
/// (maps[target(a)] * X_a == Y_a * maps[source(a)]).
class RepMorphism {
public:
    RepMorphism(Representation source, Representation target, std::vector<Matrix> maps)
        : source_(std::move(source)), target_(std::move(target)), maps_(std::move(maps)) {
        if (!source_.same_ambient(target_))
            throw invalid_input("RepMorphism: source/target live over different ambients");
        const Quiver& q = source_.quiver();
        if (static_cast<int>(maps_.size()) != q.vertex_count())
            throw invalid_input("RepMorphism: need one matrix per vertex");
        for (int v = 0; v < q.vertex_count(); ++v) {
            const Matrix& m = maps_[v];
            if (!(m.field() == source_.field()) || m.rows() != target_.dim(v) ||
                m.cols() != source_.dim(v))
                throw invalid_input("RepMorphism: vertex " + std::to_string(v) + " map is " +
                                    m.shape() + ", expected " + std::to_string(target_.dim(v)) +
                                    "x" + std::to_string(source_.dim(v)));
        }
        for (int a = 0; a < q.arrow_count(); ++a) {
            int s = q.source(a), t = q.target(a);
            if (maps_[t] * source_.arrow_map(a) != target_.arrow_map(a) * maps_[s])
                throw invalid_input("RepMorphism: fails to intertwine arrow " +
                                    std::to_string(a));
        }
    }

    static RepMorphism identity(const Representation& x) {
        std::vector<Matrix> maps;
        maps.reserve(x.quiver().vertex_count());
        for (int v = 0; v < x.quiver().vertex_count(); ++v)
            maps.push_back(Matrix::identity(x.field(), x.dim(v)));
        return RepMorphism(x, x, std::move(maps));
    }

    static RepMorphism zero(const Representation& source, const Representation& target) {
        std::vector<Matrix> maps;
        maps.reserve(source.quiver().vertex_count());
        for (int v = 0; v < source.quiver().vertex_count(); ++v)
            maps.emplace_back(source.field(), target.dim(v), source.dim(v));
        return RepMorphism(source, target, std::move(maps));
    }

    const Representation& source() const { return source_; }
    const Representation& target() const { return target_; }
    const Matrix& map(int v) const { return maps_[v]; }
    const std::vector<Matrix>& maps() const { return maps_; }

    bool is_zero() const {
        for (const Matrix& m : maps_)
            if (!m.is_zero()) return false;
        return true;
    }

    bool vertexwise_injective() const {
        for (const Matrix& m : maps_)
            if (m.rank() != m.cols()) return false;
        return true;
    }

    bool vertexwise_surjective() const {
        for (const Matrix& m : maps_)
            if (m.rank() != m.rows()) return false;
        return true;
    }

    bool vertexwise_invertible() const {
        for (const Matrix& m : maps_)
            if (!m.is_invertible()) return false;
        return true;
    }

    /// Inverse morphism; requires vertexwise invertibility.
    RepMorphism inverse() const {
        std::vector<Matrix> inv;
        inv.reserve(maps_.size());
        for (const Matrix& m : maps_) {
            auto mi = m.inverse();
            if (!mi) throw invalid_input("RepMorphism::inverse: not an isomorphism");
            inv.push_back(*mi);
        }
        return RepMorphism(target_, source_, std::move(inv));
    }

    bool operator==(const RepMorphism& o) const {
        return source_ == o.source_ && target_ == o.target_ && maps_ == o.maps_;
    }
    bool operator!=(const RepMorphism& o) const { return !(*this == o); }

private:
    Representation source_, target_;
    std::vector<Matrix> maps_;
};

/// g after f.
inline RepMorphism compose(const RepMorphism& g, const RepMorphism& f) {
    if (f.target() != g.source())
        throw invalid_input("compose: middle objects disagree");
    std::vector<Matrix> maps;
    maps.reserve(f.maps().size());
    for (size_t v = 0; v < f.maps().size(); ++v)
        maps.push_back(g.map(static_cast<int>(v)) * f.map(static_cast<int>(v)));
    return RepMorphism(f.source(), g.target(), std::move(maps));
}

inline RepMorphism operator+(const RepMorphism& f, const RepMorphism& g) {
    if (f.source() != g.source() || f.target() != g.target())
        throw invalid_input("RepMorphism add: endpoint mismatch");
    std::vector<Matrix> maps;
    maps.reserve(f.maps().size());
    for (size_t v = 0; v < f.maps().size(); ++v)
        maps.push_back(f.map(static_cast<int>(v)) + g.map(static_cast<int>(v)));
    return RepMorphism(f.source(), f.target(), std::move(maps));
}

inline RepMorphism operator-(const RepMorphism& f, const RepMorphism& g) {
    if (f.source() != g.source() || f.target() != g.target())
        throw invalid_input("RepMorphism subtract: endpoint mismatch");
    std::vector<Matrix> maps;
    maps.reserve(f.maps().size());
    for (size_t v = 0; v < f.maps().size(); ++v)
        maps.push_back(f.map(static_cast<int>(v)) - g.map(static_cast<int>(v)));
    return RepMorphism(f.source(), f.target(), std::move(maps));
}

}  // namespace exactcat
