#pragma once

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "exactcat/config.hpp"
#include "exactcat/errors.hpp"
#include "exactcat/matrix.hpp"
#include "exactcat/quiver.hpp"

namespace exactcat {

/// Finite-dimensional representation of an acyclic quiver over F_p: a vector
/// space F_p^(dims[v]) per vertex and a matrix of shape dims[target] x
/// dims[source] per arrow.  Immutable after construction.
///
/// max_total_dim guards direct construction at API boundaries; internal
/// constructions (sums, pullbacks, ...) pass the exact size they produce.
class Representation {
public:
    Representation(Quiver quiver, PrimeField field, std::vector<int> dims,
                   std::vector<Matrix> arrow_maps,
                   int max_total_dim = kDefaultBudgets.max_total_dim)
        : quiver_(std::move(quiver)), field_(field), dims_(std::move(dims)),
          arrow_maps_(std::move(arrow_maps)) {
        if (static_cast<int>(dims_.size()) != quiver_.vertex_count())
            throw invalid_input("Representation: need one dimension per vertex");
        for (int d : dims_)
            if (d < 0) throw invalid_input("Representation: negative dimension");
        if (total_dim() > max_total_dim)
            throw budget_exceeded("Representation: total dimension " +
                                  std::to_string(total_dim()) + " exceeds limit " +
                                  std::to_string(max_total_dim));
        if (static_cast<int>(arrow_maps_.size()) != quiver_.arrow_count())
            throw invalid_input("Representation: need one matrix per arrow");
        for (int a = 0; a < quiver_.arrow_count(); ++a) {
            const Matrix& m = arrow_maps_[a];
            if (!(m.field() == field_))
                throw invalid_input("Representation: arrow map over wrong field");
            if (m.rows() != dims_[quiver_.target(a)] || m.cols() != dims_[quiver_.source(a)])
                throw invalid_input("Representation: arrow " + std::to_string(a) +
                                    " map is " + m.shape() + ", expected " +
                                    std::to_string(dims_[quiver_.target(a)]) + "x" +
                                    std::to_string(dims_[quiver_.source(a)]));
        }
    }

    static Representation zero(const Quiver& q, const PrimeField& f) {
        std::vector<Matrix> maps;
        maps.reserve(q.arrow_count());
        for (int a = 0; a < q.arrow_count(); ++a) maps.emplace_back(f, 0, 0);
        return Representation(q, f, std::vector<int>(q.vertex_count(), 0), std::move(maps));
    }

    const Quiver& quiver() const { return quiver_; }
    const PrimeField& field() const { return field_; }
    const std::vector<int>& dims() const { return dims_; }
    int dim(int v) const { return dims_[v]; }
    const Matrix& arrow_map(int a) const { return arrow_maps_[a]; }

    int total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), 0); }
    bool is_zero() const { return total_dim() == 0; }

    bool operator==(const Representation& o) const {
        return quiver_ == o.quiver_ && field_ == o.field_ && dims_ == o.dims_ &&
               arrow_maps_ == o.arrow_maps_;
    }
    bool operator!=(const Representation& o) const { return !(*this == o); }

    /// Same quiver and same field (objects of the same ambient category).
    bool same_ambient(const Representation& o) const {
        return quiver_ == o.quiver_ && field_ == o.field_;
    }

private:
    Quiver quiver_;
    PrimeField field_;
    std::vector<int> dims_;
    std::vector<Matrix> arrow_maps_;
};

}  // namespace exactcat
