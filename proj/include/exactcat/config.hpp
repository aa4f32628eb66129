#pragma once

#include <cstdint>

namespace exactcat {

/// Cost ceilings for the exhaustive parts of the toolkit.  All defaults are
/// sized for desk-scale inputs (the intended regime): total dimension <= 12,
/// subobject enumeration up to total dimension 6 over p <= 3, isomorphism
/// search over at most 10^5 coefficient combinations before sampling.
struct Budgets {
    int max_total_dim = 12;
    /// Gate for subobject enumeration, compared against prod_v p^(d_v^2).
    /// 2e17 admits every shape with total dimension <= 6 over p <= 3
    /// (worst case 3^36 ~ 1.5e17).
    double enumeration = 2e17;
    /// Exhaustive isomorphism search runs when p^dim(Hom) <= iso_search;
    /// past that, seeded sampling of iso_search candidates.
    std::int64_t iso_search = 100000;
};

inline const Budgets kDefaultBudgets{};

}  // namespace exactcat
