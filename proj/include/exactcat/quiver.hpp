#pragma once

#include <string>
#include <utility>
#include <vector>

#include "exactcat/errors.hpp"

namespace exactcat {

/// Finite acyclic quiver.  Vertices are 0..vertex_count-1; arrows are ordered
/// (source, target) pairs.  Parallel arrows and multiple components are fine;
/// cycles (including loops) are rejected at construction.
class Quiver {
public:
    Quiver(int vertex_count, std::vector<std::pair<int, int>> arrows)
        : vertex_count_(vertex_count), arrows_(std::move(arrows)) {
        if (vertex_count_ < 0) throw invalid_input("Quiver: negative vertex count");
        for (auto& [s, t] : arrows_)
            if (s < 0 || s >= vertex_count_ || t < 0 || t >= vertex_count_)
                throw invalid_input("Quiver: arrow endpoint out of range");
        if (has_cycle()) throw invalid_input("Quiver: must be acyclic");
    }

    int vertex_count() const { return vertex_count_; }
    int arrow_count() const { return static_cast<int>(arrows_.size()); }
    int source(int a) const { return arrows_[a].first; }
    int target(int a) const { return arrows_[a].second; }
    const std::vector<std::pair<int, int>>& arrows() const { return arrows_; }

    bool operator==(const Quiver& o) const {
        return vertex_count_ == o.vertex_count_ && arrows_ == o.arrows_;
    }
    bool operator!=(const Quiver& o) const { return !(*this == o); }

private:
    bool has_cycle() const {
        // Kahn's algorithm; leftovers mean a cycle.
        std::vector<int> indeg(vertex_count_, 0);
        for (auto& [s, t] : arrows_) ++indeg[t];
        std::vector<int> queue;
        for (int v = 0; v < vertex_count_; ++v)
            if (indeg[v] == 0) queue.push_back(v);
        int seen = 0;
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            ++seen;
            for (int a = 0; a < arrow_count(); ++a)
                if (source(a) == v && --indeg[target(a)] == 0) queue.push_back(target(a));
        }
        return seen != vertex_count_;
    }

    int vertex_count_;
    std::vector<std::pair<int, int>> arrows_;
};

}  // namespace exactcat
