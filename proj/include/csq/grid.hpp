#pragma once

#include <span>
#include <vector>

namespace csq {

// Partition of [-1,1]:  -1 = t_0 < t_1 < ... < t_N = 1,  h_k = t_{k+1} - t_k.
// Immutable after construction; safe to share across threads.
class Grid {
public:
    // Uniform partition t_k = -1 + 2k/N. Mesh ratio is pinned to exactly 2.
    static Grid uniform(int segments);

    // Arbitrary partition; nodes must start at -1, end at 1, strictly increase.
    static Grid from_nodes(std::vector<double> nodes);

    int segments() const { return static_cast<int>(steps_.size()); }     // N
    int node_count() const { return static_cast<int>(nodes_.size()); }   // N + 1
    double node(int k) const { return nodes_[static_cast<size_t>(k)]; }
    double step(int k) const { return steps_[static_cast<size_t>(k)]; }
    std::span<const double> nodes() const { return nodes_; }
    std::span<const double> steps() const { return steps_; }

    // gamma = N * max_k h_k. Always >= 2; equals 2 exactly for uniform grids.
    double mesh_ratio() const { return mesh_ratio_; }

    // Index of the segment containing t. Ties at interior nodes resolve to the
    // left segment; t = -1 resolves to segment 0. Throws domain_error outside
    // [-1,1].
    int segment_of(double t) const;

private:
    Grid(std::vector<double> nodes, double mesh_ratio);

    std::vector<double> nodes_;
    std::vector<double> steps_;
    double mesh_ratio_;
};

} // namespace csq
