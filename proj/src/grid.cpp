#include "csq/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "csq/errors.hpp"

namespace csq {

Grid::Grid(std::vector<double> nodes, double mesh_ratio)
    : nodes_(std::move(nodes)), mesh_ratio_(mesh_ratio) {
    steps_.resize(nodes_.size() - 1);
    for (size_t k = 0; k + 1 < nodes_.size(); ++k)
        steps_[k] = nodes_[k + 1] - nodes_[k];
}

Grid Grid::uniform(int segments) {
    if (segments < 2)
        throw invalid_grid_error("Grid::uniform: need at least 2 segments, got " +
                                 std::to_string(segments));
    std::vector<double> nodes(static_cast<size_t>(segments) + 1);
    for (int k = 0; k <= segments; ++k)
        nodes[static_cast<size_t>(k)] = -1.0 + 2.0 * k / segments;
    nodes.front() = -1.0;
    nodes.back() = 1.0;
    return Grid(std::move(nodes), 2.0);
}

Grid Grid::from_nodes(std::vector<double> nodes) {
    if (nodes.size() < 3)
        throw invalid_grid_error("Grid::from_nodes: need at least 3 nodes (N >= 2)");
    if (nodes.front() != -1.0)
        throw invalid_grid_error("Grid::from_nodes: first node must be exactly -1");
    if (nodes.back() != 1.0)
        throw invalid_grid_error("Grid::from_nodes: last node must be exactly 1");
    for (size_t k = 0; k + 1 < nodes.size(); ++k) {
        if (!(nodes[k + 1] > nodes[k]))
            throw invalid_grid_error("Grid::from_nodes: nodes must strictly increase (violated at index " +
                                     std::to_string(k + 1) + ")");
    }
    const int n = static_cast<int>(nodes.size()) - 1;
    double max_h = 0.0;
    for (size_t k = 0; k + 1 < nodes.size(); ++k)
        max_h = std::max(max_h, nodes[k + 1] - nodes[k]);
    return Grid(std::move(nodes), n * max_h);
}

int Grid::segment_of(double t) const {
    if (std::isnan(t) || t < -1.0 || t > 1.0)
        throw domain_error("Grid::segment_of: t = " + std::to_string(t) + " outside [-1,1]");
    if (t == -1.0) return 0;
    // first node >= t, then step back; exact node hits land on the left segment
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), t);
    return static_cast<int>(it - nodes_.begin()) - 1;
}

} // namespace csq
