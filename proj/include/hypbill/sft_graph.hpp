#pragma once

#include <string>
#include <vector>

namespace hypbill {

/// Vertex-shift presentation: vertex labels and out-adjacency lists.
struct SftGraph {
    std::vector<std::string> labels;
    std::vector<std::vector<int>> out;

    int size() const { return static_cast<int>(out.size()); }
    bool edge(int i, int j) const;
    std::size_t edge_count() const;
    /// Dense Boolean adjacency matrix, row-major.
    std::vector<std::vector<bool>> adjacency() const;

    static SftGraph from_adjacency(const std::vector<std::vector<int>>& matrix);
};

/// Tarjan strongly connected components; component ids in reverse topological order.
std::vector<int> strongly_connected_components(const SftGraph& g, int* component_count = nullptr);

}  // namespace hypbill
