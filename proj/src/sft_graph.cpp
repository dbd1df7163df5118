#include "hypbill/sft_graph.hpp"

#include <algorithm>

namespace hypbill {

bool SftGraph::edge(int i, int j) const {
    const auto& row = out[static_cast<std::size_t>(i)];
    return std::find(row.begin(), row.end(), j) != row.end();
}

std::size_t SftGraph::edge_count() const {
    std::size_t n = 0;
    for (const auto& row : out) n += row.size();
    return n;
}

std::vector<std::vector<bool>> SftGraph::adjacency() const {
    std::vector<std::vector<bool>> a(out.size(), std::vector<bool>(out.size(), false));
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (int j : out[i]) a[i][static_cast<std::size_t>(j)] = true;
    }
    return a;
}

SftGraph SftGraph::from_adjacency(const std::vector<std::vector<int>>& matrix) {
    SftGraph g;
    g.out.resize(matrix.size());
    for (std::size_t i = 0; i < matrix.size(); ++i) {
        g.labels.push_back(std::to_string(i));
        for (std::size_t j = 0; j < matrix[i].size(); ++j) {
            if (matrix[i][j] != 0) g.out[i].push_back(static_cast<int>(j));
        }
    }
    return g;
}

std::vector<int> strongly_connected_components(const SftGraph& g, int* component_count) {
    const int n = g.size();
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    int next_index = 0;
    int next_comp = 0;
    // Iterative Tarjan: frames of (vertex, next out-edge position).
    std::vector<std::pair<int, std::size_t>> frames;
    for (int root = 0; root < n; ++root) {
        if (index[root] >= 0) continue;
        frames.emplace_back(root, 0);
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            auto& [v, pos] = frames.back();
            const auto& row = g.out[static_cast<std::size_t>(v)];
            if (pos < row.size()) {
                const int w = row[pos++];
                if (index[w] < 0) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = next_comp;
                } while (w != v);
                ++next_comp;
            }
            const int finished = v;
            frames.pop_back();
            if (!frames.empty()) {
                const int parent = frames.back().first;
                low[parent] = std::min(low[parent], low[finished]);
            }
        }
    }
    if (component_count) *component_count = next_comp;
    return comp;
}

}  // namespace hypbill
