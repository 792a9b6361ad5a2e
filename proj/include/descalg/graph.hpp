#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

#include "descalg/generator_set.hpp"

namespace descalg {

/// Undirected edge endpoint carrying the generator that labels the edge.
struct LabeledEdge {
    std::uint32_t to;
    Generator label;
};

/// Adjacency lists; each undirected edge appears once in each endpoint's list.
using LabeledGraph = std::vector<std::vector<LabeledEdge>>;

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
        return true;
    }

    /// Dense component ids 0..k-1, numbered by first appearance.
    std::vector<std::uint32_t> labels(std::uint32_t& count) {
        std::vector<std::uint32_t> id(parent_.size(), UINT32_MAX);
        std::vector<std::uint32_t> out(parent_.size());
        count = 0;
        for (std::size_t v = 0; v < parent_.size(); ++v) {
            const std::size_t r = find(v);
            if (id[r] == UINT32_MAX) id[r] = count++;
            out[v] = id[r];
        }
        return out;
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<unsigned char> rank_;
};

template <typename Adjacency>
std::size_t edge_count(const Adjacency& adj) {
    std::size_t twice = 0;
    for (const auto& row : adj) twice += row.size();
    return twice / 2;
}

template <typename Adjacency>
std::size_t component_count(const Adjacency& adj) {
    DisjointSets ds(adj.size());
    std::size_t comps = adj.size();
    for (std::size_t v = 0; v < adj.size(); ++v)
        for (const auto& e : adj[v])
            if (ds.unite(v, e.to)) --comps;
    return comps;
}

/// |E| - |V| + #components: the rank of the (free) fundamental group of each
/// component, summed.
template <typename Adjacency>
std::size_t cycle_rank(const Adjacency& adj) {
    return edge_count(adj) + component_count(adj) - adj.size();
}

}  // namespace descalg
