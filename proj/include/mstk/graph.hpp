#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <queue>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mstk/errors.hpp"

namespace mstk {

struct Edge {
    std::size_t u, v;
};

struct WeightedEdge {
    std::size_t u, v;
    double weight;
};

/// Finite simple undirected graph on vertices 0..n-1. Either every edge
/// carries a positive weight or none does; edges are unordered pairs of
/// distinct vertices, so self-loops and duplicates are rejected outright.
class Graph {
public:
    Graph(std::size_t vertex_count, std::span<const Edge> edges) : Graph(vertex_count, edges.size(), false) {
        for (const Edge& e : edges) add_edge(e.u, e.v, 1.0);
    }

    Graph(std::size_t vertex_count, std::span<const WeightedEdge> edges)
        : Graph(vertex_count, edges.size(), true) {
        for (const WeightedEdge& e : edges) {
            if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
                throw InputError("Graph: edge weight must be a positive finite real");
            }
            add_edge(e.u, e.v, e.weight);
        }
    }

    std::size_t vertex_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    bool weighted() const { return weighted_; }

    struct Arc {
        std::size_t to;
        double weight;
    };
    std::span<const Arc> neighbors(std::size_t v) const {
        check_vertex(v);
        return adjacency_[v];
    }

private:
    Graph(std::size_t vertex_count, std::size_t edges, bool weighted)
        : adjacency_(vertex_count), weighted_(weighted), edge_count_(edges) {
        if (vertex_count == 0) throw InputError("Graph: vertex count must be positive");
    }

    void add_edge(std::size_t u, std::size_t v, double weight) {
        if (u >= adjacency_.size() || v >= adjacency_.size()) {
            throw InputError("Graph: edge endpoint out of range");
        }
        if (u == v) throw InputError("Graph: self-loops are not edges (an edge joins two distinct vertices)");
        if (!seen_.insert({std::min(u, v), std::max(u, v)}).second) {
            throw InputError("Graph: duplicate edge {" + std::to_string(u) + ", " + std::to_string(v) + "}");
        }
        adjacency_[u].push_back({v, weight});
        adjacency_[v].push_back({u, weight});
    }

    void check_vertex(std::size_t v) const {
        if (v >= adjacency_.size()) {
            throw InputError("Graph: vertex " + std::to_string(v) + " out of range (n = " +
                             std::to_string(adjacency_.size()) + ")");
        }
    }

    std::vector<std::vector<Arc>> adjacency_;
    std::set<std::pair<std::size_t, std::size_t>> seen_;
    bool weighted_;
    std::size_t edge_count_;

    friend bool is_connected(const Graph&);
    friend std::size_t graph_distance(const Graph&, std::size_t, std::size_t);
    friend double weighted_graph_distance(const Graph&, std::size_t, std::size_t);
};

/// True iff every vertex is reachable from vertex 0. A single vertex with no
/// edges is connected (the empty path reaches it).
inline bool is_connected(const Graph& g) {
    std::vector<char> visited(g.vertex_count(), 0);
    std::queue<std::size_t> frontier;
    frontier.push(0);
    visited[0] = 1;
    std::size_t reached = 1;
    while (!frontier.empty()) {
        const std::size_t v = frontier.front();
        frontier.pop();
        for (const Graph::Arc& arc : g.adjacency_[v]) {
            if (!visited[arc.to]) {
                visited[arc.to] = 1;
                ++reached;
                frontier.push(arc.to);
            }
        }
    }
    return reached == g.vertex_count();
}

/// Minimum number of edges over all paths from v to w (breadth-first
/// search); 0 exactly when v = w. Throws DisconnectedGraph when no path
/// exists, since the path-length metric is only defined on connected graphs.
inline std::size_t graph_distance(const Graph& g, std::size_t v, std::size_t w) {
    g.check_vertex(v);
    g.check_vertex(w);
    if (v == w) return 0;
    std::vector<std::size_t> dist(g.vertex_count(), std::numeric_limits<std::size_t>::max());
    std::queue<std::size_t> frontier;
    dist[v] = 0;
    frontier.push(v);
    while (!frontier.empty()) {
        const std::size_t current = frontier.front();
        frontier.pop();
        for (const Graph::Arc& arc : g.adjacency_[current]) {
            if (dist[arc.to] != std::numeric_limits<std::size_t>::max()) continue;
            dist[arc.to] = dist[current] + 1;
            if (arc.to == w) return dist[arc.to];
            frontier.push(arc.to);
        }
    }
    throw DisconnectedGraph("graph_distance: no path from " + std::to_string(v) + " to " + std::to_string(w));
}

/// Minimum total weight over all paths from v to w (Dijkstra). Coincides
/// with graph_distance when every weight is 1.
inline double weighted_graph_distance(const Graph& g, std::size_t v, std::size_t w) {
    if (!g.weighted()) throw InputError("weighted_graph_distance: graph has no edge weights");
    g.check_vertex(v);
    g.check_vertex(w);
    if (v == w) return 0.0;
    constexpr double kUnreached = std::numeric_limits<double>::infinity();
    std::vector<double> dist(g.vertex_count(), kUnreached);
    using Item = std::pair<double, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> frontier;
    dist[v] = 0.0;
    frontier.push({0.0, v});
    while (!frontier.empty()) {
        const auto [d, current] = frontier.top();
        frontier.pop();
        if (d > dist[current]) continue;
        if (current == w) return d;
        for (const Graph::Arc& arc : g.adjacency_[current]) {
            const double candidate = d + arc.weight;
            if (candidate < dist[arc.to]) {
                dist[arc.to] = candidate;
                frontier.push({candidate, arc.to});
            }
        }
    }
    throw DisconnectedGraph("weighted_graph_distance: no path from " + std::to_string(v) + " to " +
                            std::to_string(w));
}

}  // namespace mstk
