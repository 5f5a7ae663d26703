#pragma once

#include <queue>
#include <vector>

#include "dwrp/instance.hpp"
#include "dwrp/walk.hpp"

namespace dwrp {

// All-pairs shortest directed distances, ignoring capacities, with enough
// predecessor data to reconstruct an actual arc path.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    DistanceMatrix(int n) : n_(n), dist_(size_t(n) * n, kInfWeight), via_(size_t(n) * n, -1) {}

    Weight dist(Vertex u, Vertex v) const { return dist_[size_t(u) * n_ + v]; }
    bool reachable(Vertex u, Vertex v) const { return dist(u, v) < kInfWeight; }

    // Arc indices of a shortest u -> v path; empty when u == v.
    std::vector<int> path(Vertex u, Vertex v) const {
        std::vector<int> arcs;
        if (!reachable(u, v)) return arcs;
        while (v != u) {
            int a = via_[size_t(u) * n_ + v];
            arcs.push_back(a);
            v = tail_of_[a];
        }
        std::reverse(arcs.begin(), arcs.end());
        return arcs;
    }

    friend DistanceMatrix metric_closure(const Instance& inst);

private:
    int n_ = 0;
    std::vector<Weight> dist_;
    std::vector<int> via_;       // arc entering v on a shortest u->v path
    std::vector<Vertex> tail_of_;
};

inline DistanceMatrix metric_closure(const Instance& inst) {
    DistanceMatrix dm(inst.n);
    dm.tail_of_.resize(inst.m());
    for (int a = 0; a < inst.m(); ++a) dm.tail_of_[a] = inst.arcs[a].tail;

    auto adj = inst.out_adjacency();
    using Item = std::pair<Weight, Vertex>;
    for (Vertex s = 0; s < inst.n; ++s) {
        Weight* dist = &dm.dist_[size_t(s) * inst.n];
        int* via = &dm.via_[size_t(s) * inst.n];
        dist[s] = 0;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        pq.emplace(0, s);
        while (!pq.empty()) {
            auto [d, v] = pq.top();
            pq.pop();
            if (d > dist[v]) continue;
            for (int a : adj[v]) {
                Vertex h = inst.arcs[a].head;
                Weight nd = d + inst.arcs[a].weight;
                if (nd < dist[h]) {
                    dist[h] = nd;
                    via[h] = a;
                    pq.emplace(nd, h);
                }
            }
        }
    }
    return dm;
}

}  // namespace dwrp
