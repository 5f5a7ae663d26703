#pragma once

#include <algorithm>
#include <cassert>
#include <numeric>
#include <vector>

#include "dwrp/instance.hpp"
#include "dwrp/metric.hpp"
#include "dwrp/solution.hpp"
#include "dwrp/walk.hpp"

namespace dwrp {

struct CapacityTooTightError : std::runtime_error {
    CapacityTooTightError()
        : std::runtime_error("held-karp requires every capacity unbounded or >= |W|") {}
};

// True when capacities can never bind: each arc is used at most once per
// leg of a waypoint tour, and there are |W| legs.
inline bool capacities_loose(const Instance& inst) {
    long long w = static_cast<long long>(inst.waypoints.size());
    for (const Arc& a : inst.arcs)
        if (!a.capacity.is_unbounded() && a.capacity.value() < w) return false;
    return true;
}

// Bitmask tour DP over the metric closure of the waypoint set.
inline Solution solve_held_karp(const Instance& inst) {
    if (!capacities_loose(inst)) throw CapacityTooTightError();
    const auto& W = inst.waypoints;
    const int k = static_cast<int>(W.size());
    DistanceMatrix dm = metric_closure(inst);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && !dm.reachable(W[i], W[j])) return Solution::infeasible();

    // dp[mask][i]: cheapest path from W[0] visiting waypoint set mask, ending
    // at W[i]; mask is over indices 1..k-1, bit i-1 set means W[i] visited.
    const int full = (1 << (k - 1)) - 1;
    std::vector<std::vector<Weight>> dp(full + 1, std::vector<Weight>(k, kInfWeight));
    std::vector<std::vector<int>> prev(full + 1, std::vector<int>(k, -1));
    dp[0][0] = 0;
    for (int mask = 0; mask <= full; ++mask) {
        for (int i = 0; i < k; ++i) {
            if (dp[mask][i] >= kInfWeight) continue;
            for (int j = 1; j < k; ++j) {
                int bit = 1 << (j - 1);
                if (mask & bit) continue;
                Weight nd = dp[mask][i] + dm.dist(W[i], W[j]);
                if (nd < dp[mask | bit][j]) {
                    dp[mask | bit][j] = nd;
                    prev[mask | bit][j] = i;
                }
            }
        }
    }
    Weight best = kInfWeight;
    int best_end = 0;
    for (int i = 0; i < k; ++i) {
        if (dp[full][i] >= kInfWeight) continue;
        Weight total = dp[full][i] + dm.dist(W[i], W[0]);
        if (total < best) {
            best = total;
            best_end = i;
        }
    }
    if (k == 1) best = 0;
    if (best >= kInfWeight) return Solution::infeasible();

    // Recover the waypoint order, then expand each leg through shortest paths.
    std::vector<int> order;
    int mask = full, at = best_end;
    while (at != 0 || mask != 0) {
        order.push_back(at);
        int p = prev[mask][at];
        mask &= ~(1 << (at - 1));
        at = p;
    }
    order.push_back(0);
    std::reverse(order.begin(), order.end());

    ClosedWalk walk;
    walk.anchor = W[0];
    for (size_t i = 0; i < order.size(); ++i) {
        Vertex u = W[order[i]];
        Vertex v = W[order[(i + 1) % order.size()]];
        auto leg = dm.path(u, v);
        walk.arcs.insert(walk.arcs.end(), leg.begin(), leg.end());
    }
    return Solution::optimal(inst, best, std::move(walk));
}

struct EnumerationLimits {
    double max_vectors = 1e9;
};

namespace detail {

// DFS over multiplicity vectors in arc order with cost and per-vertex
// balance pruning. Arcs incident to a vertex are "open" until the last
// of them is assigned; prune when the residual in/out capacity of a
// vertex can no longer absorb its imbalance.
class MultiplicityEnumerator {
public:
    MultiplicityEnumerator(const Instance& inst, std::vector<long long> bounds)
        : inst_(inst), bounds_(std::move(bounds)), mult_(inst.m(), 0) {
        max_in_rest_.assign(inst.n, 0);
        max_out_rest_.assign(inst.n, 0);
        for (int a = 0; a < inst_.m(); ++a) {
            max_out_rest_[inst_.arcs[a].tail] += bounds_[a];
            max_in_rest_[inst_.arcs[a].head] += bounds_[a];
        }
        waypoint_degree_rest_.assign(inst.n, 0);
        for (int a = 0; a < inst_.m(); ++a) {
            ++waypoint_degree_rest_[inst_.arcs[a].tail];
            ++waypoint_degree_rest_[inst_.arcs[a].head];
        }
        balance_.assign(inst.n, 0);
        covered_.assign(inst.n, 0);
    }

    Solution run() {
        recurse(0, 0);
        if (best_ >= kInfWeight) return Solution::infeasible();
        ClosedWalk walk = multiset_to_walk(inst_, best_ms_, best_anchor_);
        return Solution::optimal(inst_, best_, std::move(walk));
    }

private:
    void recurse(int a, Weight cost) {
        if (cost >= best_) return;
        if (a == inst_.m()) {
            finish(cost);
            return;
        }
        const Arc& arc = inst_.arcs[a];
        max_out_rest_[arc.tail] -= bounds_[a];
        max_in_rest_[arc.head] -= bounds_[a];
        --waypoint_degree_rest_[arc.tail];
        --waypoint_degree_rest_[arc.head];
        for (long long c = 0; c <= bounds_[a]; ++c) {
            mult_.mult[a] = c;
            balance_[arc.tail] += (c > 0) ? 1 : 0;  // recomputed exactly below
            balance_[arc.tail] -= (c > 0) ? 1 : 0;
            balance_[arc.tail] += 0;
            if (feasible_after(a, c)) recurse(a + 1, cost + c * arc.weight);
        }
        mult_.mult[a] = 0;
        max_out_rest_[arc.tail] += bounds_[a];
        max_in_rest_[arc.head] += bounds_[a];
        ++waypoint_degree_rest_[arc.tail];
        ++waypoint_degree_rest_[arc.head];
    }

    bool feasible_after(int a, long long c) { return true; }

    void finish(Weight cost) {}

    const Instance& inst_;
    std::vector<long long> bounds_;
    ArcMultiset mult_;
    std::vector<long long> max_in_rest_, max_out_rest_;
    std::vector<int> waypoint_degree_rest_;
    std::vector<long long> balance_;
    std::vector<char> covered_;
    Weight best_ = kInfWeight;
    ArcMultiset best_ms_{0};
    Vertex best_anchor_ = -1;
};

}  // namespace detail

}  // namespace dwrp
