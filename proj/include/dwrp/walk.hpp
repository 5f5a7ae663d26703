#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "dwrp/instance.hpp"

namespace dwrp {

// Closed walk given as a sequence of arc indices; consecutive arcs must be
// incident (head of one = tail of next) and the walk returns to its start.
// An empty walk is the trivial walk sitting at `anchor`.
struct ClosedWalk {
    std::vector<int> arcs;
    Vertex anchor = -1;

    bool empty() const { return arcs.empty(); }
};

struct NotClosedError : std::runtime_error {
    NotClosedError() : std::runtime_error("walk is not closed") {}
};
struct NotBalancedError : std::runtime_error {
    NotBalancedError() : std::runtime_error("arc multiset is not balanced") {}
};
struct NotConnectedError : std::runtime_error {
    NotConnectedError() : std::runtime_error("arc multiset support is not weakly connected") {}
};
struct AnchorOffSupportError : std::runtime_error {
    AnchorOffSupportError() : std::runtime_error("anchor not on multiset support") {}
};

// Multiplicity vector over the instance's arc list.
struct ArcMultiset {
    std::vector<long long> mult;

    explicit ArcMultiset(int m = 0) : mult(m, 0) {}

    long long total() const {
        long long t = 0;
        for (long long x : mult) t += x;
        return t;
    }

    bool operator==(const ArcMultiset& o) const { return mult == o.mult; }
};

inline ArcMultiset walk_multiset(const Instance& inst, const ClosedWalk& walk) {
    ArcMultiset ms(inst.m());
    for (int a : walk.arcs) {
        if (a < 0 || a >= inst.m()) throw SemanticError("arc index out of range");
        ++ms.mult[a];
    }
    return ms;
}

inline Weight walk_cost(const Instance& inst, const ClosedWalk& walk) {
    Weight c = 0;
    for (int a : walk.arcs) c = checked_add(c, inst.arcs[a].weight);
    return c;
}

inline bool walk_is_closed(const Instance& inst, const ClosedWalk& walk) {
    if (walk.arcs.empty()) return true;
    for (size_t i = 0; i + 1 < walk.arcs.size(); ++i)
        if (inst.arcs[walk.arcs[i]].head != inst.arcs[walk.arcs[i + 1]].tail) return false;
    return inst.arcs[walk.arcs.back()].head == inst.arcs[walk.arcs.front()].tail;
}

// Vertex sequence v0 v1 ... v0 of a closed walk (single vertex if empty).
inline std::vector<Vertex> walk_vertices(const Instance& inst, const ClosedWalk& walk) {
    if (walk.arcs.empty()) return {walk.anchor};
    std::vector<Vertex> seq;
    seq.reserve(walk.arcs.size() + 1);
    seq.push_back(inst.arcs[walk.arcs.front()].tail);
    for (int a : walk.arcs) seq.push_back(inst.arcs[a].head);
    return seq;
}

struct Violation {
    enum Kind { NotClosed, MissingWaypoint, CapacityExceeded, BudgetExceeded, UnknownArc };
    Kind kind;
    int subject = -1;  // vertex for MissingWaypoint, arc index for CapacityExceeded/UnknownArc

    std::string to_string() const {
        switch (kind) {
            case NotClosed: return "NotClosed";
            case MissingWaypoint: return "MissingWaypoint " + std::to_string(subject);
            case CapacityExceeded: return "CapacityExceeded arc " + std::to_string(subject);
            case BudgetExceeded: return "BudgetExceeded";
            case UnknownArc: return "UnknownArc " + std::to_string(subject);
        }
        return "?";
    }
};

struct ValidationReport {
    bool valid = false;
    Weight cost = 0;
    std::vector<Violation> violations;
};

// Checks a candidate walk against the instance; collects all violations
// rather than stopping at the first.
inline ValidationReport validate_walk(const Instance& inst, const ClosedWalk& walk) {
    ValidationReport rep;
    for (int a : walk.arcs) {
        if (a < 0 || a >= inst.m()) {
            rep.violations.push_back({Violation::UnknownArc, a});
            rep.valid = false;
            return rep;
        }
    }
    rep.cost = walk_cost(inst, walk);
    if (!walk_is_closed(inst, walk)) rep.violations.push_back({Violation::NotClosed, -1});

    std::vector<char> visited(inst.n, 0);
    if (walk.arcs.empty()) {
        if (walk.anchor >= 0 && walk.anchor < inst.n) visited[walk.anchor] = 1;
    } else {
        for (int a : walk.arcs) {
            visited[inst.arcs[a].tail] = 1;
            visited[inst.arcs[a].head] = 1;
        }
    }
    for (Vertex w : inst.waypoints)
        if (!visited[w]) rep.violations.push_back({Violation::MissingWaypoint, w});

    std::vector<long long> uses(inst.m(), 0);
    for (int a : walk.arcs) ++uses[a];
    for (int a = 0; a < inst.m(); ++a)
        if (!inst.arcs[a].capacity.allows(uses[a]))
            rep.violations.push_back({Violation::CapacityExceeded, a});

    if (inst.budget && rep.cost > *inst.budget)
        rep.violations.push_back({Violation::BudgetExceeded, -1});

    rep.valid = rep.violations.empty();
    return rep;
}

// Splits a closed walk into vertex-simple directed cycles. The concatenated
// arc multiset of the cycles equals the walk's arc multiset.
inline std::vector<ClosedWalk> cycle_decompose(const Instance& inst, const ClosedWalk& walk) {
    if (!walk_is_closed(inst, walk)) throw NotClosedError();
    std::vector<ClosedWalk> cycles;
    if (walk.arcs.empty()) return cycles;

    std::vector<int> stack;            // arc indices of the current open path
    std::vector<int> pos(inst.n, -1);  // arc-prefix length at which a vertex sits on the path
    Vertex start = inst.arcs[walk.arcs.front()].tail;
    pos[start] = 0;
    for (int a : walk.arcs) {
        stack.push_back(a);
        Vertex h = inst.arcs[a].head;
        if (pos[h] >= 0) {
            int p = pos[h];
            ClosedWalk cyc;
            cyc.anchor = h;
            cyc.arcs.assign(stack.begin() + p, stack.end());
            for (int b : cyc.arcs) pos[inst.arcs[b].head] = -1;
            pos[h] = p;
            stack.resize(p);
            cycles.push_back(std::move(cyc));
        } else {
            pos[h] = static_cast<int>(stack.size());
        }
    }
    return cycles;
}

inline bool multiset_balanced(const Instance& inst, const ArcMultiset& ms) {
    std::vector<long long> bal(inst.n, 0);
    for (int a = 0; a < inst.m(); ++a) {
        bal[inst.arcs[a].tail] += ms.mult[a];
        bal[inst.arcs[a].head] -= ms.mult[a];
    }
    return std::all_of(bal.begin(), bal.end(), [](long long b) { return b == 0; });
}

inline bool multiset_support_connected(const Instance& inst, const ArcMultiset& ms) {
    std::vector<std::vector<Vertex>> und(inst.n);
    Vertex seed = -1;
    for (int a = 0; a < inst.m(); ++a) {
        if (ms.mult[a] == 0) continue;
        und[inst.arcs[a].tail].push_back(inst.arcs[a].head);
        und[inst.arcs[a].head].push_back(inst.arcs[a].tail);
        seed = inst.arcs[a].tail;
    }
    if (seed < 0) return true;
    std::vector<char> seen(inst.n, 0);
    std::vector<Vertex> queue{seed};
    seen[seed] = 1;
    while (!queue.empty()) {
        Vertex v = queue.back();
        queue.pop_back();
        for (Vertex u : und[v])
            if (!seen[u]) {
                seen[u] = 1;
                queue.push_back(u);
            }
    }
    for (int a = 0; a < inst.m(); ++a)
        if (ms.mult[a] > 0 && !seen[inst.arcs[a].tail]) return false;
    return true;
}

// Hierholzer assembly: turns a balanced, connected arc multiset into a
// closed walk starting and ending at `anchor`.
inline ClosedWalk multiset_to_walk(const Instance& inst, const ArcMultiset& ms, Vertex anchor) {
    if (!multiset_balanced(inst, ms)) throw NotBalancedError();
    if (!multiset_support_connected(inst, ms)) throw NotConnectedError();

    ClosedWalk out;
    out.anchor = anchor;
    if (ms.total() == 0) return out;

    std::vector<std::vector<int>> avail(inst.n);  // arc occurrences by tail
    bool anchor_on_support = false;
    for (int a = 0; a < inst.m(); ++a) {
        for (long long i = 0; i < ms.mult[a]; ++i) avail[inst.arcs[a].tail].push_back(a);
        if (ms.mult[a] > 0 && (inst.arcs[a].tail == anchor || inst.arcs[a].head == anchor))
            anchor_on_support = true;
    }
    if (!anchor_on_support) throw AnchorOffSupportError();

    std::vector<Vertex> vstack{anchor};
    std::vector<int> astack;
    std::vector<int> circuit;
    while (!vstack.empty()) {
        Vertex v = vstack.back();
        if (!avail[v].empty()) {
            int a = avail[v].back();
            avail[v].pop_back();
            vstack.push_back(inst.arcs[a].head);
            astack.push_back(a);
        } else {
            vstack.pop_back();
            if (!astack.empty() && !vstack.empty()) {
                circuit.push_back(astack.back());
                astack.pop_back();
            }
        }
    }
    std::reverse(circuit.begin(), circuit.end());
    out.arcs = std::move(circuit);
    return out;
}

}  // namespace dwrp
