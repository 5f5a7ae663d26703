#pragma once

#include <optional>
#include <sstream>
#include <string>

#include "dwrp/instance.hpp"
#include "dwrp/walk.hpp"

namespace dwrp {

enum class SolveStatus { Optimal, Infeasible, BudgetExceeded };

struct Solution {
    SolveStatus status = SolveStatus::Infeasible;
    Weight cost = 0;  // optimal cost; also carried for BudgetExceeded
    ClosedWalk walk;

    static Solution infeasible() { return {}; }

    // Applies the instance budget as a post-filter on a minimum-cost walk.
    static Solution optimal(const Instance& inst, Weight cost, ClosedWalk walk) {
        Solution s;
        s.cost = cost;
        s.walk = std::move(walk);
        s.status = (inst.budget && cost > *inst.budget) ? SolveStatus::BudgetExceeded
                                                        : SolveStatus::Optimal;
        return s;
    }
};

inline std::string serialize_solution(const Instance& inst, const Solution& sol) {
    if (sol.status != SolveStatus::Optimal) return "INFEASIBLE\n";
    std::ostringstream os;
    os << "COST " << sol.cost << "\n";
    os << "WALK";
    for (Vertex v : walk_vertices(inst, sol.walk)) os << ' ' << v;
    os << "\n";
    return os.str();
}

}  // namespace dwrp
