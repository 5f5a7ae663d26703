#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dwrp {

using Vertex = int;
using Weight = long long;

// Sentinel for "no walk exists"; chosen so that sums of a few of these
// still fit in a Weight without wrapping.
inline constexpr Weight kInfWeight = std::numeric_limits<Weight>::max() / 4;

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("parse error (line " + std::to_string(line_) + "): " + what_),
          line(line_) {}
};

struct SemanticError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TooLargeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Weight checked_add(Weight a, Weight b) {
    if (a >= kInfWeight || b >= kInfWeight) return kInfWeight;
    if (a > std::numeric_limits<Weight>::max() - b)
        throw std::overflow_error("weight sum overflow");
    return a + b;
}

// Arc capacity; the unbounded symbol is kept distinct and only turned
// into a concrete bound where a solver needs one.
class Capacity {
public:
    Capacity() = default;
    static constexpr Capacity unbounded() { return Capacity(); }
    static Capacity finite(long long c) {
        if (c < 1) throw SemanticError("capacity must be >= 1");
        Capacity k;
        k.value_ = c;
        return k;
    }

    bool is_unbounded() const { return value_ < 0; }
    long long value() const { return value_; }

    // Concrete per-arc bound: unbounded acts as `fallback` (typically n).
    long long bound(long long fallback) const {
        return is_unbounded() ? fallback : std::min(value_, fallback);
    }
    bool allows(long long uses) const { return is_unbounded() || uses <= value_; }

    friend bool operator==(const Capacity& a, const Capacity& b) {
        return a.value_ == b.value_;
    }

private:
    long long value_ = -1;
};

struct Arc {
    Vertex tail = -1;
    Vertex head = -1;
    Weight weight = 0;
    Capacity capacity;
};

// A DWRP instance. Vertices are 0..n-1. Immutable by convention once built:
// all solvers take it by const reference and never modify it.
struct Instance {
    int n = 0;
    std::vector<Arc> arcs;
    std::vector<Vertex> waypoints;  // sorted, unique
    std::optional<Weight> budget;
    bool multiarc = false;

    int m() const { return static_cast<int>(arcs.size()); }

    bool is_waypoint(Vertex v) const {
        return std::binary_search(waypoints.begin(), waypoints.end(), v);
    }

    std::vector<std::vector<int>> out_adjacency() const {
        std::vector<std::vector<int>> adj(n);
        for (int i = 0; i < m(); ++i) adj[arcs[i].tail].push_back(i);
        return adj;
    }

    std::vector<std::vector<int>> in_adjacency() const {
        std::vector<std::vector<int>> adj(n);
        for (int i = 0; i < m(); ++i) adj[arcs[i].head].push_back(i);
        return adj;
    }
};

// Structural checks shared by the parser and by generators that build
// instances programmatically. Solver-internal instances (e.g. compressed
// ones) may carry zero-weight arcs, so the weight floor is a flag.
inline void check_instance(const Instance& inst, bool require_positive_weights = true) {
    if (inst.n < 1) throw SemanticError("vertex count must be positive");
    if (inst.waypoints.size() < 2) throw SemanticError("at least 2 waypoints required");
    if (!std::is_sorted(inst.waypoints.begin(), inst.waypoints.end()))
        throw SemanticError("waypoints must be sorted");
    if (std::adjacent_find(inst.waypoints.begin(), inst.waypoints.end()) != inst.waypoints.end())
        throw SemanticError("duplicate waypoint");
    for (Vertex w : inst.waypoints)
        if (w < 0 || w >= inst.n) throw SemanticError("waypoint out of range");
    if (inst.budget && *inst.budget < 0) throw SemanticError("budget must be nonnegative");
    for (const Arc& a : inst.arcs) {
        if (a.tail < 0 || a.tail >= inst.n || a.head < 0 || a.head >= inst.n)
            throw SemanticError("arc endpoint out of range");
        if (a.tail == a.head) throw SemanticError("self-loop arcs are not allowed");
        if (require_positive_weights && a.weight < 1)
            throw SemanticError("arc weight must be >= 1");
        if (a.weight < 0) throw SemanticError("arc weight must be nonnegative");
    }
    if (!inst.multiarc) {
        std::vector<std::pair<Vertex, Vertex>> pairs;
        pairs.reserve(inst.arcs.size());
        for (const Arc& a : inst.arcs) pairs.emplace_back(a.tail, a.head);
        std::sort(pairs.begin(), pairs.end());
        if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end())
            throw SemanticError("duplicate arc (enable multiarc to allow parallel arcs)");
    }
}

namespace detail {

inline std::vector<std::string> tokenize(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

inline long long parse_int(const std::string& tok, int line, const char* what) {
    try {
        size_t pos = 0;
        long long v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, std::string("expected integer for ") + what + ", got '" + tok + "'");
    }
}

}  // namespace detail

inline Instance parse_instance(std::istream& in) {
    Instance inst;
    bool seen_magic = false, seen_n = false, seen_waypoints = false, seen_budget = false;
    bool seen_arc = false;
    int lineno = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        auto toks = detail::tokenize(line);
        if (toks.empty()) continue;

        if (!seen_magic) {
            if (toks.size() != 2 || toks[0] != "dwrp" || toks[1] != "1")
                throw ParseError(lineno, "expected header 'dwrp 1'");
            seen_magic = true;
            continue;
        }
        const std::string& kw = toks[0];
        if (kw == "n") {
            if (seen_n) throw ParseError(lineno, "duplicate 'n' line");
            if (toks.size() != 2) throw ParseError(lineno, "usage: n <int>");
            long long n = detail::parse_int(toks[1], lineno, "n");
            if (n < 1 || n > 1'000'000) throw SemanticError("vertex count out of range");
            inst.n = static_cast<int>(n);
            seen_n = true;
        } else if (kw == "waypoints") {
            if (!seen_n) throw ParseError(lineno, "'waypoints' before 'n'");
            if (seen_waypoints) throw ParseError(lineno, "duplicate 'waypoints' line");
            for (size_t i = 1; i < toks.size(); ++i)
                inst.waypoints.push_back(
                    static_cast<Vertex>(detail::parse_int(toks[i], lineno, "waypoint")));
            std::sort(inst.waypoints.begin(), inst.waypoints.end());
            seen_waypoints = true;
        } else if (kw == "budget") {
            if (seen_budget) throw ParseError(lineno, "duplicate 'budget' line");
            if (toks.size() != 2) throw ParseError(lineno, "usage: budget <int|none>");
            if (toks[1] != "none")
                inst.budget = detail::parse_int(toks[1], lineno, "budget");
            seen_budget = true;
        } else if (kw == "multiarc") {
            if (toks.size() != 2 || toks[1] != "on")
                throw ParseError(lineno, "usage: multiarc on");
            if (seen_arc) throw ParseError(lineno, "'multiarc on' must precede arc lines");
            inst.multiarc = true;
        } else if (kw == "arc") {
            if (!seen_n) throw ParseError(lineno, "'arc' before 'n'");
            if (toks.size() != 5) throw ParseError(lineno, "usage: arc <tail> <head> <weight> <capacity|inf>");
            Arc a;
            a.tail = static_cast<Vertex>(detail::parse_int(toks[1], lineno, "tail"));
            a.head = static_cast<Vertex>(detail::parse_int(toks[2], lineno, "head"));
            a.weight = detail::parse_int(toks[3], lineno, "weight");
            if (a.weight > (1LL << 40)) throw SemanticError("arc weight too large");
            a.capacity = toks[4] == "inf" ? Capacity::unbounded()
                                          : Capacity::finite(detail::parse_int(toks[4], lineno, "capacity"));
            inst.arcs.push_back(a);
            seen_arc = true;
        } else {
            throw ParseError(lineno, "unknown keyword '" + kw + "'");
        }
    }
    if (!seen_magic) throw ParseError(lineno, "empty input, expected 'dwrp 1' header");
    if (!seen_n) throw ParseError(lineno, "missing 'n' line");
    if (!seen_waypoints) throw ParseError(lineno, "missing 'waypoints' line");
    check_instance(inst);
    return inst;
}

inline Instance parse_instance(const std::string& text) {
    std::istringstream is(text);
    return parse_instance(is);
}

// Canonical text form; arcs ordered by (tail, head, insertion order).
inline std::string serialize_instance(const Instance& inst) {
    std::vector<int> order(inst.arcs.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        const Arc& x = inst.arcs[a];
        const Arc& y = inst.arcs[b];
        return std::pair(x.tail, x.head) < std::pair(y.tail, y.head);
    });
    std::ostringstream os;
    os << "dwrp 1\n";
    os << "n " << inst.n << "\n";
    os << "waypoints";
    for (Vertex w : inst.waypoints) os << ' ' << w;
    os << "\n";
    if (inst.budget)
        os << "budget " << *inst.budget << "\n";
    else
        os << "budget none\n";
    if (inst.multiarc) os << "multiarc on\n";
    for (int i : order) {
        const Arc& a = inst.arcs[i];
        os << "arc " << a.tail << ' ' << a.head << ' ' << a.weight << ' ';
        if (a.capacity.is_unbounded())
            os << "inf";
        else
            os << a.capacity.value();
        os << "\n";
    }
    return os.str();
}

}  // namespace dwrp
