#ifndef IDP_SOLVE_HPP
#define IDP_SOLVE_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "idp/instance.hpp"

namespace idp {

struct SolveBudget {
    std::int64_t node_limit = 50'000'000;
    double time_limit_seconds = 60.0;

    void validate() const {
        if (node_limit <= 0 || time_limit_seconds <= 0)
            throw std::invalid_argument("budget: limits must be positive");
    }
};

enum class SolveStatus { Yes, No, BudgetExhausted };

inline const char* status_name(SolveStatus s) {
    switch (s) {
    case SolveStatus::Yes: return "YES";
    case SolveStatus::No: return "NO";
    case SolveStatus::BudgetExhausted: return "BUDGET";
    }
    return "?";
}

struct SearchStats {
    std::int64_t nodes = 0;
    int max_depth = 0;
    double elapsed_seconds = 0.0;
};

struct SolveOutcome {
    SolveStatus status = SolveStatus::No;
    std::optional<IdpSolution> solution; // present iff status == Yes
    SearchStats stats;
    std::string route; // which pipeline produced the answer
};

/// Callable contract shared by all solvers.
using SolverHandle = std::function<SolveOutcome(const IdpInstance&, const SolveBudget&)>;

/// Verify a candidate solution. Structural mismatches (wrong path count,
/// endpoints not matching the terminal pair, ids out of range) throw;
/// semantic failures (repeated vertex, non-adjacent step, cross edges)
/// return false. In flexible mode edges between endpoints of different
/// paths are exempt.
inline bool check_solution(const IdpInstance& inst, const IdpSolution& sol, bool flexible) {
    const Graph& g = inst.graph;
    if (static_cast<int>(sol.paths.size()) != inst.k())
        throw std::invalid_argument("solution: path count mismatch");
    for (int i = 0; i < inst.k(); ++i) {
        const auto& path = sol.paths[i];
        if (path.empty()) throw std::invalid_argument("solution: empty path");
        for (Vertex v : path)
            if (v < 0 || v >= g.vertex_count())
                throw std::invalid_argument("solution: vertex id out of range");
        if (path.front() != inst.pairs[i].s || path.back() != inst.pairs[i].t)
            throw std::invalid_argument("solution: endpoint mismatch with terminal pair");
    }
    for (const auto& path : sol.paths) {
        for (size_t a = 0; a < path.size(); ++a)
            for (size_t b = a + 1; b < path.size(); ++b)
                if (path[a] == path[b]) return false;
        for (size_t a = 0; a + 1 < path.size(); ++a)
            if (!g.adjacent(path[a], path[a + 1])) return false;
    }
    for (size_t i = 0; i < sol.paths.size(); ++i) {
        for (size_t j = i + 1; j < sol.paths.size(); ++j) {
            const auto& pi = sol.paths[i];
            const auto& pj = sol.paths[j];
            for (Vertex u : pi)
                for (Vertex v : pj) {
                    if (u == v) return false;
                    if (!g.adjacent(u, v)) continue;
                    bool u_end = (u == pi.front() || u == pi.back());
                    bool v_end = (v == pj.front() || v == pj.back());
                    if (!(flexible && u_end && v_end)) return false;
                }
        }
    }
    return true;
}

namespace detail {

class BudgetTracker {
public:
    BudgetTracker(const SolveBudget& b)
        : node_limit_(b.node_limit), deadline_(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                                  std::chrono::duration<double>(b.time_limit_seconds))),
          start_(Clock::now()) {}

    // Returns false once the budget is gone.
    bool tick() {
        ++nodes_;
        if (nodes_ > node_limit_) return false;
        if ((nodes_ & 0xFFF) == 0 && Clock::now() > deadline_) return false;
        return true;
    }

    std::int64_t nodes() const { return nodes_; }

    double elapsed() const {
        return std::chrono::duration<double>(Clock::now() - start_).count();
    }

    SolveBudget remaining(const SolveBudget& original) const {
        SolveBudget r;
        r.node_limit = std::max<std::int64_t>(1, original.node_limit - nodes_);
        double left = original.time_limit_seconds - elapsed();
        r.time_limit_seconds = std::max(1e-3, left);
        return r;
    }

    void absorb(std::int64_t extra_nodes) { nodes_ += extra_nodes; }

private:
    using Clock = std::chrono::steady_clock;
    std::int64_t nodes_ = 0;
    std::int64_t node_limit_;
    Clock::time_point deadline_;
    Clock::time_point start_;
};

enum class SearchResult { Found, Exhausted, Budget };

// Backtracking over the k paths: paths are grown pair by pair in input
// order; fixing a path removes its closed neighborhood from the allowed
// set of all later pairs. Within-path chords are fine, the problem asks
// for paths, not induced paths.
class ExactSearch {
public:
    ExactSearch(const IdpInstance& inst, const SolveBudget& budget, int max_path_vertices)
        : inst_(inst), g_(inst.graph), tracker_(budget),
          max_path_vertices_(max_path_vertices), terminal_of_pair_(g_.vertex_count(), -1) {
        for (int i = 0; i < inst_.k(); ++i) {
            terminal_of_pair_[inst_.pairs[i].s] = i;
            terminal_of_pair_[inst_.pairs[i].t] = i;
        }
    }

    SolveOutcome run() {
        Bitset allowed(g_.vertex_count());
        for (Vertex v = 0; v < g_.vertex_count(); ++v) allowed.set(v);
        paths_.assign(inst_.k(), {});
        SearchResult r = solve_pair(0, allowed);
        SolveOutcome out;
        out.stats.nodes = tracker_.nodes();
        out.stats.max_depth = max_depth_;
        out.stats.elapsed_seconds = tracker_.elapsed();
        out.route = "exact";
        if (r == SearchResult::Found) {
            out.status = SolveStatus::Yes;
            out.solution = IdpSolution{paths_};
            if (!check_solution(inst_, *out.solution, /*flexible=*/false))
                throw std::logic_error("exact solver produced an invalid witness");
        } else if (r == SearchResult::Budget) {
            out.status = SolveStatus::BudgetExhausted;
        } else {
            out.status = SolveStatus::No;
        }
        return out;
    }

private:
    bool reachable(Vertex from, Vertex to, const Bitset& allowed, const Bitset& forbidden) const {
        if (from == to) return true;
        Bitset seen(g_.vertex_count());
        std::vector<Vertex> stack{from};
        seen.set(from);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g_.neighbors(v)) {
                if (w == to) return true;
                if (seen.test(w) || !allowed.test(w) || forbidden.test(w)) continue;
                seen.set(w);
                stack.push_back(w);
            }
        }
        return false;
    }

    // Every unsolved pair must still be connectable inside `allowed`.
    bool pairs_alive(int from_pair, const Bitset& allowed) const {
        Bitset none(g_.vertex_count());
        for (int j = from_pair; j < inst_.k(); ++j) {
            if (!allowed.test(inst_.pairs[j].s) || !allowed.test(inst_.pairs[j].t)) return false;
            if (!reachable(inst_.pairs[j].s, inst_.pairs[j].t, allowed, none)) return false;
        }
        return true;
    }

    SearchResult solve_pair(int i, const Bitset& allowed) {
        if (i == inst_.k()) return SearchResult::Found;
        if (!pairs_alive(i, allowed)) return SearchResult::Exhausted;
        std::vector<Vertex> path{inst_.pairs[i].s};
        Bitset on_path(g_.vertex_count());
        on_path.set(inst_.pairs[i].s);
        return extend(i, allowed, path, on_path);
    }

    SearchResult extend(int i, const Bitset& allowed, std::vector<Vertex>& path, Bitset& on_path) {
        if (!tracker_.tick()) return SearchResult::Budget;
        max_depth_ = std::max(max_depth_, static_cast<int>(path.size()));
        const Vertex target = inst_.pairs[i].t;
        Vertex frontier = path.back();

        if (frontier == target) {
            Bitset next_allowed = allowed;
            for (Vertex v : path) {
                next_allowed.reset(v);
                next_allowed.and_not_with(g_.row(v));
            }
            paths_[i] = path;
            SearchResult r = solve_pair(i + 1, next_allowed);
            if (r != SearchResult::Exhausted) return r;
            return SearchResult::Exhausted;
        }
        if (static_cast<int>(path.size()) >= max_path_vertices_) return SearchResult::Exhausted;

        bool budget_hit = false;
        for (Vertex w : g_.neighbors(frontier)) {
            if (!allowed.test(w) || on_path.test(w)) continue;
            // Terminals of other pairs can neither sit on nor touch this path.
            int owner = terminal_of_pair_[w];
            if (owner >= 0 && owner != i) continue;
            bool kills_terminal = false;
            for (int j = i + 1; j < inst_.k() && !kills_terminal; ++j)
                if (g_.adjacent(w, inst_.pairs[j].s) || g_.adjacent(w, inst_.pairs[j].t))
                    kills_terminal = true;
            if (w != target) {
                if (kills_terminal) continue;
                if (!reachable(w, target, allowed, on_path)) continue;
            } else if (kills_terminal) {
                continue;
            }
            path.push_back(w);
            on_path.set(w);
            SearchResult r = extend(i, allowed, path, on_path);
            on_path.reset(w);
            path.pop_back();
            if (r == SearchResult::Found) return r;
            if (r == SearchResult::Budget) {
                budget_hit = true;
                break;
            }
        }
        return budget_hit ? SearchResult::Budget : SearchResult::Exhausted;
    }

    const IdpInstance& inst_;
    const Graph& g_;
    BudgetTracker tracker_;
    int max_path_vertices_;
    std::vector<int> terminal_of_pair_;
    std::vector<std::vector<Vertex>> paths_;
    int max_depth_ = 0;
};

} // namespace detail

/// Complete backtracking oracle. Yes answers carry a witness that passes
/// check_solution in strict mode; No answers are exact. `max_path_vertices`
/// bounds the per-path vertex count (used by the peeling algorithm's first
/// phase); 0 means unbounded.
inline SolveOutcome solve_exact_bounded(const IdpInstance& inst, const SolveBudget& budget,
                                        int max_path_vertices) {
    budget.validate();
    inst.validate();
    detail::ExactSearch search(inst, budget,
                               max_path_vertices > 0 ? max_path_vertices
                                                     : inst.graph.vertex_count());
    return search.run();
}

inline SolveOutcome solve_exact(const IdpInstance& inst, const SolveBudget& budget) {
    return solve_exact_bounded(inst, budget, 0);
}

// ---------------------------------------------------------------------------
// Hole through two prescribed vertices.

enum class HoleStatus { Found, None, BudgetExhausted };

struct HoleResult {
    HoleStatus status = HoleStatus::None;
    std::vector<Vertex> cycle; // cyclic order, starts at x
    SearchStats stats;
};

namespace detail {

// Grows an induced path from a to b inside `allowed`, never touching the
// neighborhood of the already-fixed interior. The cycle is x plus that path.
class HoleSearch {
public:
    HoleSearch(const Graph& g, Vertex x, Vertex y, BudgetTracker& tracker)
        : g_(g), x_(x), y_(y), tracker_(&tracker) {}

    std::optional<std::vector<Vertex>> try_gate(Vertex a, Vertex b) {
        const int n = g_.vertex_count();
        a_ = a;
        b_ = b;
        allowed_ = Bitset(n);
        for (Vertex v = 0; v < n; ++v) allowed_.set(v);
        allowed_.reset(x_);
        allowed_.and_not_with(g_.row(x_));
        allowed_.set(a);
        allowed_.set(b);
        if (y_ != a && y_ != b && !allowed_.test(y_)) return std::nullopt;

        path_.assign(1, a);
        on_path_ = Bitset(n);
        on_path_.set(a);
        blocked_ = Bitset(n); // neighbors of interior (non-frontier) vertices
        budget_hit_ = false;
        if (extend()) {
            std::vector<Vertex> cycle{x_};
            cycle.insert(cycle.end(), path_.begin(), path_.end());
            return cycle;
        }
        return std::nullopt;
    }

    bool budget_hit() const { return budget_hit_; }

private:
    bool y_on_path() const { return on_path_.test(y_); }

    bool feasible_region_ok(Vertex frontier) const {
        // b (and y, until picked up) must stay reachable through vertices
        // that are still usable: allowed, off the path, not adjacent to the
        // fixed interior.
        const int n = g_.vertex_count();
        Bitset usable = allowed_;
        usable.and_not_with(on_path_);
        usable.and_not_with(blocked_);
        Bitset seen(n);
        std::vector<Vertex> stack{frontier};
        seen.set(frontier);
        bool need_y = !y_on_path() && y_ != b_;
        bool saw_b = false, saw_y = !need_y;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g_.neighbors(v)) {
                if (seen.test(w)) continue;
                if (w == b_) {
                    saw_b = true;
                    if (saw_b && saw_y) return true;
                }
                if (need_y && w == y_) {
                    saw_y = true;
                    if (saw_b && saw_y) return true;
                }
                if (!usable.test(w)) continue;
                seen.set(w);
                stack.push_back(w);
            }
        }
        return saw_b && saw_y;
    }

    bool extend() {
        if (!tracker_->tick()) {
            budget_hit_ = true;
            return false;
        }
        Vertex frontier = path_.back();

        // Close the cycle: b adjacent to the frontier, nothing else on the
        // path may touch b, and y must already be covered.
        if (g_.adjacent(frontier, b_) && path_.size() >= 2 && !blocked_.test(b_) &&
            (y_on_path() || y_ == b_ || y_ == a_)) {
            path_.push_back(b_);
            return true;
        }

        if (blocked_.test(b_)) return false;            // b already chorded off
        if (!y_on_path() && y_ != b_ && blocked_.test(y_)) return false;
        if (!feasible_region_ok(frontier)) return false;

        for (Vertex w : g_.neighbors(frontier)) {
            if (w == b_ || !allowed_.test(w) || on_path_.test(w) || blocked_.test(w)) continue;
            path_.push_back(w);
            on_path_.set(w);
            Bitset saved_blocked = blocked_;
            blocked_.or_with(g_.row(frontier)); // frontier becomes interior
            blocked_.reset(w);
            if (extend()) return true; // completed path stays intact
            blocked_ = saved_blocked;
            on_path_.reset(w);
            path_.pop_back();
            if (budget_hit_) return false;
        }
        return false;
    }

    const Graph& g_;
    Vertex x_, y_;
    Vertex a_ = -1, b_ = -1;
    BudgetTracker* tracker_;
    Bitset allowed_, on_path_, blocked_;
    std::vector<Vertex> path_;
    bool budget_hit_ = false;
};

} // namespace detail

/// Search for an induced cycle on >= 4 vertices through x and y. The two
/// cycle neighbors of x are enumerated as non-adjacent pairs from N(x);
/// for each pair an induced x-avoiding path closes the cycle.
inline HoleResult find_hole_through(const Graph& g, Vertex x, Vertex y, const SolveBudget& budget) {
    budget.validate();
    if (x == y) throw std::invalid_argument("find_hole_through: x == y");
    if (x < 0 || x >= g.vertex_count() || y < 0 || y >= g.vertex_count())
        throw std::invalid_argument("find_hole_through: vertex id out of range");

    detail::BudgetTracker tracker(budget);
    detail::HoleSearch search(g, x, y, tracker);
    HoleResult out;
    bool budget_hit = false;
    const auto& nx = g.neighbors(x);
    for (size_t i = 0; i < nx.size() && !budget_hit; ++i) {
        for (size_t j = i + 1; j < nx.size(); ++j) {
            Vertex a = nx[i], b = nx[j];
            if (g.adjacent(a, b)) continue; // would chord the cycle at x
            auto cycle = search.try_gate(a, b);
            if (search.budget_hit()) {
                budget_hit = true;
                break;
            }
            if (cycle) {
                out.status = HoleStatus::Found;
                out.cycle = std::move(*cycle);
                out.stats.nodes = tracker.nodes();
                out.stats.elapsed_seconds = tracker.elapsed();
                return out;
            }
        }
    }
    out.status = budget_hit ? HoleStatus::BudgetExhausted : HoleStatus::None;
    out.stats.nodes = tracker.nodes();
    out.stats.elapsed_seconds = tracker.elapsed();
    return out;
}

/// True iff `cycle` is an induced cycle of g on >= 4 vertices containing
/// both x and y (in the order listed).
inline bool verify_hole(const Graph& g, const std::vector<Vertex>& cycle, Vertex x, Vertex y) {
    const size_t len = cycle.size();
    if (len < 4) return false;
    bool has_x = false, has_y = false;
    for (size_t i = 0; i < len; ++i) {
        if (cycle[i] == x) has_x = true;
        if (cycle[i] == y) has_y = true;
        for (size_t j = i + 1; j < len; ++j) {
            if (cycle[i] == cycle[j]) return false;
            bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
            if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
        }
    }
    return has_x && has_y;
}

} // namespace idp

#endif
