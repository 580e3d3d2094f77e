#ifndef IDP_SOLVE_POLY_HPP
#define IDP_SOLVE_POLY_HPP

#include <cassert>

#include "idp/classify.hpp"
#include "idp/induced.hpp"
#include "idp/pattern.hpp"
#include "idp/solve.hpp"

namespace idp {

namespace detail {

inline bool is_linear_forest_pattern(const Pattern& p) {
    if (p.kind == Pattern::Kind::Path) return true;
    if (p.kind != Pattern::Kind::Union) return false;
    for (const auto& part : p.parts)
        if (part.kind != Pattern::Kind::Path) return false;
    return true;
}

// Pull a solution of a reduced graph back through an old->new remap.
inline std::vector<Vertex> unmap_path(const std::vector<Vertex>& path,
                                      const std::vector<Vertex>& remap) {
    std::vector<Vertex> old_of_new(remap.size(), -1);
    int reduced_n = 0;
    for (size_t old = 0; old < remap.size(); ++old)
        if (remap[old] >= 0) {
            old_of_new[remap[old]] = static_cast<Vertex>(old);
            ++reduced_n;
        }
    std::vector<Vertex> out;
    out.reserve(path.size());
    for (Vertex v : path) {
        if (v < 0 || v >= reduced_n) throw std::logic_error("unmap_path: id out of range");
        out.push_back(old_of_new[v]);
    }
    return out;
}

// Enumerates induced paths from `start` with exactly `length` vertices.
// Interior slots must keep clear of every other terminal and of the pair's
// own target; the last slot may be the target itself or touch it.
class PrefixEnumerator {
public:
    PrefixEnumerator(const Graph& g, const IdpInstance& inst, int pair_index, int length)
        : g_(g), inst_(inst), pair_(pair_index), length_(length),
          on_path_(g.vertex_count()) {}

    template <typename Fn>
    bool enumerate(BudgetTracker& tracker, Fn&& fn) {
        budget_hit_ = false;
        path_.assign(1, inst_.pairs[pair_].s);
        on_path_.clear();
        on_path_.set(inst_.pairs[pair_].s);
        return walk(tracker, fn);
    }

    bool budget_hit() const { return budget_hit_; }

private:
    // Interior vertices may touch the pair's own target (the branch is
    // discarded later if the deletion swallows it, and the second-to-last
    // slot legitimately neighbors the target when the guess ends there),
    // but never another pair's terminal.
    bool vertex_ok(Vertex w, bool last_slot) const {
        for (int j = 0; j < inst_.k(); ++j) {
            if (j == pair_) continue;
            Vertex s = inst_.pairs[j].s, t = inst_.pairs[j].t;
            if (w == s || w == t || g_.adjacent(w, s) || g_.adjacent(w, t)) return false;
        }
        if (!last_slot && w == inst_.pairs[pair_].t) return false;
        return true;
    }

    template <typename Fn>
    bool walk(BudgetTracker& tracker, Fn& fn) {
        if (!tracker.tick()) {
            budget_hit_ = true;
            return false;
        }
        if (static_cast<int>(path_.size()) == length_) return fn(path_);
        Vertex frontier = path_.back();
        bool last_slot = static_cast<int>(path_.size()) + 1 == length_;
        for (Vertex w : g_.neighbors(frontier)) {
            if (on_path_.test(w)) continue;
            bool chord = false;
            for (size_t i = 0; i + 1 < path_.size(); ++i)
                if (g_.adjacent(w, path_[i])) {
                    chord = true;
                    break;
                }
            if (chord) continue; // guessed prefixes stay chordless
            if (!vertex_ok(w, last_slot)) continue;
            path_.push_back(w);
            on_path_.set(w);
            bool done = walk(tracker, fn);
            on_path_.reset(w);
            path_.pop_back();
            if (done || budget_hit_) return done;
        }
        return false;
    }

    const Graph& g_;
    const IdpInstance& inst_;
    int pair_;
    int length_;
    Bitset on_path_;
    std::vector<Vertex> path_;
    bool budget_hit_ = false;
};

} // namespace detail

/// Peeling reduction: with f a linear forest and r = 2|V(f)|-1, phase one
/// looks for a solution whose paths all have at most r+1 vertices; phase
/// two guesses the r+1 vertices following some s_i, removes the closed
/// neighborhood of all but the last, replaces s_i by it, and hands the
/// residual instance to `inner`.
inline SolveOutcome solve_peel(const IdpInstance& inst, const Pattern& f,
                               const SolverHandle& inner, const SolveBudget& budget) {
    budget.validate();
    inst.validate();
    if (!detail::is_linear_forest_pattern(f))
        throw std::invalid_argument("solve_peel: f must be a linear forest");
    const int r = 2 * f.vertex_count() - 1;
    const Graph& g = inst.graph;

    SolveOutcome out;
    out.route = "peel(" + pattern_to_string(f) + ")";

    // Phase 1: all paths short.
    SolveOutcome phase1 = solve_exact_bounded(inst, budget, r + 1);
    if (phase1.status == SolveStatus::Yes) {
        phase1.route = out.route + "/short";
        return phase1;
    }
    detail::BudgetTracker tracker(budget);
    tracker.absorb(phase1.stats.nodes);
    if (phase1.status == SolveStatus::BudgetExhausted) {
        out.status = SolveStatus::BudgetExhausted;
        out.stats.nodes = tracker.nodes();
        out.stats.elapsed_seconds = tracker.elapsed();
        return out;
    }

    // Phase 2: some path has >= r+2 vertices; guess its first r+2 vertices.
    bool exhausted = false;
    std::optional<IdpSolution> found;
    for (int i = 0; i < inst.k() && !found && !exhausted; ++i) {
        detail::PrefixEnumerator prefixes(g, inst, i, r + 2);
        prefixes.enumerate(tracker, [&](const std::vector<Vertex>& prefix) -> bool {
            const Vertex tail = prefix.back();
            const Vertex target = inst.pairs[i].t;
            std::vector<Vertex> interior(prefix.begin(), prefix.end() - 1);

            if (tail == target) {
                // The guessed path is already complete; peel its whole
                // closed neighborhood and solve for the remaining pairs.
                auto [residual, remap] = delete_closed_neighborhood(g, {}, prefix);
                std::vector<TerminalPair> rest;
                for (int j = 0; j < inst.k(); ++j) {
                    if (j == i) continue;
                    Vertex s = remap[inst.pairs[j].s], t = remap[inst.pairs[j].t];
                    if (s < 0 || t < 0) return false; // terminal swallowed
                    rest.push_back({s, t});
                }
                std::vector<std::vector<Vertex>> paths(inst.k());
                paths[i] = prefix;
                if (rest.empty()) {
                    IdpSolution sol{paths};
                    if (!check_solution(inst, sol, false))
                        throw std::logic_error("solve_peel: invalid reconstructed witness");
                    found = sol;
                    return true;
                }
                IdpInstance residual_inst(residual, rest);
                SolveOutcome sub = inner(residual_inst, tracker.remaining(budget));
                tracker.absorb(sub.stats.nodes);
                if (sub.status == SolveStatus::BudgetExhausted) exhausted = true;
                if (sub.status != SolveStatus::Yes) return exhausted;
                int idx = 0;
                for (int j = 0; j < inst.k(); ++j) {
                    if (j == i) continue;
                    paths[j] = detail::unmap_path(sub.solution->paths[idx++], remap);
                }
                IdpSolution sol{paths};
                if (!check_solution(inst, sol, false))
                    throw std::logic_error("solve_peel: invalid reconstructed witness");
                found = sol;
                return true;
            }

            auto [residual, remap] = delete_closed_neighborhood(g, {tail}, interior);
            std::vector<TerminalPair> pairs;
            for (int j = 0; j < inst.k(); ++j) {
                Vertex s = j == i ? remap[tail] : remap[inst.pairs[j].s];
                Vertex t = remap[inst.pairs[j].t];
                if (s < 0 || t < 0) return false;
                pairs.push_back({s, t});
            }
            IdpInstance residual_inst(residual, pairs);
            SolveOutcome sub = inner(residual_inst, tracker.remaining(budget));
            tracker.absorb(sub.stats.nodes);
            if (sub.status == SolveStatus::BudgetExhausted) exhausted = true;
            if (sub.status != SolveStatus::Yes) return exhausted;

            std::vector<std::vector<Vertex>> paths(inst.k());
            for (int j = 0; j < inst.k(); ++j) {
                auto sub_path = detail::unmap_path(sub.solution->paths[j], remap);
                if (j == i) {
                    paths[j] = interior;
                    paths[j].insert(paths[j].end(), sub_path.begin(), sub_path.end());
                } else {
                    paths[j] = sub_path;
                }
            }
            IdpSolution sol{paths};
            if (!check_solution(inst, sol, false))
                throw std::logic_error("solve_peel: invalid reconstructed witness");
            found = sol;
            return true;
        });
        if (prefixes.budget_hit()) exhausted = true;
    }

    out.stats.nodes = tracker.nodes();
    out.stats.elapsed_seconds = tracker.elapsed();
    if (found) {
        out.status = SolveStatus::Yes;
        out.solution = std::move(found);
    } else {
        out.status = exhausted ? SolveStatus::BudgetExhausted : SolveStatus::No;
    }
    return out;
}

namespace detail {

// Enumerates the "short" solution paths (< 8 vertices) for the pairs picked
// by `mask`, pair by pair in input order, discarding options with cross
// edges or contact with the terminals of the remaining pairs.
class ShortPathAssignment {
public:
    static constexpr int kShortMaxVertices = 7;

    ShortPathAssignment(const Graph& g, const IdpInstance& inst, unsigned mask)
        : g_(g), inst_(inst), mask_(mask), used_(g.vertex_count()),
          used_or_adjacent_(g.vertex_count()) {}

    template <typename Fn>
    bool enumerate(BudgetTracker& tracker, Fn&& fn) {
        budget_hit_ = false;
        paths_.assign(inst_.k(), {});
        return assign(tracker, 0, fn);
    }

    bool budget_hit() const { return budget_hit_; }

private:
    bool slot_ok(Vertex w, int pair) const {
        // never touch a terminal of any other pair (short or long)
        for (int j = 0; j < inst_.k(); ++j) {
            if (j == pair) continue;
            Vertex s = inst_.pairs[j].s, t = inst_.pairs[j].t;
            if (w == s || w == t || g_.adjacent(w, s) || g_.adjacent(w, t)) return false;
        }
        return true;
    }

    template <typename Fn>
    bool assign(BudgetTracker& tracker, int pair, Fn& fn) {
        while (pair < inst_.k() && !(mask_ & (1u << pair))) ++pair;
        if (pair == inst_.k()) return fn(paths_);
        // enumerate simple s-t paths on <= 7 vertices for this pair
        std::vector<Vertex> path{inst_.pairs[pair].s};
        if (used_or_adjacent_.test(inst_.pairs[pair].s)) return false;
        if (!slot_ok(inst_.pairs[pair].s, pair)) return false;
        return grow(tracker, pair, path, fn);
    }

    template <typename Fn>
    bool grow(BudgetTracker& tracker, int pair, std::vector<Vertex>& path, Fn& fn) {
        if (!tracker.tick()) {
            budget_hit_ = true;
            return false;
        }
        Vertex frontier = path.back();
        if (frontier == inst_.pairs[pair].t) {
            Bitset saved_used = used_, saved_adj = used_or_adjacent_;
            for (Vertex v : path) {
                used_.set(v);
                used_or_adjacent_.set(v);
                used_or_adjacent_.or_with(g_.row(v));
            }
            paths_[pair] = path;
            bool done = assign(tracker, pair + 1, fn);
            paths_[pair].clear();
            used_ = saved_used;
            used_or_adjacent_ = saved_adj;
            return done;
        }
        if (static_cast<int>(path.size()) >= kShortMaxVertices) return false;
        for (Vertex w : g_.neighbors(frontier)) {
            if (used_or_adjacent_.test(w)) continue; // cross edge or reuse
            bool on_path = false;
            for (Vertex v : path)
                if (v == w) {
                    on_path = true;
                    break;
                }
            if (on_path) continue;
            if (!slot_ok(w, pair)) continue;
            path.push_back(w);
            bool done = grow(tracker, pair, path, fn);
            path.pop_back();
            if (done || budget_hit_) return done;
        }
        return false;
    }

    const Graph& g_;
    const IdpInstance& inst_;
    unsigned mask_;
    Bitset used_;             // vertices of already-guessed paths
    Bitset used_or_adjacent_; // closed neighborhood of guessed paths
    std::vector<std::vector<Vertex>> paths_;
    bool budget_hit_ = false;
};

struct ComponentInstance {
    IdpInstance instance;
    std::vector<Vertex> remap; // ids of the pre-split graph -> component ids
    std::vector<int> pair_indices;
};

} // namespace detail

/// Branching algorithm for chair-free inputs. Guesses which pairs get short
/// paths (< 8 vertices) and their full vertex tuples, deletes the guessed
/// paths' closed neighborhoods, deletes common neighbors of each remaining
/// pair, splits into connected components, discards branches whose terminal
/// components contain a claw, and delegates the rest to `clawfree_solver`
/// (shipped: the exact oracle behind the same interface).
inline SolveOutcome solve_chair_free(const IdpInstance& inst, const SolverHandle& clawfree_solver,
                                     const SolveBudget& budget) {
    budget.validate();
    inst.validate();
    assert(is_h_free(inst.graph, Pattern::chair()) && "solve_chair_free: input must be chair-free");
    const Graph& g = inst.graph;
    const int k = inst.k();
    const Graph claw = realize(Pattern::claw());

    detail::BudgetTracker tracker(budget);
    SolveOutcome out;
    out.route = "chair-free";
    bool exhausted = false;
    std::optional<IdpSolution> found;

    for (unsigned mask = 0; mask < (1u << k) && !found; ++mask) {
        detail::ShortPathAssignment assignment(g, inst, mask);
        assignment.enumerate(tracker, [&](const std::vector<std::vector<Vertex>>& guessed) -> bool {
            std::vector<int> remaining;
            for (int j = 0; j < k; ++j)
                if (!(mask & (1u << j))) remaining.push_back(j);

            // delete guessed paths and their neighbors
            std::vector<Vertex> guessed_vertices;
            for (int j = 0; j < k; ++j)
                for (Vertex v : guessed[j]) guessed_vertices.push_back(v);
            Graph g1 = g;
            std::vector<Vertex> remap1(g.vertex_count());
            for (Vertex v = 0; v < g.vertex_count(); ++v) remap1[v] = v;
            if (!guessed_vertices.empty()) {
                auto del = delete_closed_neighborhood(g, {}, guessed_vertices);
                g1 = std::move(del.graph);
                remap1 = std::move(del.remap);
            }
            std::vector<TerminalPair> pairs1;
            for (int j : remaining) {
                Vertex s = remap1[inst.pairs[j].s], t = remap1[inst.pairs[j].t];
                if (s < 0 || t < 0) return false;
                pairs1.push_back({s, t});
            }
            if (remaining.empty()) {
                IdpSolution sol{guessed};
                if (!check_solution(inst, sol, false))
                    throw std::logic_error("solve_chair_free: invalid enumeration witness");
                found = sol;
                return true;
            }

            // remaining paths are long: drop every common neighbor of a
            // remaining pair; a terminal that is itself a common neighbor
            // kills the branch
            Bitset drop(g1.vertex_count());
            for (const auto& p : pairs1) {
                for (Vertex v : g1.neighbors(p.s)) {
                    if (!g1.adjacent(v, p.t)) continue;
                    for (const auto& q : pairs1)
                        if (v == q.s || v == q.t) return false;
                    drop.set(v);
                }
            }
            std::vector<Vertex> keep;
            for (Vertex v = 0; v < g1.vertex_count(); ++v)
                if (!drop.test(v)) keep.push_back(v);
            auto [g2, remap2] = induced_subgraph(g1, keep);
            std::vector<TerminalPair> pairs2;
            for (const auto& p : pairs1) pairs2.push_back({remap2[p.s], remap2[p.t]});

            // split into connected components
            auto comp = detail::component_ids(g2);
            for (const auto& p : pairs2)
                if (comp[p.s] != comp[p.t]) return false;

            int comps = 0;
            for (int c : comp) comps = std::max(comps, c + 1);
            std::vector<std::vector<int>> pairs_of_comp(comps);
            for (size_t pi = 0; pi < pairs2.size(); ++pi)
                pairs_of_comp[comp[pairs2[pi].s]].push_back(static_cast<int>(pi));

            std::vector<detail::ComponentInstance> sub_instances;
            for (int c = 0; c < comps; ++c) {
                if (pairs_of_comp[c].empty()) continue;
                std::vector<Vertex> verts;
                for (Vertex v = 0; v < g2.vertex_count(); ++v)
                    if (comp[v] == c) verts.push_back(v);
                auto [gc, remap3] = induced_subgraph(g2, verts);
                if (find_induced(gc, claw)) return false; // Theorem t-lp kills the branch
                std::vector<TerminalPair> cpairs;
                for (int pi : pairs_of_comp[c])
                    cpairs.push_back({remap3[pairs2[pi].s], remap3[pairs2[pi].t]});
                sub_instances.push_back(
                    {IdpInstance(gc, cpairs), remap3, pairs_of_comp[c]});
            }

            // delegate each component to the claw-free solver
            std::vector<std::vector<Vertex>> paths(k);
            for (int j = 0; j < k; ++j)
                if (mask & (1u << j)) paths[j] = guessed[j];
            for (const auto& sub : sub_instances) {
                SolveOutcome r = clawfree_solver(sub.instance, tracker.remaining(budget));
                tracker.absorb(r.stats.nodes);
                if (r.status == SolveStatus::BudgetExhausted) {
                    exhausted = true;
                    return true; // abort enumeration
                }
                if (r.status == SolveStatus::No) return false;
                for (size_t pi = 0; pi < sub.pair_indices.size(); ++pi) {
                    auto in_g2 = detail::unmap_path(r.solution->paths[pi], sub.remap);
                    auto in_g1 = detail::unmap_path(in_g2, remap2);
                    paths[remaining[sub.pair_indices[pi]]] = detail::unmap_path(in_g1, remap1);
                }
            }
            IdpSolution sol{paths};
            if (!check_solution(inst, sol, false))
                throw std::logic_error("solve_chair_free: invalid reconstructed witness");
            found = sol;
            return true;
        });
        if (assignment.budget_hit()) exhausted = true;
        if (exhausted) break;
    }

    out.stats.nodes = tracker.nodes();
    out.stats.elapsed_seconds = tracker.elapsed();
    if (found) {
        out.status = SolveStatus::Yes;
        out.solution = std::move(found);
    } else {
        out.status = exhausted ? SolveStatus::BudgetExhausted : SolveStatus::No;
    }
    return out;
}

/// Routing per the fixed-k classifier: tractable patterns run the peeling
/// pipeline with the chair-free algorithm inside (claw-free inner solver =
/// exact oracle); everything else falls back to the exact oracle directly.
inline SolveOutcome solve_dispatch(const IdpInstance& inst, const Pattern& h,
                                   const SolveBudget& budget) {
    budget.validate();
    Graph hg = realize(h);
    Classification cls = classify_fixed_k(hg);

    if (cls.verdict != Verdict::PolynomialTime) {
        SolveOutcome out = solve_exact(inst, budget);
        out.route = "exact[" + cls.reason + "]";
        return out;
    }

    SolverHandle exact = [](const IdpInstance& sub, const SolveBudget& b) {
        return solve_exact(sub, b);
    };
    SolverHandle chair_free = [exact](const IdpInstance& sub, const SolveBudget& b) {
        return solve_chair_free(sub, exact, b);
    };

    // linear-forest part of h = its path components
    std::vector<Pattern> path_parts;
    if (h.kind == Pattern::Kind::Union) {
        for (const auto& part : h.parts)
            if (part.kind == Pattern::Kind::Path) path_parts.push_back(part);
    } else if (h.kind == Pattern::Kind::Path) {
        path_parts.push_back(h);
    }

    if (path_parts.empty()) {
        SolveOutcome out = solve_chair_free(inst, exact, budget);
        out.route = "chair-free(exact)";
        return out;
    }
    Pattern f = path_parts.size() == 1 ? path_parts[0] : Pattern::union_of(path_parts);
    SolveOutcome out = solve_peel(inst, f, chair_free, budget);
    out.route = "peel(" + pattern_to_string(f) + ")+chair-free(exact)";
    return out;
}

} // namespace idp

#endif
