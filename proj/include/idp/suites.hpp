#ifndef IDP_SUITES_HPP
#define IDP_SUITES_HPP

#include <algorithm>
#include <sstream>

#include "idp/reduce_cycle.hpp"
#include "idp/reduce_is.hpp"
#include "idp/reduce_sat.hpp"
#include "idp/rng.hpp"
#include "idp/solve_poly.hpp"

namespace idp {

/// Outcome of one oracle-equivalence suite: `agree` out of `total` cases,
/// with a serialized reproducer per disagreement or budget failure.
struct SuiteReport {
    int total = 0;
    int agree = 0;
    int budget_exhausted = 0;
    std::vector<std::string> failures; // human-readable + reproducer text

    bool ok() const { return agree == total && budget_exhausted == 0 && failures.empty(); }
};

namespace detail {

inline void record_failure(SuiteReport& rep, const std::string& what, const std::string& repro) {
    rep.failures.push_back(what + "\n" + repro);
}

} // namespace detail

/// Peeling pipeline vs. the exact oracle on seeded random two-pair
/// instances (n <= 11, densities 0.1..0.5), f = P3 and inner = exact.
inline SuiteReport suite_peel(std::uint64_t seed, int count, const SolveBudget& budget) {
    Rng rng(seed);
    SuiteReport rep;
    SolverHandle exact = [](const IdpInstance& s, const SolveBudget& b) { return solve_exact(s, b); };
    const double densities[] = {0.1, 0.2, 0.3, 0.4, 0.5};
    while (rep.total < count) {
        int n = rng.uniform_int(4, 11);
        double p = densities[rng.uniform_int(0, 4)];
        IdpInstance inst = random_instance(rng, n, p, 2);
        ++rep.total;
        SolveOutcome a = solve_peel(inst, Pattern::path(3), exact, budget);
        SolveOutcome b = solve_exact(inst, budget);
        if (a.status == SolveStatus::BudgetExhausted || b.status == SolveStatus::BudgetExhausted) {
            ++rep.budget_exhausted;
            detail::record_failure(rep, "peel: budget exhausted", serialize_instance_text(inst));
            continue;
        }
        if (a.status == b.status)
            ++rep.agree;
        else
            detail::record_failure(rep,
                                   std::string("peel disagreement: peel=") + status_name(a.status) +
                                       " exact=" + status_name(b.status),
                                   serialize_instance_text(inst));
    }
    return rep;
}

/// Chair-free branching vs. the exact oracle on seeded random chair-free
/// two-pair instances (n <= 12), found by rejection sampling.
inline SuiteReport suite_chairfree(std::uint64_t seed, int count, const SolveBudget& budget) {
    Rng rng(seed);
    SuiteReport rep;
    SolverHandle exact = [](const IdpInstance& s, const SolveBudget& b) { return solve_exact(s, b); };
    const Pattern chair = Pattern::chair();
    const double densities[] = {0.15, 0.3, 0.5, 0.7, 0.85};
    while (rep.total < count) {
        int n = rng.uniform_int(4, 12);
        double p = densities[rng.uniform_int(0, 4)];
        Graph g = random_graph(rng, n, p);
        if (!is_h_free(g, chair)) continue; // rejection filter, same predicate as certification
        std::vector<Vertex> ids(n);
        for (int i = 0; i < n; ++i) ids[i] = i;
        for (int i = 0; i < 4; ++i) std::swap(ids[i], ids[rng.uniform_int(i, n - 1)]);
        IdpInstance inst(g, {{ids[0], ids[1]}, {ids[2], ids[3]}});
        ++rep.total;
        SolveOutcome a = solve_chair_free(inst, exact, budget);
        SolveOutcome b = solve_exact(inst, budget);
        if (a.status == SolveStatus::BudgetExhausted || b.status == SolveStatus::BudgetExhausted) {
            ++rep.budget_exhausted;
            detail::record_failure(rep, "chairfree: budget exhausted", serialize_instance_text(inst));
            continue;
        }
        if (a.status == b.status)
            ++rep.agree;
        else
            detail::record_failure(rep,
                                   std::string("chairfree disagreement: branching=") +
                                       status_name(a.status) + " exact=" + status_name(b.status),
                                   serialize_instance_text(inst));
    }
    return rep;
}

/// Gadget equivalence: hole-through-(x,y) in the source iff the compiled
/// two-pair instance is solvable, across subdivisions 0..2. Cases are
/// seeded random graphs with a degree-2 non-adjacent vertex pair.
inline SuiteReport suite_hole(std::uint64_t seed, int count, const SolveBudget& budget) {
    Rng rng(seed);
    SuiteReport rep;
    while (rep.total < count) {
        int n = rng.uniform_int(5, 10);
        double p = rng.uniform_int(15, 45) / 100.0;
        Graph g = random_graph(rng, n, p);
        Vertex x = -1, y = -1;
        for (Vertex u = 0; u < n && x < 0; ++u) {
            if (g.degree(u) != 2) continue;
            for (Vertex v = u + 1; v < n; ++v)
                if (g.degree(v) == 2 && !g.adjacent(u, v)) {
                    x = u;
                    y = v;
                    break;
                }
        }
        if (x < 0) continue;
        HoleResult hole = find_hole_through(g, x, y, budget);
        if (hole.status == HoleStatus::BudgetExhausted) {
            ++rep.total;
            ++rep.budget_exhausted;
            detail::record_failure(rep, "hole: oracle budget exhausted", serialize_graph_text(g));
            continue;
        }
        if (hole.status == HoleStatus::Found && !verify_hole(g, hole.cycle, x, y)) {
            ++rep.total;
            detail::record_failure(rep, "hole: returned cycle failed verification",
                                   serialize_graph_text(g));
            continue;
        }
        for (int sub = 0; sub <= 2; ++sub) {
            ++rep.total;
            ReductionArtifact art = cycle_to_idp(g, x, y, sub);
            SolveOutcome comp = solve_exact(art.instance, budget);
            if (comp.status == SolveStatus::BudgetExhausted) {
                ++rep.budget_exhausted;
                detail::record_failure(rep, "hole: compiled-solve budget exhausted",
                                       serialize_instance_text(art.instance));
                continue;
            }
            bool source_yes = hole.status == HoleStatus::Found;
            bool compiled_yes = comp.status == SolveStatus::Yes;
            if (source_yes == compiled_yes)
                ++rep.agree;
            else {
                std::ostringstream what;
                what << "hole disagreement at subdivisions=" << sub << ": source="
                     << (source_yes ? "YES" : "NO") << " compiled=" << status_name(comp.status)
                     << " x=" << x << " y=" << y;
                detail::record_failure(rep, what.str(), serialize_graph_text(g));
            }
        }
    }
    return rep;
}

/// Canonical 3-CNF corpus: clauses use three distinct variables, literals
/// sorted; formulas are sorted duplicate-free clause sets that use a dense
/// variable range and are lexicographically minimal under variable
/// permutations.
inline std::vector<CnfFormula> canonical_cnf_corpus(int max_n, int max_m) {
    using Clause = std::array<Literal, 3>;
    auto clause_key = [](const Clause& c) {
        return std::array<int, 3>{c[0].var * 2 + c[0].positive, c[1].var * 2 + c[1].positive,
                                  c[2].var * 2 + c[2].positive};
    };
    std::vector<CnfFormula> corpus;
    for (int n = 3; n <= max_n; ++n) {
        // all clauses over exactly two signs x three distinct vars from [n]
        std::vector<Clause> clauses;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c)
                    for (int signs = 0; signs < 8; ++signs)
                        clauses.push_back(Clause{Literal{a, (signs & 1) != 0},
                                                 Literal{b, (signs & 2) != 0},
                                                 Literal{c, (signs & 4) != 0}});
        std::vector<int> perm(n);
        std::vector<int> identity(n);
        for (int i = 0; i < n; ++i) identity[i] = i;

        auto formula_key = [&](const std::vector<Clause>& cls, const std::vector<int>& p) {
            std::vector<std::array<int, 3>> keys;
            for (const Clause& c : cls) {
                Clause mapped;
                for (int i = 0; i < 3; ++i) mapped[i] = Literal{p[c[i].var], c[i].positive};
                std::sort(mapped.begin(), mapped.end());
                keys.push_back(clause_key(mapped));
            }
            std::sort(keys.begin(), keys.end());
            return keys;
        };

        auto consider = [&](std::vector<Clause> cls) {
            // every variable of [n] must occur
            std::vector<char> used(n, 0);
            for (const Clause& c : cls)
                for (const Literal& lit : c) used[lit.var] = 1;
            for (char u : used)
                if (!u) return;
            // canonical iff minimal over all variable permutations
            auto base = formula_key(cls, identity);
            perm = identity;
            do {
                if (formula_key(cls, perm) < base) return;
            } while (std::next_permutation(perm.begin(), perm.end()));
            CnfFormula f;
            f.n = n;
            f.clauses = std::move(cls);
            corpus.push_back(std::move(f));
        };

        if (max_m >= 1 && n == 3)
            for (const Clause& c : clauses) consider({c});
        if (max_m >= 2)
            for (size_t i = 0; i < clauses.size(); ++i)
                for (size_t j = i + 1; j < clauses.size(); ++j)
                    consider({clauses[i], clauses[j]});
    }
    return corpus;
}

/// SAT round trip: satisfiability equals the hole answer on G^l_phi, and
/// satisfiable formulas yield a verified witness hole. The first
/// `compiled_spot_checks` satisfiable-or-not cases additionally solve the
/// fully compiled two-pair instance with the exact oracle.
inline SuiteReport suite_sat(int max_n, int max_m, const std::vector<int>& ells,
                             const SolveBudget& per_instance, int compiled_spot_checks = 0) {
    SuiteReport rep;
    auto corpus = canonical_cnf_corpus(max_n, max_m);
    int spot_left = compiled_spot_checks;
    for (const CnfFormula& phi : corpus) {
        bool sat = sat_solve(phi).has_value();
        for (int ell : ells) {
            ++rep.total;
            satgadget::SatGraph sg = satgadget::build_sat_graph(phi, ell);
            HoleResult hole = find_hole_through(sg.graph, sg.x, sg.y, per_instance);
            if (hole.status == HoleStatus::BudgetExhausted) {
                ++rep.budget_exhausted;
                detail::record_failure(rep, "sat: hole search budget exhausted", to_dimacs(phi));
                continue;
            }
            bool hole_yes = hole.status == HoleStatus::Found;
            if (hole_yes != sat) {
                detail::record_failure(rep,
                                       std::string("sat disagreement at l=") + std::to_string(ell) +
                                           ": sat=" + (sat ? "YES" : "NO") +
                                           " hole=" + (hole_yes ? "YES" : "NO"),
                                       to_dimacs(phi));
                continue;
            }
            if (hole_yes && !verify_hole(sg.graph, hole.cycle, sg.x, sg.y)) {
                detail::record_failure(rep, "sat: oracle cycle failed verification", to_dimacs(phi));
                continue;
            }
            if (sat) {
                try {
                    witness_from_assignment(phi, ell, *sat_solve(phi));
                } catch (const std::exception& e) {
                    detail::record_failure(rep, std::string("sat: witness builder failed: ") + e.what(),
                                           to_dimacs(phi));
                    continue;
                }
            }
            if (spot_left > 0) {
                --spot_left;
                ReductionArtifact art = sat_to_idp(phi, ell);
                SolveOutcome comp = solve_exact(art.instance, per_instance);
                if (comp.status == SolveStatus::BudgetExhausted) {
                    ++rep.budget_exhausted;
                    detail::record_failure(rep, "sat: compiled spot check budget exhausted",
                                           to_dimacs(phi));
                    continue;
                }
                if ((comp.status == SolveStatus::Yes) != sat) {
                    detail::record_failure(rep, "sat: compiled instance disagrees with formula",
                                           to_dimacs(phi));
                    continue;
                }
            }
            ++rep.agree;
        }
    }
    return rep;
}

/// Independent-set round trip: IS(g,k) iff the compiled instance solves,
/// plus the structural guarantees (edge-class counts, induced-path bound).
inline SuiteReport suite_is(std::uint64_t seed, int count, const SolveBudget& budget) {
    Rng rng(seed);
    SuiteReport rep;
    while (rep.total < count) {
        int n = rng.uniform_int(1, 7);
        int k = rng.uniform_int(1, 3);
        double p = rng.uniform_int(15, 80) / 100.0;
        Graph g = random_graph(rng, n, p);
        ++rep.total;
        bool expected = has_independent_set(g, k).has_value();
        ReductionArtifact art = is_to_idp(g, k);

        const auto& counts = art.meta.edge_class_counts;
        long kk = k, nn = n, mm = g.edge_count();
        bool counts_ok = counts.at("consistency") == kk * nn * (nn - 1) &&
                         counts.at("independence") == 4 * kk * (kk - 1) * mm &&
                         counts.at("set") == 2 * kk * (kk - 1) * nn &&
                         counts.at("set_ordered_tally") == 4 * kk * (kk - 1) * nn;
        if (!counts_ok) {
            detail::record_failure(rep, "is: edge class counts off", serialize_graph_text(g));
            continue;
        }
        if (!longest_induced_path_at_most(art.instance.graph, 4 * k + 4)) {
            detail::record_failure(rep, "is: induced path beyond 4k+4", serialize_graph_text(g));
            continue;
        }
        SolveOutcome comp = solve_exact(art.instance, budget);
        if (comp.status == SolveStatus::BudgetExhausted) {
            ++rep.budget_exhausted;
            detail::record_failure(rep, "is: compiled-solve budget exhausted",
                                   serialize_instance_text(art.instance));
            continue;
        }
        if ((comp.status == SolveStatus::Yes) == expected)
            ++rep.agree;
        else
            detail::record_failure(rep,
                                   std::string("is disagreement: IS=") + (expected ? "YES" : "NO") +
                                       " compiled=" + status_name(comp.status) +
                                       " k=" + std::to_string(k),
                                   serialize_graph_text(g));
    }
    return rep;
}

} // namespace idp

#endif
