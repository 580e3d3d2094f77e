#ifndef IDP_REDUCE_SAT_HPP
#define IDP_REDUCE_SAT_HPP

#include <set>

#include "idp/artifact.hpp"
#include "idp/induced.hpp"
#include "idp/reduce_cycle.hpp"
#include "idp/sat.hpp"

namespace idp {

namespace satgadget {

// Named vertices of one literal gadget. Naming: a/b for the two parallel
// rails, p/m for the +/- sides, so a2p is the vertex usually written
// alpha^{2+}. The two dashed stretches of each rail are length-l paths.
struct LiteralGadget {
    Vertex a, ap, b, bp; // alpha, alpha', beta, beta'
    Vertex a1p, a1pp, a2p, a3p, a4pp, a4p;
    Vertex a1m, a1mm, a2m, a3m, a4mm, a4m;
    Vertex b1p, b1pp, b2p, b3p, b4pp, b4p;
    Vertex b1m, b1mm, b2m, b3m, b4mm, b4m;
};

struct ClauseGadget {
    Vertex c0p, c0m, c12p, c12m, c1p, c1m, c2p, c2m, c3p, c3m;
};

// Two rails of alternating full and length-l edges; contact j hosts one
// occurrence once its full edge is deleted and rewired to a literal gadget.
struct VariableGadget {
    Vertex dp, dm, dpp, dmp, dpm, dmm;
    std::vector<Vertex> tp, tpp; // top rail contact endpoints (negative occurrences)
    std::vector<Vertex> bm, bmm; // bottom rail contact endpoints (positive occurrences)
    std::vector<int> top_occ, bot_occ; // literal position wired at contact j, -1 if none
};

/// G^l_phi with enough bookkeeping to replay the witness selection.
struct SatGraph {
    Graph graph;
    Vertex x = -1, y = -1;
    std::vector<LiteralGadget> lits;   // 3m
    std::vector<ClauseGadget> clauses; // m
    std::vector<VariableGadget> vars;  // n
    std::map<std::pair<Vertex, Vertex>, std::vector<Vertex>> stretch; // length-l paths
};

class Builder {
public:
    // Dashed stretches get length ell+1: a forbidden H_i (i <= ell) has a
    // crossing path of at most ell edges, so it can never span a whole
    // stretch and bridge two solid clusters. With stretches of length ell
    // exactly, an H_ell does fit across a stretch whose ends both branch
    // (see docs/TRANSCRIPTION_NOTES.md).
    Builder(const CnfFormula& cnf, int ell) : cnf_(cnf), stretch_len_(ell + 1) {
        cnf_.validate();
        if (ell < 1) throw std::invalid_argument("sat_to_idp: l >= 1");
    }

    SatGraph build() {
        const int m = cnf_.m(), n = cnf_.n;
        for (int t = 0; t < 3 * m; ++t) add_literal_gadget(t);
        for (int i = 0; i < m; ++i) add_clause_gadget(i);
        for (int v = 0; v < n; ++v) add_variable_gadget(v);
        wire_occurrences();
        wire_clauses();
        // inter-gadget chains
        for (int t = 0; t + 1 < 3 * m; ++t) {
            stretch_path(out_.lits[t].ap, out_.lits[t + 1].a, "link:alpha[" + std::to_string(t) + "]");
            stretch_path(out_.lits[t].bp, out_.lits[t + 1].b, "link:beta[" + std::to_string(t) + "]");
        }
        for (int i = 0; i + 1 < m; ++i)
            stretch_path(out_.clauses[i].c0m, out_.clauses[i + 1].c0p, "link:clause[" + std::to_string(i) + "]");
        for (int v = 0; v + 1 < n; ++v)
            stretch_path(out_.vars[v].dm, out_.vars[v + 1].dp, "link:var[" + std::to_string(v) + "]");
        stretch_path(out_.lits[3 * m - 1].ap, out_.vars[0].dp, "link:alpha_to_vars");
        stretch_path(out_.lits[3 * m - 1].bp, out_.clauses[0].c0p, "link:beta_to_clauses");
        out_.x = b_.add_vertex("term:x");
        out_.y = b_.add_vertex("term:y");
        stretch_path(out_.x, out_.lits[0].a, "link:x_alpha");
        stretch_path(out_.x, out_.lits[0].b, "link:x_beta");
        stretch_path(out_.y, out_.clauses[m - 1].c0m, "link:y_clause");
        stretch_path(out_.y, out_.vars[n - 1].dm, "link:y_var");
        out_.graph = b_.build();
        return std::move(out_);
    }

private:
    // A stretch of length L contributes L edges and L-1 fresh internal
    // vertices; every stretch is recorded so the witness builder can pick
    // the internals of traversed ones.
    void stretch_path(Vertex u, Vertex v, const std::string& tag) {
        std::vector<Vertex> internal;
        Vertex prev = u;
        for (int i = 0; i + 1 < stretch_len_; ++i) {
            Vertex w = b_.add_vertex(tag + "[" + std::to_string(i) + "]");
            b_.add_edge(prev, w);
            internal.push_back(w);
            prev = w;
        }
        b_.add_edge(prev, v);
        auto key = std::minmax(u, v);
        if (!out_.stretch.emplace(std::pair<Vertex, Vertex>(key.first, key.second), internal).second)
            throw std::logic_error("sat_to_idp: duplicate stretch between endpoints");
    }

    void add_literal_gadget(int t) {
        auto v = [&](const char* nm) {
            return b_.add_vertex("lit:" + std::string(nm) + "[" + std::to_string(t) + "]");
        };
        LiteralGadget g;
        g.a = v("a");
        g.ap = v("ap");
        g.b = v("b");
        g.bp = v("bp");
        g.a1p = v("a1p"); g.a1pp = v("a1pp"); g.a2p = v("a2p"); g.a3p = v("a3p");
        g.a4pp = v("a4pp"); g.a4p = v("a4p");
        g.a1m = v("a1m"); g.a1mm = v("a1mm"); g.a2m = v("a2m"); g.a3m = v("a3m");
        g.a4mm = v("a4mm"); g.a4m = v("a4m");
        g.b1p = v("b1p"); g.b1pp = v("b1pp"); g.b2p = v("b2p"); g.b3p = v("b3p");
        g.b4pp = v("b4pp"); g.b4p = v("b4p");
        g.b1m = v("b1m"); g.b1mm = v("b1mm"); g.b2m = v("b2m"); g.b3m = v("b3m");
        g.b4mm = v("b4mm"); g.b4m = v("b4m");

        auto e = [&](Vertex p, Vertex q) { b_.add_edge(p, q); };
        std::string tg = "link:lit" + std::to_string(t);
        // hubs
        e(g.a, g.a1p); e(g.a, g.a1m);
        e(g.b, g.b1p); e(g.b, g.b1m);
        e(g.a4p, g.ap); e(g.a4m, g.ap);
        e(g.b4p, g.bp); e(g.b4m, g.bp);
        // left block cross edges
        e(g.a1p, g.a1pp);
        e(g.a1p, g.a1m); e(g.a1p, g.a1mm); e(g.a1p, g.b1m); e(g.a1p, g.b1mm);
        e(g.a1pp, g.a1m); e(g.a1pp, g.a1mm); e(g.a1pp, g.b1m); e(g.a1pp, g.b1mm);
        e(g.a1m, g.a1mm);
        e(g.a1m, g.b1p); e(g.a1m, g.b1pp);
        e(g.a1mm, g.b1p); e(g.a1mm, g.b1pp);
        e(g.b1p, g.b1pp);
        e(g.b1p, g.b1m); e(g.b1p, g.b1mm);
        e(g.b1pp, g.b1m); e(g.b1pp, g.b1mm);
        e(g.b1m, g.b1mm);
        // right block cross edges
        e(g.a4pp, g.a4p);
        e(g.a4pp, g.a4mm); e(g.a4pp, g.a4m); e(g.a4pp, g.b4mm); e(g.a4pp, g.b4m);
        e(g.a4p, g.a4mm); e(g.a4p, g.a4m); e(g.a4p, g.b4mm); e(g.a4p, g.b4m);
        e(g.a4mm, g.a4m);
        e(g.a4mm, g.b4pp); e(g.a4mm, g.b4p);
        e(g.a4m, g.b4pp); e(g.a4m, g.b4p);
        e(g.b4pp, g.b4p);
        e(g.b4pp, g.b4mm); e(g.b4pp, g.b4m);
        e(g.b4p, g.b4mm); e(g.b4p, g.b4m);
        e(g.b4mm, g.b4m);
        // mid rails
        e(g.a2p, g.a3p); e(g.a2m, g.a3m); e(g.b2p, g.b3p); e(g.b2m, g.b3m);
        // dashed stretches
        stretch_path(g.a1pp, g.a2p, tg + ":a_plus_left");
        stretch_path(g.a3p, g.a4pp, tg + ":a_plus_right");
        stretch_path(g.a1mm, g.a2m, tg + ":a_minus_left");
        stretch_path(g.a3m, g.a4mm, tg + ":a_minus_right");
        stretch_path(g.b1pp, g.b2p, tg + ":b_plus_left");
        stretch_path(g.b3p, g.b4pp, tg + ":b_plus_right");
        stretch_path(g.b1mm, g.b2m, tg + ":b_minus_left");
        stretch_path(g.b3m, g.b4mm, tg + ":b_minus_right");
        out_.lits.push_back(g);
    }

    void add_clause_gadget(int i) {
        auto v = [&](const char* nm) {
            return b_.add_vertex("cls:" + std::string(nm) + "[" + std::to_string(i) + "]");
        };
        ClauseGadget g;
        g.c0p = v("c0p"); g.c0m = v("c0m");
        g.c12p = v("c12p"); g.c12m = v("c12m");
        g.c1p = v("c1p"); g.c1m = v("c1m");
        g.c2p = v("c2p"); g.c2m = v("c2m");
        g.c3p = v("c3p"); g.c3m = v("c3m");
        std::string tg = "link:cls" + std::to_string(i);
        stretch_path(g.c0p, g.c12p, tg + ":c0p_c12p");
        stretch_path(g.c0p, g.c3p, tg + ":c0p_c3p");
        stretch_path(g.c12p, g.c1p, tg + ":c12p_c1p");
        stretch_path(g.c12p, g.c2p, tg + ":c12p_c2p");
        stretch_path(g.c0m, g.c12m, tg + ":c0m_c12m");
        stretch_path(g.c0m, g.c3m, tg + ":c0m_c3m");
        stretch_path(g.c12m, g.c1m, tg + ":c12m_c1m");
        stretch_path(g.c12m, g.c2m, tg + ":c12m_c2m");
        out_.clauses.push_back(g);
    }

    void add_variable_gadget(int var) {
        const int contacts = 2 * cnf_.m();
        auto v = [&](const std::string& nm) {
            return b_.add_vertex("var:" + nm + "[" + std::to_string(var) + "]");
        };
        VariableGadget g;
        g.dp = v("dp"); g.dm = v("dm");
        g.dpp = v("dpp"); g.dmp = v("dmp");
        g.dpm = v("dpm"); g.dmm = v("dmm");
        b_.add_edge(g.dp, g.dpp);
        b_.add_edge(g.dp, g.dpm);
        b_.add_edge(g.dmp, g.dm);
        b_.add_edge(g.dmm, g.dm);
        g.top_occ.assign(contacts, -1);
        g.bot_occ.assign(contacts, -1);
        std::string tg = "link:var" + std::to_string(var);
        for (int j = 0; j < contacts; ++j) {
            g.tp.push_back(v("tp[" + std::to_string(j) + "]"));
            g.tpp.push_back(v("tpp[" + std::to_string(j) + "]"));
            g.bm.push_back(v("bm[" + std::to_string(j) + "]"));
            g.bmm.push_back(v("bmm[" + std::to_string(j) + "]"));
        }
        Vertex prev = g.dpp;
        for (int j = 0; j < contacts; ++j) {
            stretch_path(prev, g.tp[j], tg + ":top" + std::to_string(j));
            top_full_.emplace_back(g.tp[j], g.tpp[j]); // full edge, may be rewired
            prev = g.tpp[j];
        }
        stretch_path(prev, g.dmp, tg + ":top_end");
        prev = g.dpm;
        for (int j = 0; j < contacts; ++j) {
            stretch_path(prev, g.bm[j], tg + ":bot" + std::to_string(j));
            bot_full_.emplace_back(g.bm[j], g.bmm[j]);
            prev = g.bmm[j];
        }
        stretch_path(prev, g.dmm, tg + ":bot_end");
        out_.vars.push_back(g);
    }

    // Occurrences are numbered in clause-major order. Negative occurrences
    // consume top-rail contacts, positive ones bottom-rail contacts; the
    // full edge disappears and the contact pair is tied to both ends of the
    // literal gadget's + rails (each contact endpoint to both a2p/a3p and
    // b2p/b3p, so the bridge can use either single vertex).
    void wire_occurrences() {
        const int contacts = 2 * cnf_.m();
        std::vector<int> neg_used(cnf_.n, 0), pos_used(cnf_.n, 0);
        for (int t = 0; t < 3 * cnf_.m(); ++t) {
            Literal lit = cnf_.clauses[t / 3][t % 3];
            VariableGadget& vg = out_.vars[lit.var];
            const LiteralGadget& lg = out_.lits[t];
            if (!lit.positive) {
                int j = neg_used[lit.var]++;
                if (j >= contacts)
                    throw std::invalid_argument(
                        "sat_to_idp: variable has more same-sign occurrences than rail contacts");
                drop_full_edge(top_full_, vg.tp[j], vg.tpp[j]);
                vg.top_occ[j] = t;
                b_.add_edge(vg.tp[j], lg.a2p);  b_.add_edge(vg.tp[j], lg.b2p);
                b_.add_edge(vg.tpp[j], lg.a3p); b_.add_edge(vg.tpp[j], lg.b3p);
                b_.add_edge(vg.tp[j], lg.a3p);  b_.add_edge(vg.tp[j], lg.b3p);
                b_.add_edge(vg.tpp[j], lg.a2p); b_.add_edge(vg.tpp[j], lg.b2p);
            } else {
                int j = pos_used[lit.var]++;
                if (j >= contacts)
                    throw std::invalid_argument(
                        "sat_to_idp: variable has more same-sign occurrences than rail contacts");
                drop_full_edge(bot_full_, vg.bm[j], vg.bmm[j]);
                vg.bot_occ[j] = t;
                b_.add_edge(vg.bm[j], lg.a2p);  b_.add_edge(vg.bm[j], lg.b2p);
                b_.add_edge(vg.bmm[j], lg.a3p); b_.add_edge(vg.bmm[j], lg.b3p);
                b_.add_edge(vg.bm[j], lg.a3p);  b_.add_edge(vg.bm[j], lg.b3p);
                b_.add_edge(vg.bmm[j], lg.a2p); b_.add_edge(vg.bmm[j], lg.b2p);
            }
        }
        for (const auto& [u, w] : top_full_) b_.add_edge(u, w);
        for (const auto& [u, w] : bot_full_) b_.add_edge(u, w);
    }

    // Each clause slot ties the - rails of its literal gadget to the c
    // branch vertices, again with both single-vertex bridges available.
    void wire_clauses() {
        for (int i = 0; i < cnf_.m(); ++i) {
            const ClauseGadget& cg = out_.clauses[i];
            const Vertex cp[3] = {cg.c1p, cg.c2p, cg.c3p};
            const Vertex cm[3] = {cg.c1m, cg.c2m, cg.c3m};
            for (int slot = 0; slot < 3; ++slot) {
                const LiteralGadget& lg = out_.lits[3 * i + slot];
                b_.add_edge(lg.a2m, cp[slot]); b_.add_edge(lg.a3m, cm[slot]);
                b_.add_edge(lg.b2m, cp[slot]); b_.add_edge(lg.b3m, cm[slot]);
                b_.add_edge(lg.a3m, cp[slot]); b_.add_edge(lg.a2m, cm[slot]);
                b_.add_edge(lg.b3m, cp[slot]); b_.add_edge(lg.b2m, cm[slot]);
            }
        }
    }

    void drop_full_edge(std::vector<Edge>& pool, Vertex u, Vertex w) {
        for (auto it = pool.begin(); it != pool.end(); ++it)
            if ((it->first == u && it->second == w) || (it->first == w && it->second == u)) {
                pool.erase(it);
                return;
            }
        throw std::logic_error("sat_to_idp: contact full edge already consumed");
    }

    CnfFormula cnf_;
    int stretch_len_;
    GraphBuilder b_;
    SatGraph out_;
    std::vector<Edge> top_full_, bot_full_; // pending full edges, added at the end
};

inline SatGraph build_sat_graph(const CnfFormula& cnf, int ell) {
    return Builder(cnf, ell).build();
}

} // namespace satgadget

/// Replays the hole selection for a satisfying assignment and returns the
/// vertex set, verified to induce a single cycle through x and y (every
/// chosen vertex has exactly two chosen neighbors and the set is
/// connected). Selection: terminals; all rail hubs; per-literal +/- rails
/// by satisfaction (both the a and b side); per-variable top or bottom
/// rail with exactly one of a2p/a3p as the bridge at each rewired contact;
/// per-clause c0 vertices plus the branch of one satisfied literal with a
/// single a2m bridge.
inline std::vector<Vertex> witness_from_assignment(const CnfFormula& cnf, int ell,
                                                   const std::vector<bool>& assignment) {
    cnf.validate();
    if (static_cast<int>(assignment.size()) != cnf.n)
        throw std::invalid_argument("witness: assignment size mismatch");
    if (!cnf.satisfied_by(assignment))
        throw std::invalid_argument("witness: assignment does not satisfy the formula");

    satgadget::SatGraph sg = satgadget::build_sat_graph(cnf, ell);
    std::set<Vertex> chosen;
    auto pick = [&](Vertex v) {
        if (!chosen.insert(v).second)
            throw std::logic_error("witness: duplicate rail selection (construction bug)");
    };

    auto literal_true = [&](int t) {
        Literal lit = cnf.clauses[t / 3][t % 3];
        return assignment[lit.var] == lit.positive;
    };

    pick(sg.x);
    pick(sg.y);
    for (const auto& lg : sg.lits) {
        pick(lg.a); pick(lg.ap); pick(lg.b); pick(lg.bp);
    }
    for (int t = 0; t < 3 * cnf.m(); ++t) {
        const auto& lg = sg.lits[t];
        if (literal_true(t)) {
            for (Vertex v : {lg.a1p, lg.a1pp, lg.a2p, lg.a3p, lg.a4pp, lg.a4p}) pick(v);
            for (Vertex v : {lg.b1p, lg.b1pp, lg.b2p, lg.b3p, lg.b4pp, lg.b4p}) pick(v);
        } else {
            for (Vertex v : {lg.a1m, lg.a1mm, lg.a2m, lg.a3m, lg.a4mm, lg.a4m}) pick(v);
            for (Vertex v : {lg.b1m, lg.b1mm, lg.b2m, lg.b3m, lg.b4mm, lg.b4m}) pick(v);
        }
    }
    for (int var = 0; var < cnf.n; ++var) {
        const auto& vg = sg.vars[var];
        pick(vg.dp);
        pick(vg.dm);
        if (assignment[var]) {
            pick(vg.dpp);
            pick(vg.dmp);
            for (size_t j = 0; j < vg.tp.size(); ++j) {
                pick(vg.tp[j]);
                pick(vg.tpp[j]);
                if (vg.top_occ[j] >= 0) pick(sg.lits[vg.top_occ[j]].a2p); // bridge
            }
        } else {
            pick(vg.dpm);
            pick(vg.dmm);
            for (size_t j = 0; j < vg.bm.size(); ++j) {
                pick(vg.bm[j]);
                pick(vg.bmm[j]);
                if (vg.bot_occ[j] >= 0) pick(sg.lits[vg.bot_occ[j]].a2p);
            }
        }
    }
    for (int i = 0; i < cnf.m(); ++i) {
        const auto& cg = sg.clauses[i];
        pick(cg.c0p);
        pick(cg.c0m);
        int slot = -1;
        for (int s = 0; s < 3; ++s)
            if (literal_true(3 * i + s)) {
                slot = s;
                break;
            }
        if (slot < 0) throw std::logic_error("witness: satisfied formula with unsatisfied clause");
        const auto& lg = sg.lits[3 * i + slot];
        if (slot == 0) {
            pick(cg.c12p); pick(cg.c1p); pick(cg.c1m); pick(cg.c12m);
        } else if (slot == 1) {
            pick(cg.c12p); pick(cg.c2p); pick(cg.c2m); pick(cg.c12m);
        } else {
            pick(cg.c3p); pick(cg.c3m);
        }
        pick(lg.a2m); // one of a2m/a3m bridges the c branch
    }
    // internals of every traversed length-l stretch
    for (const auto& [key, internal] : sg.stretch) {
        if (!chosen.count(key.first) || !chosen.count(key.second)) continue;
        for (Vertex v : internal) pick(v);
    }

    // verify: induced degree two everywhere, connected, contains x and y
    const Graph& g = sg.graph;
    for (Vertex v : chosen) {
        int deg = 0;
        for (Vertex w : g.neighbors(v)) deg += chosen.count(w) ? 1 : 0;
        if (deg != 2)
            throw std::logic_error("witness: selected set is not a cycle (degree != 2 at " +
                                   g.label(v) + ")");
    }
    std::vector<Vertex> stack{sg.x};
    std::set<Vertex> seen{sg.x};
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v))
            if (chosen.count(w) && !seen.count(w)) {
                seen.insert(w);
                stack.push_back(w);
            }
    }
    if (seen.size() != chosen.size())
        throw std::logic_error("witness: selected set is not a single cycle");
    if (!chosen.count(sg.x) || !chosen.count(sg.y) || chosen.size() < 4)
        throw std::logic_error("witness: cycle misses a terminal");
    return std::vector<Vertex>(chosen.begin(), chosen.end());
}

/// Compile a 3-CNF into a two-pair instance: build G^l_phi, then replace
/// its degree-2 terminals x,y by the cycle_to_idp gadgets, subdividing the
/// gadget edges just enough to keep the composition C6-free and H_i-free
/// for i in [l] (searched over 0..2l, recorded in meta).
inline ReductionArtifact sat_to_idp(const CnfFormula& cnf, int ell) {
    satgadget::SatGraph sg = satgadget::build_sat_graph(cnf, ell);

    std::vector<Pattern> forbidden{Pattern::cycle(6)};
    for (int i = 1; i <= ell; ++i) forbidden.push_back(Pattern::h_graph(i));

    for (int sub = 0; sub <= 2 * ell; ++sub) {
        ReductionArtifact art = cycle_to_idp(sg.graph, sg.x, sg.y, sub);
        bool free = true;
        for (const auto& p : forbidden)
            if (!is_h_free(art.instance.graph, p)) {
                free = false;
                break;
            }
        if (!free) continue;
        art.meta.source_kind = "sat";
        art.meta.source_text = to_dimacs(cnf);
        art.meta.source_digest = fnv1a_digest(art.meta.source_text);
        art.meta.params = {{"l", ell},
                           {"stretch", ell + 1},
                           {"subdivisions", sub},
                           {"n", cnf.n},
                           {"m", cnf.m()}};
        return art;
    }
    throw std::runtime_error("sat_to_idp: no subdivision count in 0..2l passes freeness certification");
}

/// expected_answer via the SAT oracle; satisfiable formulas additionally
/// carry a verified hole witness, so the provenance is "witness".
inline void populate_expected_sat(ReductionArtifact& art, const CnfFormula& cnf, int ell) {
    auto assignment = sat_solve(cnf);
    if (assignment) {
        witness_from_assignment(cnf, ell, *assignment); // throws unless verified
        art.meta.expected_answer = true;
        art.meta.answer_provenance = "witness";
    } else {
        art.meta.expected_answer = false;
        art.meta.answer_provenance = "oracle";
    }
}

} // namespace idp

#endif
