#ifndef IDP_SAT_HPP
#define IDP_SAT_HPP

#include <array>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace idp {

struct Literal {
    int var = 0;          // 0-based variable index
    bool positive = true;

    friend bool operator==(const Literal& a, const Literal& b) {
        return a.var == b.var && a.positive == b.positive;
    }
    friend bool operator<(const Literal& a, const Literal& b) {
        return a.var != b.var ? a.var < b.var : a.positive < b.positive;
    }
};

/// 3-CNF with exactly three literal slots per clause (duplicates allowed).
struct CnfFormula {
    int n = 0; // variable count
    std::vector<std::array<Literal, 3>> clauses;

    int m() const { return static_cast<int>(clauses.size()); }

    void validate() const {
        if (n < 0) throw std::invalid_argument("cnf: negative variable count");
        for (const auto& cl : clauses)
            for (const auto& lit : cl)
                if (lit.var < 0 || lit.var >= n)
                    throw std::invalid_argument("cnf: literal variable out of range");
    }

    bool satisfied_by(const std::vector<bool>& assignment) const {
        for (const auto& cl : clauses) {
            bool sat = false;
            for (const auto& lit : cl)
                if (assignment[lit.var] == lit.positive) {
                    sat = true;
                    break;
                }
            if (!sat) return false;
        }
        return true;
    }
};

namespace detail {

inline bool sat_search(const CnfFormula& cnf, std::vector<bool>& assignment, int var) {
    // prune: any clause with all three literals decided and false kills the branch
    for (const auto& cl : cnf.clauses) {
        bool open = false, sat = false;
        for (const auto& lit : cl) {
            if (lit.var >= var) {
                open = true;
            } else if (assignment[lit.var] == lit.positive) {
                sat = true;
                break;
            }
        }
        if (!sat && !open) return false;
    }
    if (var == cnf.n) return true;
    for (bool value : {false, true}) {
        assignment[var] = value;
        if (sat_search(cnf, assignment, var + 1)) return true;
    }
    return false;
}

} // namespace detail

/// Desk-scale exact SAT decision; returns a satisfying assignment or nothing.
inline std::optional<std::vector<bool>> sat_solve(const CnfFormula& cnf) {
    cnf.validate();
    std::vector<bool> assignment(cnf.n, false);
    if (detail::sat_search(cnf, assignment, 0)) return assignment;
    return std::nullopt;
}

/// DIMACS cnf reader restricted to three literals per clause.
inline CnfFormula parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    CnfFormula cnf;
    long declared_m = -1;
    std::vector<long> pending;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c") continue;
        if (tok == "p") {
            std::string fmt;
            long n = 0, m = 0;
            if (!(ls >> fmt >> n >> m) || fmt != "cnf" || n < 0 || m < 0)
                throw std::invalid_argument("dimacs: malformed problem line");
            cnf.n = static_cast<int>(n);
            declared_m = m;
            continue;
        }
        ls.clear();
        ls.str(line);
        long v;
        while (ls >> v) pending.push_back(v);
    }
    if (declared_m < 0) throw std::invalid_argument("dimacs: missing problem line");
    std::array<Literal, 3> clause{};
    int slot = 0;
    for (long v : pending) {
        if (v == 0) {
            if (slot != 3) throw std::invalid_argument("dimacs: clause must have exactly 3 literals");
            cnf.clauses.push_back(clause);
            slot = 0;
            continue;
        }
        if (slot == 3) throw std::invalid_argument("dimacs: clause must have exactly 3 literals");
        long var = (v > 0 ? v : -v) - 1;
        if (var >= cnf.n) throw std::invalid_argument("dimacs: literal out of range");
        clause[slot++] = Literal{static_cast<int>(var), v > 0};
    }
    if (slot != 0) throw std::invalid_argument("dimacs: unterminated clause");
    if (cnf.m() != declared_m) throw std::invalid_argument("dimacs: clause count mismatch");
    cnf.validate();
    return cnf;
}

inline std::string to_dimacs(const CnfFormula& cnf) {
    std::ostringstream out;
    out << "p cnf " << cnf.n << ' ' << cnf.m() << '\n';
    for (const auto& cl : cnf.clauses) {
        for (const auto& lit : cl) out << (lit.positive ? lit.var + 1 : -(lit.var + 1)) << ' ';
        out << "0\n";
    }
    return out.str();
}

} // namespace idp

#endif
