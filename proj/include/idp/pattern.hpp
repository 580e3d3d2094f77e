#ifndef IDP_PATTERN_HPP
#define IDP_PATTERN_HPP

#include <cctype>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "idp/graph.hpp"

namespace idp {

/// Parametric named forbidden graph. `chair` is SubdividedClaw 1,1,2 and
/// `claw` is Star 3; unions hold their components in listed order.
struct Pattern {
    enum class Kind { Path, Cycle, Star, SubdividedClaw, HGraph, Union };

    Kind kind = Kind::Path;
    int a = 0, b = 0, c = 0;         // Path/Cycle/Star/HGraph use a; S uses a,b,c
    std::vector<Pattern> parts;      // Union only

    static Pattern path(int r) { return {Kind::Path, r, 0, 0, {}}; }
    static Pattern cycle(int r) { return {Kind::Cycle, r, 0, 0, {}}; }
    static Pattern star(int r) { return {Kind::Star, r, 0, 0, {}}; }
    static Pattern subdivided_claw(int h, int i, int j) { return {Kind::SubdividedClaw, h, i, j, {}}; }
    static Pattern h_graph(int ell) { return {Kind::HGraph, ell, 0, 0, {}}; }
    static Pattern claw() { return star(3); }
    static Pattern chair() { return subdivided_claw(1, 1, 2); }

    static Pattern union_of(std::vector<Pattern> ps) {
        Pattern p;
        p.kind = Kind::Union;
        p.parts = std::move(ps);
        return p;
    }

    void validate() const {
        switch (kind) {
        case Kind::Path:
            if (a < 1) throw std::invalid_argument("pattern: P_r needs r >= 1");
            break;
        case Kind::Cycle:
            if (a < 3) throw std::invalid_argument("pattern: C_r needs r >= 3");
            break;
        case Kind::Star:
            if (a < 1) throw std::invalid_argument("pattern: K_{1,r} needs r >= 1");
            break;
        case Kind::SubdividedClaw:
            if (!(1 <= a && a <= b && b <= c))
                throw std::invalid_argument("pattern: S_{h,i,j} needs 1 <= h <= i <= j");
            break;
        case Kind::HGraph:
            if (a < 1) throw std::invalid_argument("pattern: H_l needs l >= 1");
            break;
        case Kind::Union:
            if (parts.empty()) throw std::invalid_argument("pattern: empty union");
            for (const auto& p : parts) {
                if (p.kind == Kind::Union) throw std::invalid_argument("pattern: nested union");
                p.validate();
            }
            break;
        }
    }

    friend bool operator==(const Pattern& x, const Pattern& y) {
        return x.kind == y.kind && x.a == y.a && x.b == y.b && x.c == y.c && x.parts == y.parts;
    }

    int vertex_count() const {
        switch (kind) {
        case Kind::Path: return a;
        case Kind::Cycle: return a;
        case Kind::Star: return a + 1;
        case Kind::SubdividedClaw: return 1 + a + b + c;
        case Kind::HGraph: return a + 5;
        case Kind::Union: {
            int total = 0;
            for (const auto& p : parts) total += p.vertex_count();
            return total;
        }
        }
        return 0;
    }
};

/// Canonical realization:
///   Path:  0..r-1 in order.             Cycle: 0..r-1 around the cycle.
///   Star:  center 0, leaves 1..r.
///   S_{h,i,j}: center 0, then the three legs in h,i,j order.
///   H_l:   crossing path 0..l first, then pendants l+1,l+2 at 0 and
///          l+3,l+4 at l.
///   Union: components in listed order with id offsets.
inline Graph realize(const Pattern& p) {
    p.validate();
    std::vector<Edge> edges;
    switch (p.kind) {
    case Pattern::Kind::Path:
        for (int i = 0; i + 1 < p.a; ++i) edges.emplace_back(i, i + 1);
        return Graph(p.a, edges);
    case Pattern::Kind::Cycle:
        for (int i = 0; i < p.a; ++i) edges.emplace_back(i, (i + 1) % p.a);
        return Graph(p.a, edges);
    case Pattern::Kind::Star:
        for (int i = 1; i <= p.a; ++i) edges.emplace_back(0, i);
        return Graph(p.a + 1, edges);
    case Pattern::Kind::SubdividedClaw: {
        int next = 1;
        for (int len : {p.a, p.b, p.c}) {
            int prev = 0;
            for (int i = 0; i < len; ++i) {
                edges.emplace_back(prev, next);
                prev = next++;
            }
        }
        return Graph(next, edges);
    }
    case Pattern::Kind::HGraph: {
        int ell = p.a;
        for (int i = 0; i < ell; ++i) edges.emplace_back(i, i + 1);
        edges.emplace_back(0, ell + 1);
        edges.emplace_back(0, ell + 2);
        edges.emplace_back(ell, ell + 3);
        edges.emplace_back(ell, ell + 4);
        return Graph(ell + 5, edges);
    }
    case Pattern::Kind::Union: {
        int offset = 0;
        for (const auto& part : p.parts) {
            Graph g = realize(part);
            for (const auto& [u, v] : g.edges()) edges.emplace_back(u + offset, v + offset);
            offset += g.vertex_count();
        }
        return Graph(offset, edges);
    }
    }
    throw std::logic_error("realize: unreachable");
}

namespace detail {

inline Pattern parse_pattern_token(const std::string& tok) {
    if (tok.empty()) throw std::invalid_argument("pattern: empty token");
    std::string lower;
    for (char ch : tok) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    if (lower == "chair") return Pattern::chair();
    if (lower == "claw") return Pattern::claw();

    char kind = lower[0];
    std::vector<int> params;
    std::string rest = lower.substr(1);
    if (rest.empty()) throw std::invalid_argument("pattern: missing parameters in '" + tok + "'");
    std::istringstream ps(rest);
    std::string field;
    while (std::getline(ps, field, ',')) {
        if (field.empty() || field.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("pattern: bad parameter in '" + tok + "'");
        params.push_back(std::stoi(field));
    }

    Pattern p;
    switch (kind) {
    case 'p':
        if (params.size() != 1) throw std::invalid_argument("pattern: P takes one parameter");
        p = Pattern::path(params[0]);
        break;
    case 'c':
        if (params.size() != 1) throw std::invalid_argument("pattern: C takes one parameter");
        p = Pattern::cycle(params[0]);
        break;
    case 'k':
        if (params.size() != 2 || params[0] != 1)
            throw std::invalid_argument("pattern: stars are K1,<r>");
        p = Pattern::star(params[1]);
        break;
    case 's':
        if (params.size() != 3) throw std::invalid_argument("pattern: S takes three parameters");
        p = Pattern::subdivided_claw(params[0], params[1], params[2]);
        break;
    case 'h':
        if (params.size() != 1) throw std::invalid_argument("pattern: H takes one parameter");
        p = Pattern::h_graph(params[0]);
        break;
    default:
        throw std::invalid_argument("pattern: unknown kind '" + tok + "'");
    }
    p.validate();
    return p;
}

} // namespace detail

/// Grammar: whitespace-free, case-insensitive kind token with decimal
/// parameters; '+' joins union components. Examples: P7, C6, K1,4, S1,1,2,
/// chair, claw, H3, P3+chair. A leading-digit multiplier (2K1,3) expands to
/// that many copies.
inline Pattern parse_pattern(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("pattern: empty string");
    std::vector<Pattern> parts;
    std::istringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, '+')) {
        size_t digits = 0;
        while (digits < tok.size() && std::isdigit(static_cast<unsigned char>(tok[digits]))) ++digits;
        int copies = 1;
        std::string body = tok;
        // "2K1,3" style multiplier: digits followed by a letter.
        if (digits > 0 && digits < tok.size() &&
            std::isalpha(static_cast<unsigned char>(tok[digits]))) {
            copies = std::stoi(tok.substr(0, digits));
            body = tok.substr(digits);
            if (copies < 1) throw std::invalid_argument("pattern: zero multiplier");
        }
        Pattern p = detail::parse_pattern_token(body);
        for (int i = 0; i < copies; ++i) parts.push_back(p);
    }
    if (parts.empty()) throw std::invalid_argument("pattern: empty string");
    if (parts.size() == 1) return parts[0];
    return Pattern::union_of(std::move(parts));
}

inline std::string pattern_to_string(const Pattern& p) {
    switch (p.kind) {
    case Pattern::Kind::Path: return "P" + std::to_string(p.a);
    case Pattern::Kind::Cycle: return "C" + std::to_string(p.a);
    case Pattern::Kind::Star: return "K1," + std::to_string(p.a);
    case Pattern::Kind::SubdividedClaw:
        return "S" + std::to_string(p.a) + "," + std::to_string(p.b) + "," + std::to_string(p.c);
    case Pattern::Kind::HGraph: return "H" + std::to_string(p.a);
    case Pattern::Kind::Union: {
        std::string out;
        for (size_t i = 0; i < p.parts.size(); ++i) {
            if (i) out += "+";
            out += pattern_to_string(p.parts[i]);
        }
        return out;
    }
    }
    return {};
}

} // namespace idp

#endif
