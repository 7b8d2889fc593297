#include "satn/formula.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

namespace satn {

Literal Literal::from_dimacs(int code) {
    return Literal(std::abs(code), code < 0);
}

bool Clause::is_tautological() const {
    for (std::size_t i = 0; i < literals.size(); ++i)
        for (std::size_t j = i + 1; j < literals.size(); ++j)
            if (literals[i].var == literals[j].var &&
                literals[i].negated != literals[j].negated)
                return true;
    return false;
}

bool Clause::is_full(int width) const {
    std::set<int> vars;
    for (const Literal& lit : literals) vars.insert(lit.var);
    return static_cast<int>(vars.size()) == width &&
           vars.size() == literals.size();
}

bool Clause::same_literal_multiset(const Clause& other) const {
    if (literals.size() != other.literals.size()) return false;
    std::vector<Literal> a = literals, b = other.literals;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

int Formula::occurrences(int var) const {
    int count = 0;
    for (const Clause& c : clauses)
        for (const Literal& lit : c.literals)
            if (lit.var == var) ++count;
    return count;
}

int Formula::max_occurrences() const {
    std::map<int, int> counts;
    for (const Clause& c : clauses)
        for (const Literal& lit : c.literals) ++counts[lit.var];
    int best = 0;
    for (const auto& [var, n] : counts) best = std::max(best, n);
    return best;
}

int Formula::max_var() const {
    int best = 0;
    for (const Clause& c : clauses)
        for (const Literal& lit : c.literals) best = std::max(best, lit.var);
    return best;
}

bool VarMap::is_identity() const {
    for (const auto& [from, to] : pairs)
        if (from != to) return false;
    return true;
}

int VarMap::apply(int old_var) const {
    for (const auto& [from, to] : pairs)
        if (from == old_var) return to;
    return old_var;
}

DimacsError::DimacsError(ParseError err) : err_(std::move(err)) {
    std::ostringstream os;
    os << "line " << err_.line << ": " << err_.message;
    what_ = os.str();
}

Formula parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int declared_vars = -1, declared_clauses = -1;
    Formula f;
    std::vector<Literal> pending;
    bool open_clause = false;
    int last_lit_line = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == 'c') continue;
        if (line[0] == 'p') {
            std::istringstream hs(line);
            std::string p, cnf;
            if (!(hs >> p >> cnf >> declared_vars >> declared_clauses) ||
                cnf != "cnf" || declared_vars < 0 || declared_clauses < 0)
                throw DimacsError({line_no, "malformed header: " + line});
            f.declared_vars = declared_vars;
            continue;
        }
        if (declared_vars < 0)
            throw DimacsError({line_no, "clause before 'p cnf' header"});
        std::istringstream ls(line);
        int code;
        while (ls >> code) {
            if (code == 0) {
                if (pending.empty())
                    throw DimacsError({line_no, "empty clause"});
                f.clauses.emplace_back(pending);
                pending.clear();
                open_clause = false;
                continue;
            }
            int var = std::abs(code);
            if (var > declared_vars) {
                std::ostringstream os;
                os << "literal " << code << " exceeds declared variable count "
                   << declared_vars;
                throw DimacsError({line_no, os.str()});
            }
            pending.push_back(Literal::from_dimacs(code));
            open_clause = true;
            last_lit_line = line_no;
        }
        if (!ls.eof()) throw DimacsError({line_no, "unreadable token: " + line});
    }
    if (open_clause)
        throw DimacsError({last_lit_line, "clause missing 0 terminator"});
    return f;
}

std::string emit_dimacs(const Formula& f) {
    std::ostringstream os;
    os << "p cnf " << f.declared_vars << ' ' << f.clauses.size() << '\n';
    for (const Clause& c : f.clauses) {
        for (const Literal& lit : c.literals) os << lit.to_dimacs() << ' ';
        os << "0\n";
    }
    return os.str();
}

std::pair<Formula, VarMap> compact_variables(const Formula& f) {
    std::set<int> occurring;
    for (const Clause& c : f.clauses)
        for (const Literal& lit : c.literals) occurring.insert(lit.var);

    VarMap map;
    std::map<int, int> lookup;
    int next = 1;
    for (int v : occurring) {
        map.pairs.emplace_back(v, next);
        lookup[v] = next;
        ++next;
    }

    Formula out;
    out.declared_vars = static_cast<int>(occurring.size());
    for (const Clause& c : f.clauses) {
        Clause nc;
        for (const Literal& lit : c.literals)
            nc.literals.emplace_back(lookup[lit.var], lit.negated);
        out.clauses.push_back(std::move(nc));
    }

    // Already contiguous: keep the input untouched, identity map.
    if (map.is_identity() && out.declared_vars == f.declared_vars)
        return {f, map};
    return {out, map};
}

NormalReport inspect_normal(const Formula& f, int width) {
    NormalReport report;
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
        const Clause& c = f.clauses[i];
        int pos = static_cast<int>(i) + 1;
        if (c.is_tautological())
            report.tautological_clause_positions.push_back(pos);
        if (!c.is_full(width)) report.non_full_clause_positions.push_back(pos);
        for (std::size_t j = 0; j < i; ++j) {
            if (c.same_literal_multiset(f.clauses[j])) {
                report.duplicate_clause_positions.push_back(pos);
                break;
            }
        }
    }
    report.is_normal = report.tautological_clause_positions.empty() &&
                       report.duplicate_clause_positions.empty() &&
                       report.non_full_clause_positions.empty();
    return report;
}

bool is_normal(const Formula& f, int width) {
    return inspect_normal(f, width).is_normal;
}

}  // namespace satn
