#ifndef SATN_FORMULA_HPP
#define SATN_FORMULA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace satn {

// A literal is a 1-based variable index plus a polarity.
struct Literal {
    int var = 1;
    bool negated = false;

    Literal() = default;
    Literal(int v, bool neg) : var(v), negated(neg) {}

    // From DIMACS convention: -3 means (var 3, negated).
    static Literal from_dimacs(int code);
    int to_dimacs() const { return negated ? -var : var; }

    Literal complement() const { return Literal(var, !negated); }

    bool operator==(const Literal&) const = default;
    auto operator<=>(const Literal&) const = default;
};

// Literal order inside a clause is significant: evaluation traces
// depend on it, so a Clause is a plain ordered sequence.
struct Clause {
    std::vector<Literal> literals;

    Clause() = default;
    Clause(std::initializer_list<Literal> lits) : literals(lits) {}
    explicit Clause(std::vector<Literal> lits) : literals(std::move(lits)) {}

    std::size_t size() const { return literals.size(); }

    bool is_tautological() const;
    // k distinct variables, no repeats.
    bool is_full(int width) const;
    // Multiset equality over literals; clause order inside stays free.
    bool same_literal_multiset(const Clause& other) const;

    bool operator==(const Clause&) const = default;
};

// CNF instance. declared_vars may exceed the number of variables that
// actually occur (a DIMACS header only bounds the index).
struct Formula {
    std::vector<Clause> clauses;
    int declared_vars = 0;

    Formula() = default;
    Formula(std::vector<Clause> cs, int n)
        : clauses(std::move(cs)), declared_vars(n) {}

    std::size_t clause_count() const { return clauses.size(); }
    // Occurrence count of a variable (positive + negative), over all
    // literal positions.
    int occurrences(int var) const;
    int max_occurrences() const;
    // Largest variable index actually present, 0 when empty.
    int max_var() const;

    bool operator==(const Formula&) const = default;
};

// Strictly order-preserving relabeling old index -> new index.
struct VarMap {
    std::vector<std::pair<int, int>> pairs;

    bool is_identity() const;
    int apply(int old_var) const;
};

struct NormalReport {
    std::vector<int> tautological_clause_positions;  // 1-based
    std::vector<int> duplicate_clause_positions;
    std::vector<int> non_full_clause_positions;
    bool is_normal = false;
};

// --- DIMACS ------------------------------------------------------------

struct ParseError {
    int line = 0;
    std::string message;
};

class DimacsError : public std::exception {
public:
    explicit DimacsError(ParseError err);
    const char* what() const noexcept override { return what_.c_str(); }
    const ParseError& error() const { return err_; }

private:
    ParseError err_;
    std::string what_;
};

Formula parse_dimacs(const std::string& text);
std::string emit_dimacs(const Formula& f);

// --- Normal-form machinery ---------------------------------------------

// Order-preserving compaction onto indices 1..n where n is the number
// of distinct occurring variables. Identity on already-contiguous input.
std::pair<Formula, VarMap> compact_variables(const Formula& f);

NormalReport inspect_normal(const Formula& f, int width);

// Convenience: normal expression at the given clause width.
bool is_normal(const Formula& f, int width);

}  // namespace satn

#endif  // SATN_FORMULA_HPP
