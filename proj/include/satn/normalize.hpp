#ifndef SATN_NORMALIZE_HPP
#define SATN_NORMALIZE_HPP

#include <string>
#include <vector>

#include "satn/formula.hpp"

namespace satn {

// Hands out variable indices strictly above everything seen so far.
class FreshVarAllocator {
public:
    explicit FreshVarAllocator(int first_free) : next_(first_free) {}

    int allocate() { return next_++; }
    int next_index() const { return next_; }

private:
    int next_;
};

enum class TransformKind {
    TautologyRemoved,
    DuplicateRemoved,
    RepeatStripped,
    UnitExpanded,
    BinaryExpanded,
};

struct TransformRecord {
    TransformKind kind;
    int clause_position = 0;  // 1-based position in the formula at that stage
    std::vector<int> introduced_vars;
    int introduced_clauses = 0;
};

std::string to_string(TransformKind kind);
// Certificate line: `KIND pos=<i> vars=<list> clauses=<k>`.
std::string format_record(const TransformRecord& r);

// Pipeline stages, in the order they must run.
std::pair<Formula, std::vector<TransformRecord>> remove_tautologies(
    const Formula& f);
std::pair<Formula, std::vector<TransformRecord>> dedup_clauses(
    const Formula& f);
// Requires tautology-free input; throws std::logic_error otherwise.
std::pair<Formula, std::vector<TransformRecord>> strip_repeated_variables(
    const Formula& f);

// Nine three-literal clauses forcing literal `target` true. Allocates six
// fresh variables in the order a1, b1, d1, a2, b2, d2.
std::vector<Clause> unit_gadget(Literal target, FreshVarAllocator& alloc);

// Five three-literal clauses forcing (x v y) true. Allocates a, b, d.
// x and y must be on distinct variables.
std::vector<Clause> binary_gadget(Literal x, Literal y,
                                  FreshVarAllocator& alloc);

// Full reduction of a width-<=3 formula to an equisatisfiable normal
// width-3 formula. Throws std::invalid_argument on a wider clause.
std::pair<Formula, std::vector<TransformRecord>> normalize(const Formula& f);

}  // namespace satn

#endif  // SATN_NORMALIZE_HPP
