#include "satn/normalize.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace satn {

std::string to_string(TransformKind kind) {
    switch (kind) {
        case TransformKind::TautologyRemoved: return "TAUTOLOGY_REMOVED";
        case TransformKind::DuplicateRemoved: return "DUPLICATE_REMOVED";
        case TransformKind::RepeatStripped: return "REPEAT_STRIPPED";
        case TransformKind::UnitExpanded: return "UNIT_EXPANDED";
        case TransformKind::BinaryExpanded: return "BINARY_EXPANDED";
    }
    return "?";
}

std::string format_record(const TransformRecord& r) {
    std::ostringstream os;
    os << to_string(r.kind) << " pos=" << r.clause_position << " vars=";
    for (std::size_t i = 0; i < r.introduced_vars.size(); ++i) {
        if (i) os << ',';
        os << r.introduced_vars[i];
    }
    os << " clauses=" << r.introduced_clauses;
    return os.str();
}

std::pair<Formula, std::vector<TransformRecord>> remove_tautologies(
    const Formula& f) {
    Formula out;
    out.declared_vars = f.declared_vars;
    std::vector<TransformRecord> records;
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
        if (f.clauses[i].is_tautological()) {
            records.push_back({TransformKind::TautologyRemoved,
                               static_cast<int>(i) + 1, {}, 0});
        } else {
            out.clauses.push_back(f.clauses[i]);
        }
    }
    return {out, records};
}

std::pair<Formula, std::vector<TransformRecord>> dedup_clauses(
    const Formula& f) {
    Formula out;
    out.declared_vars = f.declared_vars;
    std::vector<TransformRecord> records;
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
        bool seen = false;
        for (const Clause& kept : out.clauses)
            if (f.clauses[i].same_literal_multiset(kept)) {
                seen = true;
                break;
            }
        if (seen) {
            records.push_back({TransformKind::DuplicateRemoved,
                               static_cast<int>(i) + 1, {}, 0});
        } else {
            out.clauses.push_back(f.clauses[i]);
        }
    }
    return {out, records};
}

std::pair<Formula, std::vector<TransformRecord>> strip_repeated_variables(
    const Formula& f) {
    Formula out;
    out.declared_vars = f.declared_vars;
    std::vector<TransformRecord> records;
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
        const Clause& c = f.clauses[i];
        if (c.is_tautological())
            throw std::logic_error(
                "strip_repeated_variables: tautological clause at position " +
                std::to_string(i + 1) + "; run remove_tautologies first");
        Clause stripped;
        std::set<int> seen;
        for (const Literal& lit : c.literals)
            if (seen.insert(lit.var).second) stripped.literals.push_back(lit);
        if (stripped.size() != c.size())
            records.push_back({TransformKind::RepeatStripped,
                               static_cast<int>(i) + 1, {}, 0});
        out.clauses.push_back(std::move(stripped));
    }
    return {out, records};
}

std::vector<Clause> unit_gadget(Literal target, FreshVarAllocator& alloc) {
    // Fresh names per forcing instance: a1, b1, d1, a2, b2, d2.
    int a[2], b[2], d[2];
    for (int j = 0; j < 2; ++j) {
        a[j] = alloc.allocate();
        b[j] = alloc.allocate();
        d[j] = alloc.allocate();
    }
    const Literal not_target = target.complement();
    std::vector<Clause> clauses;
    for (int j = 0; j < 2; ++j)
        clauses.push_back({target, {a[j], false}, {b[j], false}});
    for (int j = 0; j < 2; ++j) {
        clauses.push_back({{d[j], false}, {a[j], true}, {b[j], true}});
        clauses.push_back({{d[j], false}, {a[j], true}, {b[j], false}});
        clauses.push_back({{d[j], false}, {a[j], false}, {b[j], true}});
    }
    // Closing clause carries the complement of the complemented target,
    // i.e. the target literal itself.
    clauses.push_back({{d[0], true}, {d[1], true}, not_target.complement()});
    return clauses;
}

std::vector<Clause> binary_gadget(Literal x, Literal y,
                                  FreshVarAllocator& alloc) {
    if (x.var == y.var)
        throw std::invalid_argument("binary_gadget: literals share a variable");
    int a = alloc.allocate();
    int b = alloc.allocate();
    int d = alloc.allocate();
    std::vector<Clause> clauses;
    clauses.push_back({x, y, {a, false}});
    clauses.push_back({{d, false}, {a, true}, {b, true}});
    clauses.push_back({{d, false}, {a, true}, {b, false}});
    clauses.push_back({{d, false}, {a, false}, {b, true}});
    clauses.push_back({{d, true}, x, y});
    return clauses;
}

std::pair<Formula, std::vector<TransformRecord>> normalize(const Formula& f) {
    for (std::size_t i = 0; i < f.clauses.size(); ++i)
        if (f.clauses[i].size() > 3)
            throw std::invalid_argument(
                "normalize: clause " + std::to_string(i + 1) +
                " has more than 3 literals; input is not 3SAT");

    std::vector<TransformRecord> records;
    auto append = [&records](std::vector<TransformRecord> more) {
        records.insert(records.end(), more.begin(), more.end());
    };

    auto [no_taut, r1] = remove_tautologies(f);
    append(std::move(r1));
    auto [deduped, r2] = dedup_clauses(no_taut);
    append(std::move(r2));
    auto [stripped, r3] = strip_repeated_variables(deduped);
    append(std::move(r3));
    // Stripping can merge e.g. (x v x v y) with (x v y); dedup again.
    auto [clean, r4] = dedup_clauses(stripped);
    append(std::move(r4));

    FreshVarAllocator alloc(std::max(clean.declared_vars, clean.max_var()) + 1);
    Formula out;
    out.declared_vars = clean.declared_vars;
    for (std::size_t i = 0; i < clean.clauses.size(); ++i) {
        const Clause& c = clean.clauses[i];
        if (c.size() == 3) {
            out.clauses.push_back(c);
        } else if (c.size() == 2) {
            int first_fresh = alloc.next_index();
            auto gadget = binary_gadget(c.literals[0], c.literals[1], alloc);
            records.push_back({TransformKind::BinaryExpanded,
                               static_cast<int>(i) + 1,
                               {first_fresh, first_fresh + 1, first_fresh + 2},
                               static_cast<int>(gadget.size())});
            for (Clause& g : gadget) out.clauses.push_back(std::move(g));
        } else {  // unit clause
            std::vector<int> fresh;
            int first_fresh = alloc.next_index();
            auto gadget = unit_gadget(c.literals[0], alloc);
            for (int v = first_fresh; v < alloc.next_index(); ++v)
                fresh.push_back(v);
            records.push_back({TransformKind::UnitExpanded,
                               static_cast<int>(i) + 1, fresh,
                               static_cast<int>(gadget.size())});
            for (Clause& g : gadget) out.clauses.push_back(std::move(g));
        }
    }
    out.declared_vars = std::max(out.declared_vars, alloc.next_index() - 1);
    return {out, records};
}

}  // namespace satn
