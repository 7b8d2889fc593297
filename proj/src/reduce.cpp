#include "satn/reduce.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace satn {

std::string format_record(const SplitRecord& r) {
    std::ostringstream os;
    os << "SPLIT var=" << r.split_var << " k=" << r.occurrence_count
       << " reps=";
    for (std::size_t i = 0; i < r.replacement_vars.size(); ++i) {
        if (i) os << ',';
        os << r.replacement_vars[i];
    }
    os << " links=";
    for (std::size_t i = 0; i < r.link_vars.size(); ++i) {
        if (i) os << ',';
        os << r.link_vars[i];
    }
    return os.str();
}

std::optional<int> needs_reduction(const Formula& f) {
    std::map<int, int> counts;
    for (const Clause& c : f.clauses)
        for (const Literal& lit : c.literals) ++counts[lit.var];
    for (const auto& [var, n] : counts)
        if (n > 4) return var;
    return std::nullopt;
}

std::pair<Formula, SplitRecord> split_variable(const Formula& f, int v,
                                               FreshVarAllocator& alloc) {
    int k = f.occurrences(v);
    if (k <= 4)
        throw std::invalid_argument("split_variable: variable " +
                                    std::to_string(v) +
                                    " occurs at most 4 times");

    SplitRecord record;
    record.split_var = v;
    record.occurrence_count = k;
    for (int i = 0; i < k; ++i)
        record.replacement_vars.push_back(alloc.allocate());
    for (int i = 0; i < k; ++i) record.link_vars.push_back(alloc.allocate());

    // Substitute occurrence i (clause order, then literal order) with the
    // i-th replacement variable, preserving polarity.
    Formula out;
    out.declared_vars = f.declared_vars;
    int next_occurrence = 0;
    for (const Clause& c : f.clauses) {
        Clause nc;
        for (const Literal& lit : c.literals) {
            if (lit.var == v) {
                nc.literals.emplace_back(
                    record.replacement_vars[next_occurrence++], lit.negated);
            } else {
                nc.literals.push_back(lit);
            }
        }
        out.clauses.push_back(std::move(nc));
    }

    // Cyclic links (x_i v -x_{i+1} v -y_i); with every y_i forced true
    // these collapse to the implications keeping all x_i equal.
    for (int i = 0; i < k; ++i) {
        int xi = record.replacement_vars[i];
        int xnext = record.replacement_vars[(i + 1) % k];
        int yi = record.link_vars[i];
        out.clauses.push_back(
            {{xi, false}, {xnext, true}, {yi, true}});
    }
    int gadget_clauses = 0;
    for (int i = 0; i < k; ++i) {
        auto gadget = unit_gadget({record.link_vars[i], false}, alloc);
        gadget_clauses += static_cast<int>(gadget.size());
        for (Clause& g : gadget) out.clauses.push_back(std::move(g));
    }
    record.added_clauses = k + gadget_clauses;
    out.declared_vars = std::max(out.declared_vars, alloc.next_index() - 1);
    return {out, record};
}

std::pair<Formula, std::vector<SplitRecord>> reduce_to_34(const Formula& f) {
    if (!is_normal(f, 3))
        throw std::invalid_argument(
            "reduce_to_34: input is not a normal width-3 formula");

    Formula current = f;
    std::vector<SplitRecord> records;
    FreshVarAllocator alloc(std::max(f.declared_vars, f.max_var()) + 1);
    while (auto v = needs_reduction(current)) {
        auto [next, record] = split_variable(current, *v, alloc);
        current = std::move(next);
        records.push_back(std::move(record));
    }
    return {current, records};
}

}  // namespace satn
