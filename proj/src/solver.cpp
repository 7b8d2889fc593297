#include "satn/solver.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "satn/evaluate.hpp"

namespace satn {

std::string format_verdict(const Verdict& v) {
    if (!v.satisfiable) return "UNSAT";
    std::ostringstream os;
    os << "SAT";
    if (v.witness)
        for (std::size_t i = 0; i < v.witness->size(); ++i)
            os << ' ' << ((*v.witness)[i] ? static_cast<int>(i) + 1
                                          : -(static_cast<int>(i) + 1));
    return os.str();
}

bool evaluate_under(const Formula& f, const std::vector<bool>& values) {
    if (f.max_var() > static_cast<int>(values.size()))
        throw std::invalid_argument("assignment shorter than formula");
    for (const Clause& c : f.clauses) {
        bool clause_true = false;
        for (const Literal& lit : c.literals) {
            if (values[lit.var - 1] != lit.negated) {
                clause_true = true;
                break;
            }
        }
        if (!clause_true) return false;
    }
    return true;
}

Verdict brute_force_sat(const Formula& f) {
    if (f.declared_vars > 25)
        throw std::invalid_argument(
            "brute_force_sat: more than 25 variables (enumeration guard)");
    int n = f.declared_vars;
    std::vector<bool> values(n, false);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        // Variable 1 is the most significant position.
        for (int v = 1; v <= n; ++v)
            values[v - 1] = (mask >> (n - v)) & 1;
        if (evaluate_under(f, values)) return {true, values};
    }
    return {false, std::nullopt};
}

ImplicationGraph build_implication_graph(const Formula& f) {
    ImplicationGraph g;
    g.var_count = std::max(f.declared_vars, f.max_var());
    g.edges.assign(2 * g.var_count, {});
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
        const Clause& c = f.clauses[i];
        if (c.size() > 2)
            throw std::invalid_argument("solve_2sat: clause " +
                                        std::to_string(i + 1) +
                                        " has more than 2 literals");
        Literal l1 = c.literals[0];
        Literal l2 = c.size() == 2 ? c.literals[1] : l1;
        int n1 = ImplicationGraph::node(l1.var, l1.negated);
        int n2 = ImplicationGraph::node(l2.var, l2.negated);
        int not1 = ImplicationGraph::node(l1.var, !l1.negated);
        int not2 = ImplicationGraph::node(l2.var, !l2.negated);
        g.edges[not1].push_back(n2);
        g.edges[not2].push_back(n1);
    }
    return g;
}

namespace {

// Flat adjacency (offsets + targets), avoiding per-node allocations so
// the decision stays linear on large instances.
struct FlatGraph {
    std::vector<int> offsets;  // size n+1
    std::vector<int> targets;
};

FlatGraph build_flat_graph(const Formula& f, int var_count) {
    FlatGraph g;
    int n = 2 * var_count;
    g.offsets.assign(n + 1, 0);
    auto for_each_edge = [&f](auto&& emit) {
        for (std::size_t i = 0; i < f.clauses.size(); ++i) {
            const Clause& c = f.clauses[i];
            if (c.size() > 2)
                throw std::invalid_argument("solve_2sat: clause " +
                                            std::to_string(i + 1) +
                                            " has more than 2 literals");
            Literal l1 = c.literals[0];
            Literal l2 = c.size() == 2 ? c.literals[1] : l1;
            int n1 = ImplicationGraph::node(l1.var, l1.negated);
            int n2 = ImplicationGraph::node(l2.var, l2.negated);
            int not1 = ImplicationGraph::node(l1.var, !l1.negated);
            int not2 = ImplicationGraph::node(l2.var, !l2.negated);
            emit(not1, n2);
            emit(not2, n1);
        }
    };
    for_each_edge([&g](int from, int) { ++g.offsets[from + 1]; });
    for (int v = 0; v < n; ++v) g.offsets[v + 1] += g.offsets[v];
    g.targets.resize(g.offsets[n]);
    std::vector<int> cursor(g.offsets.begin(), g.offsets.end() - 1);
    for_each_edge([&](int from, int to) { g.targets[cursor[from]++] = to; });
    return g;
}

// Iterative Tarjan; component ids come out in reverse topological order
// of the condensation (descendants first).
std::vector<int> tarjan_scc(const FlatGraph& g) {
    int n = static_cast<int>(g.offsets.size()) - 1;
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    int next_index = 0, next_comp = 0;

    struct Frame {
        int node;
        int edge;
    };
    std::vector<Frame> frames;
    frames.reserve(64);
    for (int start = 0; start < n; ++start) {
        if (index[start] != -1) continue;
        frames.push_back({start, g.offsets[start]});
        index[start] = low[start] = next_index++;
        stack.push_back(start);
        on_stack[start] = true;
        while (!frames.empty()) {
            Frame& frame = frames.back();
            int u = frame.node;
            if (frame.edge < g.offsets[u + 1]) {
                int v = g.targets[frame.edge++];
                if (index[v] == -1) {
                    index[v] = low[v] = next_index++;
                    stack.push_back(v);
                    on_stack[v] = true;
                    frames.push_back({v, g.offsets[v]});
                } else if (on_stack[v]) {
                    low[u] = std::min(low[u], index[v]);
                }
                continue;
            }
            if (low[u] == index[u]) {
                while (true) {
                    int w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = next_comp;
                    if (w == u) break;
                }
                ++next_comp;
            }
            frames.pop_back();
            if (!frames.empty())
                low[frames.back().node] =
                    std::min(low[frames.back().node], low[u]);
        }
    }
    return comp;
}

}  // namespace

Verdict solve_2sat(const Formula& f) {
    int var_count = std::max(f.declared_vars, f.max_var());
    FlatGraph g = build_flat_graph(f, var_count);
    std::vector<int> scc_ids = tarjan_scc(g);

    std::vector<bool> values(var_count, false);
    for (int v = 1; v <= var_count; ++v) {
        int pos = scc_ids[ImplicationGraph::node(v, false)];
        int neg = scc_ids[ImplicationGraph::node(v, true)];
        if (pos == neg) return {false, std::nullopt};
        // Smaller Tarjan id = completed first = later in topological
        // order; that side of the pair is the one to make true.
        values[v - 1] = pos < neg;
    }
    values.resize(std::max(var_count, f.declared_vars), false);
    return {true, values};
}

bool aggressive_2sat(const GeneralizedAssignment& a, const Formula& f, int n) {
    if (eval_alg1(a, f, n).value) return true;
    return solve_2sat(f).satisfiable;
}

}  // namespace satn
