#include "shiftlab/fixed_points.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace shiftlab {

namespace {

// one forbidden-pattern translate, with cells resolved to fundamental-domain
// indices
struct Instance {
    std::vector<std::pair<int, int>> cells;  // (cell index, required symbol)
};

struct SearchPlan {
    int n_cells = 0;
    int n_symbols = 0;
    // instances grouped by the largest cell index they touch
    std::vector<std::vector<Instance>> by_last;
};

SearchPlan build_plan(const SftSpec& spec, const Sublattice& L) {
    spec.validate();
    if (spec.dim != L.d) throw InputError("fixed_points: spec and lattice dimension mismatch");
    SearchPlan plan;
    plan.n_cells = static_cast<int>(L.index());
    plan.n_symbols = spec.alphabet_size();
    plan.by_last.resize(plan.n_cells);
    auto cells = L.fundamental_cells();
    for (auto& anchor : cells) {
        for (auto& pat : spec.forbidden) {
            Instance inst;
            bool contradictory = false;
            for (auto& [off, sym] : pat.cells) {
                int idx = static_cast<int>(L.cell_index(L.reduce(vec_add(anchor, off))));
                bool merged = false;
                for (auto& [c, s] : inst.cells) {
                    if (c == idx) {
                        if (s != sym) contradictory = true;
                        merged = true;
                        break;
                    }
                }
                if (!merged) inst.cells.push_back({idx, sym});
            }
            if (contradictory) continue;  // wraparound collision; can never match
            int last = 0;
            for (auto& [c, s] : inst.cells) last = std::max(last, c);
            plan.by_last[last].push_back(std::move(inst));
        }
    }
    return plan;
}

struct BranchResult {
    BigInt count = 0;
    std::vector<std::vector<int>> configs;
    long long nodes = 0;
    bool aborted = false;  // hit the per-branch node cap
};

// depth-first fill of cells [1, n) under a fixed first-cell symbol
void search_branch(const SearchPlan& plan, int first_symbol, bool enumerate, long long node_cap,
                   BranchResult& out) {
    std::vector<int> values(plan.n_cells, -1);
    auto ok_at = [&](int cell) {
        for (auto& inst : plan.by_last[cell]) {
            bool match = true;
            for (auto& [c, s] : inst.cells) {
                if (values[c] != s) {
                    match = false;
                    break;
                }
            }
            if (match) return false;  // a forbidden pattern appeared
        }
        return true;
    };

    struct Frame {
        int cell;
        int next_symbol;
    };
    std::vector<Frame> stack;
    ++out.nodes;
    values[0] = first_symbol;
    if (!ok_at(0)) return;
    if (plan.n_cells == 1) {
        out.count += 1;
        if (enumerate) out.configs.push_back(values);
        return;
    }
    stack.push_back({1, 0});
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.next_symbol == plan.n_symbols) {
            values[f.cell] = -1;
            stack.pop_back();
            continue;
        }
        int s = f.next_symbol++;
        if (++out.nodes > node_cap) {
            out.aborted = true;
            return;
        }
        values[f.cell] = s;
        if (!ok_at(f.cell)) {
            values[f.cell] = -1;
            continue;
        }
        if (f.cell + 1 == plan.n_cells) {
            out.count += 1;
            if (enumerate) out.configs.push_back(values);
            values[f.cell] = -1;
        } else {
            stack.push_back({f.cell + 1, 0});
        }
    }
}

}  // namespace

FixedPointResult fixed_points(const SftSpec& spec, const Sublattice& L, bool enumerate,
                              const EnumOptions& opts) {
    SearchPlan plan = build_plan(spec, L);
    int branches = plan.n_symbols;
    std::vector<BranchResult> results(branches);

    int jobs = std::max(1, opts.jobs);
    if (jobs == 1) {
        for (int b = 0; b < branches; ++b)
            search_branch(plan, b, enumerate, opts.max_nodes, results[b]);
    } else {
        std::atomic<int> next{0};
        auto worker = [&]() {
            while (true) {
                int b = next.fetch_add(1);
                if (b >= branches) return;
                search_branch(plan, b, enumerate, opts.max_nodes, results[b]);
            }
        };
        std::vector<std::thread> pool;
        int n_threads = std::min(jobs, branches);
        pool.reserve(n_threads);
        for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    FixedPointResult res;
    for (auto& r : results) {
        res.nodes += r.nodes;
        if (r.aborted || res.nodes > opts.max_nodes) throw BudgetExceeded(opts.max_nodes);
    }
    for (auto& r : results) {
        res.count += r.count;
        if (enumerate)
            for (auto& v : r.configs) res.configs.push_back({L, v});
    }
    return res;
}

bool torus_admissible(const SftSpec& spec, const Sublattice& L, const std::vector<int>& values) {
    if (static_cast<long long>(values.size()) != L.index())
        throw InputError("torus_admissible: value vector has wrong size");
    auto cells = L.fundamental_cells();
    for (auto& anchor : cells) {
        for (auto& pat : spec.forbidden) {
            bool match = true;
            for (auto& [off, sym] : pat.cells) {
                long long idx = L.cell_index(L.reduce(vec_add(anchor, off)));
                if (values[static_cast<size_t>(idx)] != sym) {
                    match = false;
                    break;
                }
            }
            if (match) return false;
        }
    }
    return true;
}

}  // namespace shiftlab
