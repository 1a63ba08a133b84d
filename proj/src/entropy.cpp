#include "shiftlab/entropy.hpp"

#include <algorithm>
#include <map>

namespace shiftlab {

namespace {

struct BoxInstance {
    std::vector<std::pair<long long, int>> cells;  // (global cell index, symbol)
};

}  // namespace

EntropyEstimate entropy_box_estimate(const SftSpec& spec, long long radius,
                                     const EnumOptions& opts) {
    spec.validate();
    if (radius < 0) throw InputError("entropy_box_estimate: radius must be >= 0");
    const int d = spec.dim;
    Box box = Box::cube(d, radius);
    const long long volume = box.volume();
    const long long layer_size = volume / box.side(d - 1);
    const long long n_layers = box.side(d - 1);
    const int n_symbols = spec.alphabet_size();
    // how many trailing layers a pattern can reach back over
    const long long w = std::min<long long>(spec.max_span(d - 1), n_layers);
    const long long kept = w - 1;

    // every pattern translate fully inside the box, bucketed by its last
    // cell in fill order
    std::vector<std::vector<BoxInstance>> by_last(volume);
    {
        std::vector<Vec> anchors = box.cells();
        for (auto& anchor : anchors) {
            for (auto& pat : spec.forbidden) {
                BoxInstance inst;
                bool inside = true;
                for (auto& [off, sym] : pat.cells) {
                    Vec v = vec_add(anchor, off);
                    if (!box.contains(v)) {
                        inside = false;
                        break;
                    }
                    inst.cells.push_back({box.index_of(v), sym});
                }
                if (!inside) continue;
                long long last = 0;
                for (auto& [c, s] : inst.cells) last = std::max(last, c);
                by_last[last].push_back(std::move(inst));
            }
        }
    }

    // frontier: values of up to `kept` most recent layers -> exact count
    std::map<std::vector<int>, BigInt> frontier;
    frontier[{}] = 1;
    long long nodes = 0;

    for (long long t = 0; t < n_layers; ++t) {
        std::map<std::vector<int>, BigInt> next;
        const long long base = t * layer_size;
        for (auto& [state, cnt] : frontier) {
            const long long prev_layers = static_cast<long long>(state.size()) / layer_size;
            std::vector<int> cur(layer_size, -1);
            auto value_at = [&](long long g) -> int {
                long long layer = g / layer_size;
                if (layer == t) return cur[g % layer_size];
                long long rel = t - layer;  // 1..kept
                long long slot = prev_layers - rel;
                return state[slot * layer_size + g % layer_size];
            };
            auto ok_at = [&](long long g) {
                for (auto& inst : by_last[g]) {
                    bool match = true;
                    for (auto& [c, s] : inst.cells) {
                        if (value_at(c) != s) {
                            match = false;
                            break;
                        }
                    }
                    if (match) return false;
                }
                return true;
            };
            // DFS over the cells of this layer
            std::vector<int> choice(layer_size, 0);
            long long pos = 0;
            while (pos >= 0) {
                if (pos == layer_size) {
                    std::vector<int> key;
                    long long keep_layers = std::min<long long>(kept, prev_layers + 1);
                    key.reserve(static_cast<size_t>(keep_layers * layer_size));
                    for (long long l = prev_layers - (keep_layers - 1); l < prev_layers; ++l)
                        key.insert(key.end(), state.begin() + l * layer_size,
                                   state.begin() + (l + 1) * layer_size);
                    if (keep_layers > 0) key.insert(key.end(), cur.begin(), cur.end());
                    next[key] += cnt;
                    --pos;
                    continue;
                }
                if (choice[pos] == n_symbols) {
                    cur[pos] = -1;
                    choice[pos] = 0;
                    --pos;
                    continue;
                }
                if (++nodes > opts.max_nodes) throw BudgetExceeded(opts.max_nodes);
                cur[pos] = choice[pos]++;
                if (ok_at(base + pos)) ++pos;
            }
        }
        frontier = std::move(next);
    }

    BigInt total = 0;
    for (auto& [k, v] : frontier) total += v;
    if (total == 0)
        throw InputError("entropy_box_estimate: no admissible patterns on the box");
    return {radius, total, log_big(total) / static_cast<double>(volume)};
}

}  // namespace shiftlab
