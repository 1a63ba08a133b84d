#include "shiftlab/sft.hpp"

#include "shiftlab/numeric.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace shiftlab {

Coord Pattern::span(int axis) const {
    Coord lo = cells.front().first[axis], hi = lo;
    for (auto& [v, s] : cells) {
        lo = std::min(lo, v[axis]);
        hi = std::max(hi, v[axis]);
    }
    return hi - lo + 1;
}

int SftSpec::symbol_index(const std::string& name) const {
    for (int i = 0; i < alphabet_size(); ++i)
        if (alphabet[i] == name) return i;
    throw InputError("unknown symbol '" + name + "'");
}

Coord SftSpec::max_span(int axis) const {
    Coord m = 1;
    for (auto& p : forbidden) m = std::max(m, p.span(axis));
    return m;
}

void SftSpec::validate() const {
    if (dim < 1) throw InputError("sft: dimension must be positive");
    if (alphabet.empty()) throw InputError("sft: alphabet must be nonempty");
    for (auto& p : forbidden) {
        if (p.cells.empty()) throw InputError("sft: pattern support must be nonempty");
        for (auto& [v, s] : p.cells) {
            if (static_cast<int>(v.size()) != dim)
                throw InputError("sft: pattern vector dimension mismatch");
            if (s < 0 || s >= alphabet_size())
                throw InputError("sft: pattern symbol out of range");
        }
    }
}

SftSpec full_shift(int n, int d) {
    if (n < 1) throw InputError("full_shift: need at least one symbol");
    if (d < 1) throw InputError("full_shift: dimension must be positive");
    SftSpec spec;
    spec.dim = d;
    for (int i = 0; i < n; ++i) spec.alphabet.push_back(std::to_string(i));
    return spec;
}

SftSpec golden_mean_sft() {
    SftSpec spec = full_shift(2, 1);
    Pattern p;
    p.cells = {{{0}, 1}, {{1}, 1}};  // no adjacent 1s
    spec.forbidden.push_back(p);
    return spec;
}

SftSpec chessboard_sft(int d) {
    SftSpec spec = full_shift(3, d);
    for (int axis = 0; axis < d; ++axis) {
        for (int c = 0; c < 3; ++c) {
            Pattern p;
            p.cells = {{Vec(d, 0), c}, {unit_vec(d, axis), c}};
            spec.forbidden.push_back(p);
        }
    }
    return spec;
}

SftSpec product_sft(const SftSpec& x, const SftSpec& y) {
    if (x.dim != y.dim) throw InputError("product_sft: dimension mismatch");
    SftSpec spec;
    spec.dim = x.dim;
    int ny = y.alphabet_size();
    for (auto& a : x.alphabet)
        for (auto& b : y.alphabet) spec.alphabet.push_back(a + "," + b);
    auto pair_symbol = [&](int sx, int sy) { return sx * ny + sy; };

    // a pattern of one component lifts to every total assignment of the
    // other component on the same support
    auto lift = [&](const Pattern& p, bool first_coordinate, int other_n) {
        size_t k = p.cells.size();
        std::vector<int> choice(k, 0);
        while (true) {
            Pattern q;
            for (size_t i = 0; i < k; ++i) {
                int sym = first_coordinate ? pair_symbol(p.cells[i].second, choice[i])
                                           : pair_symbol(choice[i], p.cells[i].second);
                q.cells.push_back({p.cells[i].first, sym});
            }
            spec.forbidden.push_back(q);
            size_t i = 0;
            while (i < k && ++choice[i] == other_n) choice[i++] = 0;
            if (i == k) break;
        }
    };
    for (auto& p : x.forbidden) lift(p, true, ny);
    for (auto& p : y.forbidden) lift(p, false, x.alphabet_size());
    return spec;
}

static std::vector<std::string> tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string t;
    while (ss >> t) out.push_back(t);
    return out;
}

SftSpec parse_sft(std::istream& in) {
    SftSpec spec;
    spec.dim = 0;
    std::string line;
    Pattern* current = nullptr;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto tk = tokens(line);
        if (tk.empty()) continue;
        auto fail = [&](const std::string& msg) {
            throw InputError("spec file line " + std::to_string(lineno) + ": " + msg);
        };
        if (tk[0] == "dim") {
            if (tk.size() != 2) fail("expected 'dim <d>'");
            spec.dim = std::stoi(tk[1]);
        } else if (tk[0] == "alphabet") {
            if (tk.size() < 2) fail("alphabet must list at least one symbol");
            spec.alphabet.assign(tk.begin() + 1, tk.end());
        } else if (tk[0] == "pattern") {
            spec.forbidden.emplace_back();
            current = &spec.forbidden.back();
        } else {
            // "(v1,...,vd)=symbol"
            if (!current) fail("cell line before any 'pattern' header");
            if (spec.dim == 0 || spec.alphabet.empty())
                fail("dim and alphabet must come before patterns");
            auto eq = tk[0].find('=');
            std::string cell = tk[0].substr(0, eq);
            std::string sym = eq == std::string::npos ? "" : tk[0].substr(eq + 1);
            if (tk.size() == 2 && sym.empty()) sym = tk[1];
            if (cell.size() < 2 || cell.front() != '(' || cell.back() != ')' || sym.empty())
                fail("expected '(v1,...,vd)=symbol'");
            Vec v;
            std::istringstream cs(cell.substr(1, cell.size() - 2));
            std::string part;
            while (std::getline(cs, part, ',')) v.push_back(std::stoll(part));
            if (static_cast<int>(v.size()) != spec.dim) fail("vector has wrong dimension");
            current->cells.push_back({v, spec.symbol_index(sym)});
        }
    }
    if (spec.dim == 0 || spec.alphabet.empty())
        throw InputError("spec file: missing dim or alphabet line");
    for (auto& p : spec.forbidden)
        if (p.cells.empty()) throw InputError("spec file: empty pattern block");
    spec.validate();
    return spec;
}

SftSpec parse_sft_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open spec file '" + path + "'");
    return parse_sft(in);
}

void write_sft(std::ostream& out, const SftSpec& spec) {
    out << "dim " << spec.dim << "\n";
    out << "alphabet";
    for (auto& a : spec.alphabet) out << " " << a;
    out << "\n";
    for (auto& p : spec.forbidden) {
        out << "pattern\n";
        for (auto& [v, s] : p.cells) {
            out << "(";
            for (size_t i = 0; i < v.size(); ++i) out << v[i] << (i + 1 < v.size() ? "," : "");
            out << ")=" << spec.alphabet[s] << "\n";
        }
    }
}

SftSpec resolve_named_sft(const std::string& key) {
    auto args_of = [&](const std::string& name) -> std::vector<long long> {
        std::string rest = key.substr(name.size());
        if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')')
            throw InputError("malformed system key '" + key + "'");
        std::vector<long long> args;
        std::istringstream ss(rest.substr(1, rest.size() - 2));
        std::string part;
        while (std::getline(ss, part, ',')) args.push_back(std::stoll(part));
        return args;
    };
    if (key == "goldenmean") return golden_mean_sft();
    if (key.rfind("full(", 0) == 0) {
        auto a = args_of("full");
        if (a.size() != 2) throw InputError("full(n,d) takes two arguments");
        return full_shift(static_cast<int>(a[0]), static_cast<int>(a[1]));
    }
    if (key.rfind("chessboard(", 0) == 0) {
        auto a = args_of("chessboard");
        if (a.size() != 1) throw InputError("chessboard(d) takes one argument");
        return chessboard_sft(static_cast<int>(a[0]));
    }
    throw InputError("unknown system key '" + key + "'");
}

}  // namespace shiftlab
