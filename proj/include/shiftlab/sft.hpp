/*
 * Shifts of finite type over Z^d, given by an alphabet and a finite set of
 * forbidden patterns. The empty forbidden set is the full shift.
 *
 * Text format (one spec per file):
 *
 *   dim 2
 *   alphabet 0 1 2
 *   pattern
 *   (0,0)=1
 *   (1,0)=1
 *   pattern
 *   ...
 *
 * Blank lines and lines starting with '#' are ignored. Symbols are
 * arbitrary whitespace-free tokens.
 */

#pragma once

#include "shiftlab/geometry.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace shiftlab {

struct Pattern {
    // (offset, symbol index), kept sorted by offset
    std::vector<std::pair<Vec, int>> cells;

    // extent along axis i (max - min + 1); 1 for single-cell patterns
    Coord span(int axis) const;
};

struct SftSpec {
    int dim = 1;
    std::vector<std::string> alphabet;
    std::vector<Pattern> forbidden;

    int alphabet_size() const { return static_cast<int>(alphabet.size()); }
    int symbol_index(const std::string& name) const;

    // largest pattern extent along the given axis (at least 1)
    Coord max_span(int axis) const;

    void validate() const;
};

SftSpec full_shift(int n, int d);
SftSpec golden_mean_sft();
// proper 3-colorings of Z^d with nearest-neighbor adjacency
SftSpec chessboard_sft(int d);

SftSpec product_sft(const SftSpec& x, const SftSpec& y);

SftSpec parse_sft(std::istream& in);
SftSpec parse_sft_file(const std::string& path);
void write_sft(std::ostream& out, const SftSpec& spec);

// Resolve "full(n,d)", "chessboard(d)", "goldenmean" to a spec.
// ("dyck(N)" is not an SFT and is handled by the Dyck module.)
SftSpec resolve_named_sft(const std::string& key);

}  // namespace shiftlab
