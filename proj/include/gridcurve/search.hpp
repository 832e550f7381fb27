#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gridcurve/grid.hpp"
#include "gridcurve/lsystem.hpp"

namespace gridcurve {

// The square grid modulo the translations R*(1,1) and C*(1,-1): 2RC vertices
// and 4RC directed edges.
struct TorusPatch {
    int R = 1;
    int C = 1;
    std::vector<DirectedEdge> edges;
    // Turns of the square grid transitions; succ[i][e] is the edge reached
    // from e after turns[i], pred[i] its inverse.
    std::vector<int> turns;
    std::vector<std::vector<int>> succ;
    std::vector<std::vector<int>> pred;

    int index(const DirectedEdge& e) const;
    // Image of edge e under the translation a*(1,1) + b*(1,-1).
    int translate(int e, int a, int b) const;
    // Image under the quarter turn about the center of the square at the origin.
    int rotate(int e) const;
    // Image under the glide reflection (x, y) -> (y + 1, x); it fixes (1,1)
    // and negates (1,-1), so it maps the torus to itself for all R, C.
    int reflect(int e) const;
};

TorusPatch squareTorus(int R, int C);

struct Coloring {
    // Letter index per torus edge, numbered in first-use order.
    std::vector<int> assignment;
    int numColors = 0;
    // Smallest (r, c), r | R and c | C, whose shifts preserve every color.
    std::pair<int, int> minimalVector{1, 1};

    // The coloring as a grid: letters A, B, ... and the transitions it induces.
    GridSpec grid(const TorusPatch& torus, const std::string& name = "coloring") const;
};

struct ColoringSearchOptions {
    // Also identify colorings related by a quarter turn (only when R == C).
    bool rotations = true;
    // Also identify mirror images (turn signs swapped).
    bool reflections = true;
};

// Colorings of the square torus with exactly m colors that have the unique
// transition property, one canonical representative per class of letter
// renamings and torus translations (and quarter turns, mirror images), sorted.
std::vector<Coloring> searchColorings(int R, int C, int m, const ColoringSearchOptions& opts = {});

// Letter counts of the grid coloring on one period of its translation lattice.
std::map<char, long long> torusLetterCounts(const GridSpec& grid);

struct CurveSearchOptions {
    // Productions that are fixed in advance.
    std::map<char, Word> fixed;
    // Node limit of the depth-first search; 0 means unlimited.
    long long budget = 5000000;
    // Maximum production length for multi-letter grids (default: R).
    int maxLength = 0;
};

struct CurveSearchResult {
    std::vector<CurveSet> sets;
    long long nodes = 0;
    bool budgetExceeded = false;
};

// Curve-sets of the given order on the grid whose validation verdict is not
// Invalid. Mirror images (all turn signs swapped) are reported once, as the
// lexicographically smaller spelling.
CurveSearchResult enumerateCurveSets(const GridSpec& grid, long long order, const CurveSearchOptions& opts = {});

} // namespace gridcurve
