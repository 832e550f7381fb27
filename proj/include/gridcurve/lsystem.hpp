#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gridcurve/grid.hpp"
#include "gridcurve/word.hpp"

namespace gridcurve {

struct CurveSet {
    std::string name;
    GridSpec grid;
    std::map<char, Word> productions;

    const Word& production(char c) const;
    bool isConstant(char c) const;
    std::string constants() const;
};

Word expand(const CurveSet& cs, const Word& axiom, int k);

// Letter count of the k-th iterate without building it.
long long expandedLength(const CurveSet& cs, const Word& axiom, int k);

using SubstMatrix = std::vector<std::vector<long long>>;

// Entry (r, c): occurrences of letter r in the production of letter c.
SubstMatrix substMatrix(const CurveSet& cs);

// The common row sum; throws UnequalRowSums otherwise.
long long order(const SubstMatrix& m);
long long order(const CurveSet& cs);

bool isIrreducible(const SubstMatrix& m);

// Indices reachable from `from` along arcs c -> r with m[r][c] > 0.
std::vector<int> reachable(const SubstMatrix& m, int from);

double spectralRadius(const SubstMatrix& m);

// 2 log_R of the spectral radius of the submatrix reachable from `letterIndex`.
double dimension(const SubstMatrix& m, long long R, int letterIndex);
double dimension(const CurveSet& cs, char letter);

// Reverse, swap + and -, swap L and R.
Word makeFolding(const Word& prodL);

// Reverse, swap + and -, then relabel letters (unmapped letters stay).
Word reversalComplement(const Word& prod, const std::map<char, char>& relabel);

Word relabel(const Word& w, const std::map<char, char>& map);

// Remove letters and merge their turns. With targetN, turns must be multiples
// of n/targetN and are rescaled.
Word dropLetters(const Word& w, const std::string& drop, int n, std::optional<int> targetN = std::nullopt);

// Curve-set level: the dropped letters must be constants. The result lives on
// a grid whose transitions are read off the resulting productions.
CurveSet dropLettersNormalize(const CurveSet& cs, const std::string& drop, std::optional<int> targetN = std::nullopt);

// Ordered global text replacements on the formatted word; the result is parsed
// leniently (mixed adjacent turns are summed) with turns in units of 2pi/n.
std::string rewriteText(std::string text, const std::vector<std::pair<std::string, std::string>>& rules);
Word rewrite(const std::string& text, const std::vector<std::pair<std::string, std::string>>& rules, int n,
             bool uturn);

// Recipe that embeds a triangle-grid word on the (3^6;3.3.6.6) grid.
std::string embedTriangleOn36_3366(const std::string& triangleWord);

// Recipe that decorates a d-square word so that it runs over the (4.8.8) points.
std::string decorateDSquareOn488(const std::string& dsquareWord);

} // namespace gridcurve
