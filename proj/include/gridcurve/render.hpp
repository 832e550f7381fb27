#pragma once

#include <complex>
#include <string>
#include <vector>

#include "gridcurve/grid.hpp"
#include "gridcurve/lsystem.hpp"
#include "gridcurve/word.hpp"

namespace gridcurve {

enum class RenderMode { Line, Area };
enum class ColorScheme { ByLetter, ByAncestor, ByOrientation };

// Twelve distinguishable colors.
const std::vector<std::string>& defaultPalette();
// `count` colors evenly spaced in hue.
std::vector<std::string> makePalette(int count);

struct RenderStyle {
    RenderMode mode = RenderMode::Line;
    // Fillet radius as a fraction of the edge length, in [0, 0.5].
    double cornerRadius = 0.25;
    ColorScheme scheme = ColorScheme::ByLetter;
    std::vector<std::string> palette = defaultPalette();
    double strokeWidth = 0.15;
    // SVG units per edge length.
    double scale = 20.0;
    bool drawBorders = false;
};

// Index of the first-iterate edge each edge of expand(axiom, k) descends from.
std::vector<int> ancestorIndices(const CurveSet& cs, const Word& axiom, int k);

// One <path> element: consecutive edges that share a color.
struct LineRun {
    std::string color;
    std::string d;
    size_t firstEdge = 0;
    size_t edgeCount = 0;
    int segments = 0;
    int arcs = 0;
};

// ByAncestor needs `ancestors`, one entry per edge of the word.
std::vector<LineRun> lineRuns(const Word& word, const GridSpec& grid, const RenderStyle& style,
                              const std::vector<int>* ancestors = nullptr);
std::string renderLine(const Word& word, const GridSpec& grid, const RenderStyle& style,
                       const std::vector<int>* ancestors = nullptr);

// The area assigned to one edge: (tail, right center, head, left center) on
// single-edge grids, (tail, head, left center) on double-edge grids.
struct AreaPiece {
    std::vector<std::complex<double>> polygon;
    std::string color;
    size_t edge = 0;
    // The face walk did not close; a half-width quad stands in.
    bool rim = false;
};

std::vector<AreaPiece> areaPieces(const Word& word, const GridSpec& grid, const RenderStyle& style,
                                  const std::vector<int>* ancestors = nullptr);
std::string renderArea(const Word& word, const GridSpec& grid, const RenderStyle& style,
                       const std::vector<int>* ancestors = nullptr);

// Dispatches on style.mode.
std::string render(const Word& word, const GridSpec& grid, const RenderStyle& style,
                   const std::vector<int>* ancestors = nullptr);

// Point cloud as small squares of side `size` (in edge units).
std::string renderPoints(const std::vector<std::complex<double>>& pts, const RenderStyle& style, double size = 0.1);

double polygonArea(const std::vector<std::complex<double>>& poly);

// Well-formed XML with a single <svg> root, only svg/g/path/polygon
// elements and finite coordinates.
bool checkSvg(const std::string& svg, std::string* why = nullptr);

} // namespace gridcurve
