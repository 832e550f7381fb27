#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gridcurve/exactgeom.hpp"
#include "gridcurve/grid.hpp"
#include "gridcurve/lsystem.hpp"

namespace gridcurve {

struct SelfAvoidance {
    bool ok = true;
    // Empty when ok; otherwise what went wrong and at which edge.
    std::string violation;
    size_t edgeIndex = 0;
};

// Traces the word from the origin. With `closed`, the last edge also connects
// to the first at the start vertex.
SelfAvoidance checkSelfAvoiding(const Word& word, const GridSpec& grid, bool closed = false);

// First iterates of all prototile boundaries are self-avoiding.
bool checkDekking1CS(const CurveSet& cs, std::string* failing = nullptr);
// Same condition stated on prod(X) t prod(Y) for every transition X t Y.
bool checkDekking1CSTransitions(const CurveSet& cs, std::string* failing = nullptr);

// Every grid edge strictly inside the k-th iterate of the tile boundary is
// traversed by it. Throws Error when the iterate does not close.
bool checkInteriorFilled(const CurveSet& cs, const Prototile& tile, int k, long long* missing = nullptr);

struct TileCoverage {
    std::string tile;
    long long missing = 0;
    size_t edges = 0;
    Point center;
    // Iterates that enclose no area (digons retraced by their own reversal) are skipped.
    bool zeroArea = false;
};

struct CoverageDiagnostic {
    int requestedK = 3;
    int k = 3;
    double r = 3.0;
    long long missing = 0;
    bool pass = false;
    std::vector<TileCoverage> tiles;
    // Principal-axis aspect ratio of the iterates 1, 2, ... of each non-constant letter.
    std::map<char, std::vector<double>> aspectSeries;
    double boundingBoxAspect = 1.0;
    bool aspectRising = false;
};

// For every prototile with a non-constant letter: the radius-r disc centered
// at a vertex of its k-th iterate with the fewest untraversed edges. k is
// raised until R^k >= 16 r^2 and lowered (not below that) while an iterate
// would exceed 300000 edges.
CoverageDiagnostic checkCoverage(const CurveSet& cs, int k = 3, double r = 3.0);

// Principal-axis aspect ratio of a point cloud.
double aspectRatio(const std::vector<std::complex<double>>& pts);

// Ratio > 1.1 on two consecutive steps.
bool aspectRises(const std::vector<double>& series);

struct ScaleAnalysis {
    // The induced map of vertices S is well defined on the patch.
    bool mapConsistent = false;
    // Its restriction to the translation lattice is linear.
    bool linear = false;
    long long det = 0;
    bool detMatchesOrder = false;
    // The lattice map is multiplication by lambda.
    bool similarity = false;
    std::optional<ExactRatio> lambda;
    Point t1, t2, image1, image2;
    std::map<char, Point> displacement;
    std::map<char, int> netTurn;
    std::string problem;

    bool consistent() const { return mapConsistent && linear && detMatchesOrder; }
};

ScaleAnalysis analyzeScale(const CurveSet& cs);

enum class Verdict { Valid, ValidWithCaveats, Invalid };

const char* verdictName(Verdict v);

struct ValidateOptions {
    int k = 3;
    double r = 3.0;
};

struct ValidationReport {
    std::string name;
    std::optional<long long> order;
    std::vector<long long> rowSums;
    // Unset for generic grids, where the notion does not apply.
    std::optional<bool> gridConsistent;
    std::vector<std::string> gridProblems;
    bool selfAvoiding = false;
    std::string selfAvoidingFailure;
    bool scaleConsistent = false;
    ScaleAnalysis scale;
    std::vector<std::pair<std::string, bool>> interiorFilled;
    bool irreducible = false;
    std::string constants;
    CoverageDiagnostic coverage;
    Verdict verdict = Verdict::Invalid;
    std::vector<std::string> reasons;
    std::vector<std::string> caveats;
};

ValidationReport validate(const CurveSet& cs, const ValidateOptions& opts = {});

// key: value lines.
std::string reportText(const ValidationReport& r);
std::string reportJson(const ValidationReport& r);

} // namespace gridcurve
