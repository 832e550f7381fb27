#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gridcurve/grid.hpp"
#include "gridcurve/lsystem.hpp"

namespace gridcurve {

struct AxiomDef {
    std::string name;
    std::string grid;
    int n = 4;
    bool uturn = false;
    Word word;
};

struct SourceSpan {
    int line = 0;
    int column = 0;
};

using SpecItem = std::variant<GridSpec, CurveSet, AxiomDef>;

struct SpecDocument {
    std::vector<SpecItem> items;
    std::vector<SourceSpan> spans;

    const GridSpec* findGrid(const std::string& name) const;
    const CurveSet* findCurveSet(const std::string& name) const;
    const AxiomDef* findAxiom(const std::string& name) const;
    std::vector<const GridSpec*> grids() const;
    std::vector<const CurveSet*> curveSets() const;
};

// Grids named by curve-sets may come from the document itself (in any order)
// or from `scope`.
SpecDocument parseSpec(std::string_view text, const SpecDocument* scope = nullptr);

std::string printSpec(const SpecDocument& doc);
std::string printGrid(const GridSpec& g);
std::string printCurveSet(const CurveSet& cs);

// Structural equality of documents (names, grids, productions, axioms).
bool sameDocument(const SpecDocument& a, const SpecDocument& b);

// A word on the grid, or "[WORD]^k" for a repeated closed word. Omitted turns
// are resolved against the grid.
Word parseAxiom(std::string_view text, const GridSpec& grid);

} // namespace gridcurve
