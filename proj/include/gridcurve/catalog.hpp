#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gridcurve/grid.hpp"
#include "gridcurve/lsystem.hpp"
#include "gridcurve/specio.hpp"

namespace gridcurve {

// Which data file a catalog curve-set comes from.
enum class CatalogGroup { Main, Counterexample, Generic, Inconsistent };

struct CatalogEntry {
    const CurveSet* set;
    CatalogGroup group;
};

// Every grid and curve-set of the embedded data files, parsed once.
const SpecDocument& catalog();

const GridSpec& catalogGrid(const std::string& name);
const CurveSet& catalogCurveSet(const std::string& name);

std::vector<CatalogEntry> catalogCurveSets();
std::vector<CatalogEntry> catalogCurveSets(CatalogGroup group);

// Embedded file names and contents.
std::vector<std::pair<std::string, std::string>> catalogFiles();

const char* groupName(CatalogGroup g);

} // namespace gridcurve
