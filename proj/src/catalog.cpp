#include "gridcurve/catalog.hpp"

#include <map>

#include "gridcurve/error.hpp"

namespace gridcurve {

namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& catalogFiles();
}

namespace {

struct Loaded {
    SpecDocument doc;
    std::map<std::string, CatalogGroup> groups;
};

CatalogGroup groupOf(std::string_view file) {
    if (file == "counterexamples.gcs") return CatalogGroup::Counterexample;
    if (file == "generic.gcs") return CatalogGroup::Generic;
    if (file == "inconsistent.gcs") return CatalogGroup::Inconsistent;
    return CatalogGroup::Main;
}

const Loaded& loaded() {
    static const Loaded data = [] {
        Loaded l;
        const auto& files = detail::catalogFiles();
        // grids first so that every other file can refer to them
        for (const auto& [name, text] : files) {
            if (name != "grids.gcs") continue;
            try {
                l.doc = parseSpec(text);
            } catch (const ParseError& e) {
                throw Error("catalog " + std::string(name) + ":" + e.what());
            }
        }
        for (const auto& [name, text] : files) {
            if (name == "grids.gcs") continue;
            SpecDocument part;
            try {
                part = parseSpec(text, &l.doc);
            } catch (const ParseError& e) {
                throw Error("catalog " + std::string(name) + ":" + e.what());
            }
            for (size_t i = 0; i < part.items.size(); ++i) {
                if (auto cs = std::get_if<CurveSet>(&part.items[i])) l.groups[cs->name] = groupOf(name);
                l.doc.items.push_back(part.items[i]);
                l.doc.spans.push_back(part.spans[i]);
            }
        }
        return l;
    }();
    return data;
}

} // namespace

const SpecDocument& catalog() { return loaded().doc; }

const GridSpec& catalogGrid(const std::string& name) {
    if (const GridSpec* g = catalog().findGrid(name)) return *g;
    throw Error("unknown catalog grid '" + name + "'");
}

const CurveSet& catalogCurveSet(const std::string& name) {
    if (const CurveSet* c = catalog().findCurveSet(name)) return *c;
    throw Error("unknown catalog curve-set '" + name + "'");
}

std::vector<CatalogEntry> catalogCurveSets() {
    std::vector<CatalogEntry> out;
    for (const CurveSet* cs : catalog().curveSets()) out.push_back({cs, loaded().groups.at(cs->name)});
    return out;
}

std::vector<CatalogEntry> catalogCurveSets(CatalogGroup group) {
    std::vector<CatalogEntry> out;
    for (const auto& e : catalogCurveSets())
        if (e.group == group) out.push_back(e);
    return out;
}

std::vector<std::pair<std::string, std::string>> catalogFiles() {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [name, text] : detail::catalogFiles()) out.emplace_back(std::string(name), std::string(text));
    return out;
}

const char* groupName(CatalogGroup g) {
    switch (g) {
    case CatalogGroup::Main: return "main";
    case CatalogGroup::Counterexample: return "counterexample";
    case CatalogGroup::Generic: return "generic";
    case CatalogGroup::Inconsistent: return "inconsistent";
    }
    return "?";
}

} // namespace gridcurve
