// gridcurve command-line front end.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "gridcurve/catalog.hpp"
#include "gridcurve/error.hpp"
#include "gridcurve/lsystem.hpp"
#include "gridcurve/numsys.hpp"
#include "gridcurve/render.hpp"
#include "gridcurve/search.hpp"
#include "gridcurve/specio.hpp"
#include "gridcurve/validator.hpp"

using namespace gridcurve;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitBudget = 3;

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void writeOutput(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

SpecDocument load(const std::string& source) {
    const std::string scheme = "catalog:";
    if (source.rfind(scheme, 0) == 0) {
        std::string name = source.substr(scheme.size());
        SpecDocument doc;
        for (const auto& [file, text] : catalogFiles())
            if (file == name || file == name + ".gcs") return parseSpec(text, &catalog());
        if (const CurveSet* cs = catalog().findCurveSet(name)) {
            doc.items.emplace_back(cs->grid);
            doc.items.emplace_back(*cs);
            doc.spans.resize(2);
            return doc;
        }
        if (const GridSpec* g = catalog().findGrid(name)) {
            doc.items.emplace_back(*g);
            doc.spans.resize(1);
            return doc;
        }
        throw Error("no catalog entry '" + name + "'");
    }
    std::string text = readFile(source);
    try {
        return parseSpec(text, &catalog());
    } catch (const ParseError& e) {
        throw Error(source + ":" + e.what());
    }
}

const CurveSet& selectSet(const SpecDocument& doc, const std::string& name) {
    if (!name.empty()) {
        if (const CurveSet* cs = doc.findCurveSet(name)) return *cs;
        throw Error("no curve-set '" + name + "'");
    }
    auto sets = doc.curveSets();
    if (sets.size() == 1) return *sets.front();
    if (sets.empty()) throw Error("document has no curve-set");
    throw Error("document has several curve-sets; choose one with --set");
}

const GridSpec& resolveGrid(const std::string& name) {
    if (name.rfind("catalog:", 0) == 0) return catalogGrid(name.substr(8));
    return catalogGrid(name);
}

Word axiomFor(const CurveSet& cs, const std::string& text) {
    if (text.empty()) return Word::letter(cs.grid.letters.front());
    return parseAxiom(text, cs.grid);
}

std::string matrixString(const SubstMatrix& m) {
    std::ostringstream out;
    out << "[";
    for (size_t r = 0; r < m.size(); ++r) {
        out << (r ? "," : "") << "[";
        for (size_t c = 0; c < m[r].size(); ++c) out << (c ? "," : "") << m[r][c];
        out << "]";
    }
    out << "]";
    return out.str();
}

std::string productionLine(char letter, const Word& w, const GridSpec& g) {
    return std::string(1, letter) + " |--> " + formatWord(w, g.n, g.doubleEdges) + "\n";
}

std::map<char, char> parseRelabel(const std::string& text) {
    std::map<char, char> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.size() != 3 || item[1] != '=') throw Error("bad relabel '" + item + "', expected X=Y");
        out[item[0]] = item[2];
    }
    return out;
}

std::vector<std::string> splitList(const std::vector<std::string>& values) {
    std::vector<std::string> out;
    for (const std::string& v : values) {
        std::istringstream in(v);
        std::string item;
        while (std::getline(in, item, ';'))
            if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::pair<int, int> parseTorus(const std::string& text) {
    int r = 0, c = 0;
    char x = 0;
    std::istringstream in(text);
    if (!(in >> r >> x >> c) || (x != 'x' && x != 'X') || r < 1 || c < 1)
        throw Error("bad torus '" + text + "', expected RxC");
    return {r, c};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"gridcurve: edge-covering curves on colored grids"};
    app.require_subcommand(1);
    bool asJson = false;
    app.add_flag("--json", asJson, "Machine-readable output");

    std::string file, setName, axiomText, outPath;
    int k = 1;

    // validate
    auto* vCmd = app.add_subcommand("validate", "Validate curve-sets");
    ValidateOptions vOpts;
    vCmd->add_option("file", file, "Spec file or catalog:NAME")->required();
    vCmd->add_option("--set", setName, "Curve-set name (default: all)");
    vCmd->add_option("--k", vOpts.k, "Coverage iterate");
    vCmd->add_option("--r", vOpts.r, "Coverage radius");
    vCmd->add_flag("--json", asJson);

    // expand
    auto* eCmd = app.add_subcommand("expand", "Expand an axiom k times");
    eCmd->add_option("file", file)->required();
    eCmd->add_option("--set", setName);
    eCmd->add_option("--axiom", axiomText, "Word or [WORD]^k (default: first letter)");
    eCmd->add_option("-k", k, "Iterations");
    eCmd->add_option("-o", outPath, "Output file");
    eCmd->add_flag("--json", asJson);

    // render
    auto* rCmd = app.add_subcommand("render", "Render an iterate as SVG");
    std::string mode = "line", colors = "letter";
    double rounded = 0.25;
    bool borders = false;
    double strokeWidth = 0.15;
    rCmd->add_option("file", file)->required();
    rCmd->add_option("--set", setName);
    rCmd->add_option("--axiom", axiomText);
    rCmd->add_option("-k", k);
    rCmd->add_option("--mode", mode)->check(CLI::IsMember({"line", "area"}));
    rCmd->add_option("--colors", colors)->check(CLI::IsMember({"letter", "ancestor", "orientation"}));
    rCmd->add_option("--rounded", rounded, "Corner radius, fraction of an edge")->check(CLI::Range(0.0, 0.5));
    rCmd->add_option("--stroke", strokeWidth, "Stroke width, fraction of an edge");
    rCmd->add_flag("--borders", borders, "Thin borders between area pieces");
    rCmd->add_option("-o", outPath);

    // matrix, dimension
    auto* mCmd = app.add_subcommand("matrix", "Substitution matrix and order");
    mCmd->add_option("file", file)->required();
    mCmd->add_option("--set", setName);
    mCmd->add_flag("--json", asJson);
    auto* dCmd = app.add_subcommand("dimension", "Dimension of the curve per letter");
    dCmd->add_option("file", file)->required();
    dCmd->add_option("--set", setName);
    dCmd->add_flag("--json", asJson);
    long long dimOrder = 0;
    dCmd->add_option("--order", dimOrder, "Order R to use when the row sums differ");

    // prototiles
    auto* pCmd = app.add_subcommand("prototiles", "Prototiles of a grid");
    std::string gridName;
    pCmd->add_option("grid", gridName, "Grid name, catalog:NAME or a spec file")->required();
    pCmd->add_flag("--json", asJson);

    // search-colorings
    auto* scCmd = app.add_subcommand("search-colorings", "Colorings of a square torus");
    std::string torus = "4x4";
    int numColors = 2;
    bool noRotations = false, noReflections = false;
    std::string base = "square";
    scCmd->add_option("--grid", base, "Base grid (square only)");
    scCmd->add_option("--torus", torus, "RxC");
    scCmd->add_option("--colors", numColors)->required();
    scCmd->add_flag("--no-rotations", noRotations);
    scCmd->add_flag("--no-reflections", noReflections);
    scCmd->add_option("-o", outPath, "Directory for one .gcs file per result");
    scCmd->add_flag("--json", asJson);

    // search-curves
    auto* cvCmd = app.add_subcommand("search-curves", "Enumerate curve-sets of an order");
    long long searchOrder = 0;
    CurveSearchOptions cOpts;
    std::vector<std::string> fixed;
    cvCmd->add_option("--grid", gridName)->required();
    cvCmd->add_option("--order", searchOrder)->required();
    cvCmd->add_option("--budget", cOpts.budget, "Node limit, 0 = unlimited");
    cvCmd->add_option("--max-length", cOpts.maxLength);
    cvCmd->add_option("--fixed", fixed, "Fixed production X=WORD");
    cvCmd->add_option("-o", outPath, "Directory for one .gcs file per result");
    cvCmd->add_flag("--json", asJson);

    // numsys
    auto* nCmd = app.add_subcommand("numsys", "Complex-base numeration systems");
    std::string ring = "g", radixText, systemName, expandText, svgPath;
    std::vector<std::string> digitTexts;
    bool check = false, listSystems = false;
    int region = -1;
    nCmd->add_option("--ring", ring)->check(CLI::IsMember({"g", "e"}));
    nCmd->add_option("--radix", radixText, "a,b");
    nCmd->add_option("--digits", digitTexts, "a,b values, ';' separated");
    nCmd->add_option("--system", systemName, "Named system");
    nCmd->add_flag("--list", listSystems);
    nCmd->add_flag("--check", check);
    nCmd->add_option("--expand", expandText, "a,b");
    nCmd->add_option("--region", region, "Depth k of the region point cloud");
    nCmd->add_option("--svg", svgPath);
    nCmd->add_flag("--json", asJson);

    // transform
    auto* tCmd = app.add_subcommand("transform", "Curve-set transformations");
    std::string op, letter, relabelText, dropText, wordText, recipe = "36-3366";
    int targetN = 0;
    std::vector<std::string> rules;
    tCmd->add_option("--op", op)->required()->check(
        CLI::IsMember({"folding", "revcomp", "drop", "embed", "rewrite"}));
    tCmd->add_option("file", file);
    tCmd->add_option("--set", setName);
    tCmd->add_option("--letter", letter);
    tCmd->add_option("--relabel", relabelText, "X=Y,...");
    tCmd->add_option("--drop", dropText, "Letters to drop");
    tCmd->add_option("--target-n", targetN, "Turn units of the target grid");
    tCmd->add_option("--word", wordText);
    tCmd->add_option("--recipe", recipe)->check(CLI::IsMember({"36-3366", "488"}));
    tCmd->add_option("--rule", rules, "FROM=TO");
    tCmd->add_option("--grid", gridName, "Grid for the rewritten word");

    // catalog
    auto* catCmd = app.add_subcommand("catalog", "Embedded catalog");
    catCmd->require_subcommand(1);
    auto* catList = catCmd->add_subcommand("list", "List grids and curve-sets");
    catList->add_flag("--json", asJson);
    auto* catShow = catCmd->add_subcommand("show", "Print one entry");
    std::string entry;
    catShow->add_option("name", entry)->required();
    auto* catExport = catCmd->add_subcommand("export", "Write the embedded .gcs files");
    std::string exportDir = ".";
    catExport->add_option("dir", exportDir);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (vCmd->parsed()) {
            SpecDocument doc = load(file);
            std::vector<const CurveSet*> sets;
            if (!setName.empty()) sets.push_back(&selectSet(doc, setName));
            else sets = doc.curveSets();
            if (sets.empty()) throw Error("document has no curve-set");
            bool anyInvalid = false;
            json all = json::array();
            for (const CurveSet* cs : sets) {
                ValidationReport rep = validate(*cs, vOpts);
                anyInvalid = anyInvalid || rep.verdict == Verdict::Invalid;
                if (asJson) all.push_back(json::parse(reportJson(rep)));
                else std::cout << reportText(rep) << (sets.size() > 1 ? "\n" : "");
            }
            if (asJson) std::cout << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
            return anyInvalid ? kExitInvalid : kExitOk;
        }
        if (eCmd->parsed()) {
            SpecDocument doc = load(file);
            const CurveSet& cs = selectSet(doc, setName);
            Word w = expand(cs, axiomFor(cs, axiomText), k);
            std::string text = formatWord(w, cs.grid.n, cs.grid.doubleEdges);
            if (asJson) {
                json j{{"set", cs.name}, {"k", k}, {"length", w.size()}, {"word", text}};
                writeOutput(outPath, j.dump(2) + "\n");
            } else {
                writeOutput(outPath, text + "\n");
            }
            return kExitOk;
        }
        if (rCmd->parsed()) {
            SpecDocument doc = load(file);
            const CurveSet& cs = selectSet(doc, setName);
            Word axiom = axiomFor(cs, axiomText);
            Word w = expand(cs, axiom, k);
            RenderStyle style;
            style.mode = mode == "area" ? RenderMode::Area : RenderMode::Line;
            style.cornerRadius = rounded;
            style.strokeWidth = strokeWidth;
            style.drawBorders = borders;
            std::vector<int> anc;
            std::vector<int>* ancPtr = nullptr;
            if (colors == "letter") style.scheme = ColorScheme::ByLetter;
            else if (colors == "orientation") style.scheme = ColorScheme::ByOrientation;
            else {
                style.scheme = ColorScheme::ByAncestor;
                if (k < 1) throw Error("ancestor coloring needs -k >= 1");
                anc = ancestorIndices(cs, axiom, k);
                ancPtr = &anc;
                size_t strokes = expand(cs, axiom, 1).size();
                if (strokes > style.palette.size()) style.palette = makePalette(static_cast<int>(strokes));
            }
            writeOutput(outPath, render(w, cs.grid, style, ancPtr));
            return kExitOk;
        }
        if (mCmd->parsed()) {
            SpecDocument doc = load(file);
            const CurveSet& cs = selectSet(doc, setName);
            SubstMatrix m = substMatrix(cs);
            std::optional<long long> ord;
            std::string problem;
            try {
                ord = order(m);
            } catch (const UnequalRowSums& e) {
                problem = e.what();
            }
            bool irr = isIrreducible(m);
            if (asJson) {
                json j{{"set", cs.name}, {"letters", cs.grid.letters}, {"matrix", m}, {"irreducible", irr}};
                if (ord) j["order"] = *ord;
                else j["problem"] = problem;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "letters " << cs.grid.letters << "\n";
                std::cout << "matrix " << matrixString(m) << "\n";
                if (ord) std::cout << "order " << *ord << "\n";
                else std::cout << "order none (" << problem << ")\n";
                std::cout << "irreducible " << (irr ? "true" : "false") << "\n";
            }
            return kExitOk;
        }
        if (dCmd->parsed()) {
            SpecDocument doc = load(file);
            const CurveSet& cs = selectSet(doc, setName);
            json j = json::object();
            SubstMatrix m = substMatrix(cs);
            long long R = dimOrder;
            if (R == 0) R = order(m);
            for (char c : cs.grid.letters) {
                double d = dimension(m, R, cs.grid.index(c));
                j[std::string(1, c)] = d;
                if (!asJson) std::cout << c << " " << std::setprecision(12) << d << "\n";
            }
            if (asJson) std::cout << json{{"set", cs.name}, {"dimension", j}}.dump(2) << "\n";
            return kExitOk;
        }
        if (pCmd->parsed()) {
            const GridSpec* g = nullptr;
            SpecDocument doc;
            if (std::filesystem::exists(gridName)) {
                doc = load(gridName);
                auto grids = doc.grids();
                if (grids.empty()) throw Error("document has no grid");
                g = grids.front();
            } else {
                g = &resolveGrid(gridName);
            }
            json arr = json::array();
            for (const Prototile& t : prototiles(*g)) {
                bool digon = t.sense == Sense::Digon;
                if (asJson)
                    arr.push_back({{"tile", t.str(*g)}, {"sense", senseName(t.sense)}, {"digon", digon},
                                   {"exponent", t.exponent}});
                else
                    std::cout << t.str(*g) << " " << senseName(t.sense) << (digon ? " digon" : "") << "\n";
            }
            if (asJson) std::cout << arr.dump(2) << "\n";
            return kExitOk;
        }
        if (scCmd->parsed()) {
            if (base != "square" && base != "catalog:square") throw Error("coloring search supports the square grid only");
            auto [R, C] = parseTorus(torus);
            ColoringSearchOptions opts;
            opts.rotations = !noRotations;
            opts.reflections = !noReflections;
            std::vector<Coloring> found = searchColorings(R, C, numColors, opts);
            TorusPatch tp = squareTorus(R, C);
            json arr = json::array();
            std::string all;
            for (size_t i = 0; i < found.size(); ++i) {
                std::string name = "square-" + std::to_string(R) + "x" + std::to_string(C) + "-m" +
                                   std::to_string(numColors) + "-" + std::to_string(i + 1);
                GridSpec g = found[i].grid(tp, name);
                std::string text = "# minimal vector (" + std::to_string(found[i].minimalVector.first) + "," +
                                   std::to_string(found[i].minimalVector.second) + ")\n" + printGrid(g);
                if (!outPath.empty()) {
                    std::filesystem::create_directories(outPath);
                    writeOutput((std::filesystem::path(outPath) / (name + ".gcs")).string(), text);
                }
                all += text + "\n";
                arr.push_back({{"name", name},
                               {"minimalVector", {found[i].minimalVector.first, found[i].minimalVector.second}},
                               {"spec", printGrid(g)}});
            }
            if (asJson) std::cout << json{{"count", found.size()}, {"colorings", arr}}.dump(2) << "\n";
            else {
                std::cerr << found.size() << " colorings\n";
                if (outPath.empty()) std::cout << all;
            }
            return kExitOk;
        }
        if (cvCmd->parsed()) {
            const GridSpec& g = resolveGrid(gridName);
            for (const std::string& f : fixed) {
                if (f.size() < 3 || f[1] != '=') throw Error("bad --fixed '" + f + "', expected X=WORD");
                Word w = parseWord(f.substr(2), g.n, g.doubleEdges);
                resolveOmittedTurns(w, g);
                cOpts.fixed[f[0]] = w;
            }
            CurveSearchResult res = enumerateCurveSets(g, searchOrder, cOpts);
            json arr = json::array();
            std::string all;
            for (size_t i = 0; i < res.sets.size(); ++i) {
                CurveSet cs = res.sets[i];
                cs.name = g.name + "-r" + std::to_string(searchOrder) + "-" + std::to_string(i + 1);
                std::string text = printCurveSet(cs);
                if (!outPath.empty()) {
                    std::filesystem::create_directories(outPath);
                    writeOutput((std::filesystem::path(outPath) / (cs.name + ".gcs")).string(), text);
                }
                all += text + "\n";
                json prods = json::object();
                for (const auto& [c, w] : cs.productions)
                    prods[std::string(1, c)] = formatWord(w, g.n, g.doubleEdges);
                arr.push_back({{"name", cs.name}, {"productions", prods}});
            }
            if (asJson)
                std::cout << json{{"count", res.sets.size()}, {"nodes", res.nodes},
                                  {"budgetExceeded", res.budgetExceeded}, {"sets", arr}}.dump(2) << "\n";
            else {
                std::cerr << res.sets.size() << " curve-sets, " << res.nodes << " nodes\n";
                if (outPath.empty()) std::cout << all;
            }
            if (res.budgetExceeded) {
                std::cerr << "search budget exceeded; results are incomplete\n";
                return kExitBudget;
            }
            return kExitOk;
        }
        if (nCmd->parsed()) {
            if (listSystems) {
                for (const NamedSystem& s : namedSystems()) std::cout << s.name << "  " << s.description << "\n";
                return kExitOk;
            }
            NumerationSystem ns;
            if (!systemName.empty()) {
                ns = namedSystem(systemName);
            } else {
                ns.ring = ring == "e" ? Ring::Eisenstein : Ring::Gaussian;
                if (radixText.empty()) throw Error("numsys needs --radix or --system");
                ns.radix = parseLatticeElem(radixText, ns.ring);
                for (const std::string& d : splitList(digitTexts)) ns.digits.push_back(parseLatticeElem(d, ns.ring));
                if (ns.digits.empty()) throw Error("numsys needs --digits");
            }
            if (!check && expandText.empty() && region < 0) check = true;
            json j{{"ring", ns.ring == Ring::Gaussian ? "gaussian" : "eisenstein"}, {"radix", ns.radix.str()}};
            if (check) {
                ResidueCheck rc = checkResidueSystem(ns);
                json dups = json::array(), miss = json::array();
                for (auto [a, b] : rc.duplicates) dups.push_back({ns.digits[a].str(), ns.digits[b].str()});
                for (const LatticeElem& m : rc.missing) miss.push_back(m.str());
                j["completeResidueSystem"] = rc.complete;
                j["norm"] = rc.norm;
                j["digits"] = ns.digits.size();
                j["duplicates"] = dups;
                j["missing"] = miss;
                if (!asJson) {
                    std::cout << "norm " << rc.norm << "\ndigits " << ns.digits.size() << "\ncomplete residue system "
                              << (rc.complete ? "true" : "false") << "\n";
                    for (auto [a, b] : rc.duplicates)
                        std::cout << "duplicate " << ns.digits[a].str() << " " << ns.digits[b].str() << "\n";
                    for (const LatticeElem& m : rc.missing) std::cout << "missing residue " << m.str() << "\n";
                }
            }
            if (!expandText.empty()) {
                LatticeElem z = parseLatticeElem(expandText, ns.ring);
                Expansion ex = expandInteger(ns, z);
                json digits = json::array();
                for (size_t d : ex.digits) digits.push_back(ns.digits[d].str());
                j["expansion"] = {{"status", expansionStatusName(ex.status)}, {"digits", digits},
                                  {"witness", ex.witness.str()}};
                if (!asJson) {
                    std::cout << "expansion " << expansionStatusName(ex.status) << ":";
                    for (size_t d : ex.digits) std::cout << " " << ns.digits[d].str();
                    std::cout << "\n";
                    if (ex.status != ExpansionStatus::Terminated) std::cout << "witness " << ex.witness.str() << "\n";
                }
            }
            if (region >= 0) {
                std::vector<LatticeElem> pts = fundamentalRegionPoints(ns, region);
                std::set<LatticeElem> distinct(pts.begin(), pts.end());
                j["region"] = {{"k", region}, {"points", pts.size()}, {"distinct", distinct.size()}};
                if (!asJson) std::cout << "region k=" << region << " points " << pts.size() << " distinct " << distinct.size() << "\n";
                if (!svgPath.empty()) {
                    double s = std::pow(static_cast<double>(ns.radix.norm()), -region / 2.0);
                    std::vector<std::complex<double>> cloud;
                    for (const LatticeElem& p : distinct) cloud.push_back(p.toComplex() * s);
                    RenderStyle style;
                    style.scale = 200;
                    writeOutput(svgPath, renderPoints(cloud, style, std::max(s, 1e-3)));
                }
            }
            if (asJson) std::cout << j.dump(2) << "\n";
            return kExitOk;
        }
        if (tCmd->parsed()) {
            auto loadSet = [&]() -> CurveSet {
                if (file.empty()) throw Error("transform --op " + op + " needs a spec file");
                SpecDocument doc = load(file);
                return selectSet(doc, setName);
            };
            auto oneLetter = [&](const CurveSet& cs) {
                if (letter.size() == 1) return letter[0];
                if (letter.empty()) return cs.grid.letters.front();
                throw Error("--letter takes one letter");
            };
            if (op == "folding") {
                CurveSet cs = loadSet();
                char l = letter.empty() ? 'L' : oneLetter(cs);
                std::cout << productionLine(l == 'L' ? 'R' : 'L', makeFolding(cs.production(l)), cs.grid);
            } else if (op == "revcomp") {
                CurveSet cs = loadSet();
                char l = oneLetter(cs);
                std::map<char, char> rl = parseRelabel(relabelText);
                char target = rl.count(l) ? rl[l] : l;
                std::cout << productionLine(target, reversalComplement(cs.production(l), rl), cs.grid);
            } else if (op == "drop") {
                CurveSet cs = loadSet();
                if (dropText.empty()) throw Error("transform --op drop needs --drop");
                CurveSet out = dropLettersNormalize(cs, dropText, targetN > 0 ? std::optional<int>(targetN) : std::nullopt);
                std::cout << printGrid(out.grid) << "\n" << printCurveSet(out);
            } else if (op == "embed") {
                std::string w = wordText;
                if (w.empty()) {
                    CurveSet cs = loadSet();
                    char l = oneLetter(cs);
                    w = formatWord(cs.production(l), cs.grid.n, cs.grid.doubleEdges);
                }
                std::cout << (recipe == "488" ? decorateDSquareOn488(w) : embedTriangleOn36_3366(w)) << "\n";
            } else if (op == "rewrite") {
                if (wordText.empty()) throw Error("transform --op rewrite needs --word");
                std::vector<std::pair<std::string, std::string>> rs;
                for (const std::string& r : rules) {
                    size_t eq = r.find('=');
                    if (eq == std::string::npos) throw Error("bad --rule '" + r + "', expected FROM=TO");
                    rs.emplace_back(r.substr(0, eq), r.substr(eq + 1));
                }
                if (gridName.empty()) {
                    std::cout << rewriteText(wordText, rs) << "\n";
                } else {
                    const GridSpec& g = resolveGrid(gridName);
                    std::cout << formatWord(rewrite(wordText, rs, g.n, g.doubleEdges), g.n, g.doubleEdges) << "\n";
                }
            }
            return kExitOk;
        }
        if (catList->parsed()) {
            json arr = json::array();
            for (const GridSpec* g : catalog().grids()) {
                if (asJson) arr.push_back({{"kind", "grid"}, {"name", g->name}, {"letters", g->letters}});
                else std::cout << "grid " << g->name << " " << g->letters << "\n";
            }
            for (const CatalogEntry& e : catalogCurveSets()) {
                std::optional<long long> ord;
                try {
                    ord = order(*e.set);
                } catch (const Error&) {
                }
                if (asJson) {
                    json j{{"kind", "curveset"}, {"name", e.set->name}, {"grid", e.set->grid.name},
                           {"group", groupName(e.group)}};
                    if (ord) j["order"] = *ord;
                    arr.push_back(j);
                } else {
                    std::cout << "curveset " << e.set->name << " on " << e.set->grid.name << " order "
                              << (ord ? std::to_string(*ord) : "none") << " (" << groupName(e.group) << ")\n";
                }
            }
            if (asJson) std::cout << arr.dump(2) << "\n";
            return kExitOk;
        }
        if (catShow->parsed()) {
            if (const CurveSet* cs = catalog().findCurveSet(entry)) std::cout << printCurveSet(*cs);
            else if (const GridSpec* g = catalog().findGrid(entry)) std::cout << printGrid(*g);
            else throw Error("no catalog entry '" + entry + "'");
            return kExitOk;
        }
        if (catExport->parsed()) {
            std::filesystem::create_directories(exportDir);
            for (const auto& [name, text] : catalogFiles()) {
                std::filesystem::path p = std::filesystem::path(exportDir) / name;
                writeOutput(p.string(), text);
                std::cerr << "wrote " << p.string() << "\n";
            }
            return kExitOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
