#include <doctest.h>

#include <json.hpp>

#include <random>

#include "gridcurve/catalog.hpp"
#include "gridcurve/error.hpp"
#include "gridcurve/validator.hpp"

using namespace gridcurve;

namespace {

Prototile tileNamed(const GridSpec& g, const std::string& text) {
    for (const Prototile& t : prototiles(g))
        if (t.str(g) == text) return t;
    throw Error("no tile " + text);
}

// Random grid walks of length R with net turn 0 and |end|^2 = R, as
// single-letter curve-sets whose scale map is a similarity.
std::vector<CurveSet> randomSimilaritySets(const GridSpec& g, int R, int want, std::mt19937& rng) {
    std::vector<CurveSet> out;
    char L = g.letters[0];
    for (int t = 0; t < 20000 && int(out.size()) < want; ++t) {
        Word w = Word::letter(L);
        for (int i = 1; i < R; ++i) {
            auto s = g.successors(L);
            auto [turn, next] = s[rng() % s.size()];
            w.appendTurn(turn);
            w.appendLetter(next);
        }
        if (normDir(w.turnSum(), g.n) != 0) continue;
        auto len = trace(w, Point::zero(g.n), 0).end.norm().rational();
        if (!len || *len != R) continue;
        CurveSet cs;
        cs.name = "walk";
        cs.grid = g;
        cs.productions[L] = w;
        ScaleAnalysis sa = analyzeScale(cs);
        if (!sa.consistent() || !sa.similarity) continue;
        out.push_back(cs);
    }
    return out;
}

// Every single turn-run sign flip of one production.
std::vector<CurveSet> flipMutants(const CurveSet& cs, char letter) {
    std::vector<CurveSet> out;
    const Word& w = cs.production(letter);
    for (size_t i = 1; i + 1 < w.turns.size(); ++i) {
        if (w.turns[i] == 0 || 2 * w.turns[i] == cs.grid.n) continue;
        CurveSet m = cs;
        m.productions[letter].turns[i] = -w.turns[i];
        out.push_back(m);
    }
    return out;
}

} // namespace

TEST_SUITE("validator") {

TEST_CASE("self-avoidance of words") {
    const GridSpec& tri = catalogGrid("triangle");
    const GridSpec& sq = catalogGrid("square");
    CHECK(checkSelfAvoiding(parseWord("F+F-F", 3, false), tri).ok);
    SelfAvoidance loop = checkSelfAvoiding(parseWord("F+F+F+F+F", 4, false), sq);
    CHECK_FALSE(loop.ok);
    CHECK(loop.edgeIndex == 4);
    // a closed square is fine as a cycle
    CHECK(checkSelfAvoiding(parseWord("F+F+F+F+", 4, false), sq, true).ok);
    // a U-turn retraces an undirected edge on a single-edge grid
    const GridSpec& dsq = catalogGrid("d-square");
    CHECK(checkSelfAvoiding(parseWord("A!A", 4, true), dsq).ok);
    CHECK_FALSE(checkSelfAvoiding(parseWord("A!A!A", 4, true), dsq).ok);
}

TEST_CASE("crossing at a vertex") {
    // two passes through the center of a plus sign cross each other
    const GridSpec& dsq = catalogGrid("d-square");
    Word w = parseWord("A+A+A+A0A-A-A-A-", 4, true);
    SelfAvoidance s = checkSelfAvoiding(w, dsq, true);
    CHECK_FALSE(s.ok);
    // touching without crossing: the same vertex visited twice, turning away both times
    const GridSpec& sq = catalogGrid("square");
    CHECK(checkSelfAvoiding(parseWord("F+F+F+F-F-F-F", 4, false), sq).ok);
}

TEST_CASE("Dekking-1 on catalog sets") {
    CHECK(checkDekking1CS(catalogCurveSet("ju19")));
    CHECK(checkDekking1CS(catalogCurveSet("folding-r9")));
    CHECK(checkDekking1CS(catalogCurveSet("folding-r5")));
    bool anyFails = false;
    for (const CurveSet& m : flipMutants(catalogCurveSet("ju19"), 'A')) anyFails = anyFails || !checkDekking1CS(m);
    CHECK(anyFails);
}

TEST_CASE("both Dekking-1 forms agree on catalog sets and mutants") {
    for (const CatalogEntry& e : catalogCurveSets()) {
        if (e.set->grid.generic || e.group == CatalogGroup::Inconsistent) continue;
        CAPTURE(e.set->name);
        CHECK(checkDekking1CS(*e.set) == checkDekking1CSTransitions(*e.set));
    }
    // The two forms only coincide when the mutant still tiles by similarity,
    // so mutants are random similarity walks rather than arbitrary edits.
    std::mt19937 rng(5);
    int mutants = 0, failing = 0;
    for (const char* name : {"triangle", "square", "d-square", "d-hexagon", "d-triangle"}) {
        const GridSpec& g = catalogGrid(name);
        for (int R : {4, 5, 7, 9, 13}) {
            for (const CurveSet& m : randomSimilaritySets(g, R, 12, rng)) {
                ++mutants;
                bool tiles = checkDekking1CS(m);
                failing += !tiles;
                CAPTURE(formatWord(m.production(g.letters[0]), g.n, g.doubleEdges));
                CHECK(tiles == checkDekking1CSTransitions(m));
            }
        }
    }
    CHECK(mutants >= 100);
    CHECK(failing > 0);
    CHECK(failing < mutants);
}

TEST_CASE("Dekking-1 implies self-avoiding iterates") {
    for (const CatalogEntry& e : catalogCurveSets(CatalogGroup::Main)) {
        const CurveSet& cs = *e.set;
        if (!checkDekking1CS(cs)) continue;
        CAPTURE(cs.name);
        for (char c : cs.grid.letters) {
            if (cs.isConstant(c)) continue;
            for (int k = 1; k <= 4; ++k) {
                if (expandedLength(cs, Word::letter(c), k) > 60000) break;
                SelfAvoidance s = checkSelfAvoiding(expand(cs, Word::letter(c), k), cs.grid);
                CHECK_MESSAGE(s.ok, c << " k=" << k << ": " << s.violation);
            }
        }
    }
}

TEST_CASE("interior filled") {
    const CurveSet& filling = catalogCurveSet("folding-r9-filling");
    const CurveSet& r5 = catalogCurveSet("folding-r5");
    const CurveSet& sausage = catalogCurveSet("sausage");
    const Prototile& t = tileNamed(filling.grid, "[L+R+]^2");
    CHECK(checkInteriorFilled(filling, t, 1));
    long long missing = 0;
    CHECK_FALSE(checkInteriorFilled(r5, tileNamed(r5.grid, "[L+R+]^2"), 1, &missing));
    CHECK(missing > 0);
    CHECK(checkInteriorFilled(sausage, tileNamed(sausage.grid, "[L+R+]^2"), 1));
    // a boundary that does not close
    CurveSet broken = filling;
    broken.productions['L'] = parseWord("L+R", 4, false);
    CHECK_THROWS_AS(checkInteriorFilled(broken, t, 1), Error);
}

TEST_CASE("coverage") {
    CoverageDiagnostic ju = checkCoverage(catalogCurveSet("ju19"), 3, 3);
    CHECK(ju.missing == 0);
    CHECK(ju.pass);
    CoverageDiagnostic fi = checkCoverage(catalogCurveSet("fischer"), 6, 3);
    CHECK(fi.missing > 0);
    CHECK_FALSE(fi.pass);
    CoverageDiagnostic ke = checkCoverage(catalogCurveSet("keili"), 6, 3);
    CHECK(ke.missing == 0);
    CHECK(ke.aspectRising);
    for (const auto& [c, series] : ke.aspectSeries) {
        CAPTURE(c);
        // the first iterate is the production itself, too short to have a shape
        REQUIRE(series.size() >= 4);
        for (size_t i = 2; i < series.size(); ++i) CHECK(series[i] > series[i - 1]);
        CHECK(series.back() > 3 * series[1]);
    }
    CoverageDiagnostic sa = checkCoverage(catalogCurveSet("sausage"), 6, 3);
    CHECK_FALSE(sa.pass);
    // k is raised for low orders so a radius-3 disc fits
    CHECK(checkCoverage(catalogCurveSet("terdragon"), 1, 3).k >= 5);
}

TEST_CASE("aspect helpers") {
    std::vector<std::complex<double>> square = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    CHECK(std::abs(aspectRatio(square) - 1.0) < 1e-9);
    std::vector<std::complex<double>> line = {{0, 0}, {1, 0.01}, {2, 0}, {3, 0.01}};
    CHECK(aspectRatio(line) > 50);
    CHECK(aspectRises({1.0, 1.2, 1.5, 1.6}));
    CHECK_FALSE(aspectRises({1.0, 1.2, 1.25, 1.4}));
}

TEST_CASE("scale analysis") {
    ScaleAnalysis td = analyzeScale(catalogCurveSet("terdragon"));
    CHECK(td.consistent());
    CHECK(td.similarity);
    REQUIRE(td.lambda);
    CHECK(td.lambda->num.norm().rational() == 3 * td.lambda->den * td.lambda->den);
    ScaleAnalysis ds = analyzeScale(catalogCurveSet("d-sq-r4"));
    REQUIRE(ds.lambda);
    CHECK(ds.lambda->num == Point::integer(2 * ds.lambda->den, 4));
    ScaleAnalysis ke = analyzeScale(catalogCurveSet("keili"));
    CHECK(ke.consistent());
    CHECK_FALSE(ke.similarity);
    ScaleAnalysis f5 = analyzeScale(catalogCurveSet("folding-r5"));
    CHECK(f5.det != 5);
}

TEST_CASE("verdicts") {
    ValidationReport ju = validate(catalogCurveSet("ju19"));
    CHECK(ju.verdict == Verdict::Valid);
    CHECK(ju.order == 19);
    CHECK(ju.gridConsistent == true);
    CHECK(ju.reasons.empty());
    ValidationReport sa = validate(catalogCurveSet("sausage"));
    CHECK(sa.verdict == Verdict::Invalid);
    CHECK_FALSE(sa.irreducible);
    ValidationReport nf = validate(catalogCurveSet("nofit-manta"));
    CHECK_FALSE(nf.gridConsistent.has_value());
    CHECK(nf.verdict == Verdict::Invalid);
    ValidationReport f9 = validate(catalogCurveSet("folding-r9"));
    CHECK(f9.verdict == Verdict::ValidWithCaveats);
    ValidationReport red = validate(catalogCurveSet("trihex-ab-bconst"));
    CHECK(red.verdict == Verdict::ValidWithCaveats);
    CHECK(red.constants == "B");
}

TEST_CASE("report formats") {
    ValidationReport r = validate(catalogCurveSet("terdragon"));
    std::string text = reportText(r);
    CHECK(text.find("verdict: Valid") != std::string::npos);
    CHECK(text.find("not proven") != std::string::npos);
    auto j = nlohmann::json::parse(reportJson(r));
    CHECK(j["verdict"] == "Valid");
    CHECK(j["order"] == 3);
    CHECK(j["coverage"]["missing"] == 0);
}

} // TEST_SUITE
