#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "gridcurve/catalog.hpp"
#include "gridcurve/error.hpp"
#include "gridcurve/lsystem.hpp"
#include "gridcurve/specio.hpp"

using namespace gridcurve;

namespace {

std::string fmt(const Word& w, const GridSpec& g) { return formatWord(w, g.n, g.doubleEdges); }

std::string prodText(const CurveSet& cs, char c) { return fmt(cs.production(c), cs.grid); }

SubstMatrix multiply(const SubstMatrix& a, const SubstMatrix& b) {
    size_t n = a.size();
    SubstMatrix c(n, std::vector<long long>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
            for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

// Counts by direct letter substitution, independent of the matrix code.
std::map<char, long long> countLetters(const CurveSet& cs, char start, int k) {
    std::map<char, long long> cur{{start, 1}};
    for (int i = 0; i < k; ++i) {
        std::map<char, long long> next;
        for (const auto& [c, n] : cur)
            for (char d : cs.production(c).letters) next[d] += n;
        cur = next;
    }
    return cur;
}

Word randomLR(std::mt19937& rng, int len) {
    Word w;
    for (int i = 0; i < len; ++i) {
        w.appendLetter(rng() % 2 ? 'L' : 'R');
        if (i + 1 < len) w.appendTurn(rng() % 2 ? 1 : -1);
    }
    return w;
}

} // namespace

TEST_SUITE("lsystem") {

TEST_CASE("expansion") {
    const CurveSet& td = catalogCurveSet("terdragon");
    CHECK(fmt(expand(td, Word::letter('F'), 2), td.grid) == "F+F-F+F+F-F-F+F-F");
    Word ax = parseAxiom("F+F", td.grid);
    CHECK(expand(td, ax, 0) == ax);
    const CurveSet& ju = catalogCurveSet("ju19");
    Word a1 = expand(ju, Word::letter('A'), 1);
    CHECK(a1.size() == 25);
    CHECK(fmt(a1, ju.grid) ==
          "A++A++A++A---B---A---B++++B++++B---A++A++A++A---B---A---B++++B---A---B++++B---A---B++++B++++B---A");
}

TEST_CASE("substitution matrices") {
    CHECK(substMatrix(catalogCurveSet("ju19")) == SubstMatrix{{13, 6}, {12, 7}});
    CHECK(substMatrix(catalogCurveSet("fischer")) ==
          SubstMatrix{{2, 4, 0, 0}, {1, 5, 0, 0}, {0, 0, 5, 1}, {0, 0, 4, 2}});
    CHECK(substMatrix(catalogCurveSet("tri-r13-1")) == SubstMatrix{{13}});
}

TEST_CASE("orders") {
    CHECK(order(catalogCurveSet("ju19")) == 19);
    CHECK(order(catalogCurveSet("terdragon")) == 3);
    try {
        order(catalogCurveSet("nofit-manta"));
        FAIL("expected UnequalRowSums");
    } catch (const UnequalRowSums& e) {
        // rows F and H
        CHECK(e.rowSums == std::vector<long long>{12, 3});
    }
}

TEST_CASE("irreducibility") {
    CHECK(isIrreducible(substMatrix(catalogCurveSet("ju19"))));
    CHECK_FALSE(isIrreducible(substMatrix(catalogCurveSet("fischer"))));
    CHECK_FALSE(isIrreducible(substMatrix(catalogCurveSet("sausage"))));
    CHECK(isIrreducible(SubstMatrix{{0, 1}, {1, 0}}));
    CHECK_FALSE(isIrreducible(SubstMatrix{{1, 1}, {0, 1}}));
}

TEST_CASE("dimension") {
    const CurveSet& cs = catalogCurveSet("3446-3464-r7");
    SubstMatrix m = substMatrix(cs);
    CHECK(std::abs(dimension(m, 7, cs.grid.index('A')) - 2.0) < 1e-9);
    CHECK(std::abs(dimension(m, 7, cs.grid.index('F')) - 2 * std::log(5.0) / std::log(7.0)) < 1e-9);
    CHECK(dimension(m, 7, cs.grid.index('B')) == 0.0);
    CHECK(std::abs(dimension(catalogCurveSet("ju19"), 'A') - 2.0) < 1e-9);
    CHECK(dimension(catalogCurveSet("sausage"), 'R') == 0.0);
    CHECK_THROWS_AS(dimension(cs, 'A'), UnequalRowSums);
}

TEST_CASE("spectral radius of small matrices") {
    // eigenvalues of [[2,1],[1,2]] are 3 and 1; [[0,2],[2,0]] is periodic with radius 2
    CHECK(std::abs(spectralRadius({{2, 1}, {1, 2}}) - 3.0) < 1e-12);
    CHECK(std::abs(spectralRadius({{0, 2}, {2, 0}}) - 2.0) < 1e-12);
    CHECK(std::abs(spectralRadius({{1, 1}, {1, 0}}) - (1 + std::sqrt(5.0)) / 2) < 1e-12);
}

TEST_CASE("folding construction") {
    const GridSpec& g = catalogGrid("square-lr");
    auto w = [&](const char* s) { return parseWord(s, g.n, false); };
    CHECK(fmt(makeFolding(w("L+R+L-R+L+R-L+R-L")), g) == "R+L-R+L-R-L+R-L-R");
    CHECK(fmt(makeFolding(w("L")), g) == "R");
    CHECK(fmt(makeFolding(w("L+R")), g) == "L-R");
    CHECK(fmt(makeFolding(catalogCurveSet("folding-r9").production('L')), g) ==
          prodText(catalogCurveSet("folding-r9"), 'R'));
    CHECK_THROWS_AS(makeFolding(parseWord("L+X", 4, false)), Error);
    std::mt19937 rng(3);
    for (int i = 0; i < 50; ++i) {
        Word x = randomLR(rng, 1 + static_cast<int>(rng() % 9));
        CHECK(makeFolding(makeFolding(x)) == x);
        CHECK(reversalComplement(reversalComplement(x, {}), {}) == x);
    }
}

TEST_CASE("reversal complement") {
    const CurveSet& dt = catalogCurveSet("d-trihex-r13");
    CHECK(fmt(reversalComplement(dt.production('F'), {{'F', 'G'}}), dt.grid) ==
          "G++G-G-G++G++G-G-G++G-G-G-G-G");
    CHECK(fmt(reversalComplement(parseWord("A", 6, true), {{'A', 'B'}}), dt.grid) == "B");
    // the order-13 triangle map on six turn units
    Word r13 = relabel(catalogCurveSet("tri-r13-1").production('F'), {{'F', 'A'}});
    for (int& t : r13.turns) t *= 2;
    const CurveSet& ab = catalogCurveSet("d-tri-ab-r13");
    std::string b = fmt(reversalComplement(r13, {{'A', 'B'}}), ab.grid);
    CHECK(b == "B++B--B--B0B++B++B--B++B0B0B--B0B");
}

TEST_CASE("dropping constant letters") {
    CurveSet tri = dropLettersNormalize(catalogCurveSet("trihex-ab-bconst"), "B", 3);
    CHECK(fmt(relabel(tri.production('A'), {{'A', 'F'}}), tri.grid) == "F+F-F-F+F-F+F+F0F-F-F+F-F+F+F-F");
    CurveSet hex = dropLettersNormalize(catalogCurveSet("3464-bconst"), "B", 6);
    CHECK(hex.grid.doubleEdges);
    CHECK(fmt(hex.production('A'), hex.grid) == "A+A-A+A+A!A-A+A+A!A+A+A!A+A+A+A+A+A-A");
    const CurveSet& ju = catalogCurveSet("ju19");
    CurveSet same = dropLettersNormalize(ju, "");
    CHECK(same.productions == ju.productions);
    CHECK_THROWS_AS(dropLettersNormalize(ju, "B"), Error);
    // turns that do not divide into the target units
    CHECK_THROWS_AS(dropLetters(parseWord("A+A", 12, false), "", 12, 6), Error);
}

TEST_CASE("embedding and rewriting recipes") {
    CHECK(embedTriangleOn36_3366("F") == "A");
    CHECK(embedTriangleOn36_3366(prodText(catalogCurveSet("tri-r13-15"), 'F')) ==
          prodText(catalogCurveSet("36-3366-r13"), 'A'));
    CHECK(rewriteText("F+F-F", {{"+", "p"}, {"-", "m"}, {"p", "-"}, {"m", "+"}}) == "F-F+F");
    CHECK(fmt(rewrite("A+-A", {}, 4, false), catalogGrid("square")) == "A0A");
    CHECK_THROWS(rewrite("A+A", {{"A", "?"}}, 4, false));
}

TEST_CASE("the (4.8.8) decoration runs over the grid points") {
    std::string d = decorateDSquareOn488(prodText(catalogCurveSet("d-sq-r4"), 'A'));
    Word w = parseWord(d, 8, true, true);
    Patch p = realize(catalogGrid("d488"), 12);
    std::set<Point> verts;
    for (const auto& [e, c] : p.edges) {
        (void)c;
        verts.insert(e.tail);
    }
    bool covered = false;
    for (int sd = 0; sd < 8 && !covered; ++sd) {
        TraceResult tr = trace(w, Point::zero(8), sd);
        covered = verts.count(tr.end) > 0;
        for (const TracedEdge& e : tr.edges) covered = covered && verts.count(e.tail) > 0;
    }
    CHECK(covered);
}

TEST_CASE("letter counts match matrix powers") {
    for (const CatalogEntry& e : catalogCurveSets()) {
        const CurveSet& cs = *e.set;
        CAPTURE(cs.name);
        SubstMatrix m = substMatrix(cs);
        SubstMatrix p = m;
        for (int k = 1; k <= 4; ++k) {
            for (size_t c = 0; c < cs.grid.letters.size(); ++c) {
                char x = cs.grid.letters[c];
                long long col = 0;
                auto counts = countLetters(cs, x, k);
                for (size_t r = 0; r < m.size(); ++r) {
                    col += p[r][c];
                    CHECK(p[r][c] == counts[cs.grid.letters[r]]);
                }
                CHECK(expandedLength(cs, Word::letter(x), k) == col);
                if (col < 200000) CHECK(static_cast<long long>(expand(cs, Word::letter(x), k).size()) == col);
            }
            p = multiply(m, p);
        }
    }
}

TEST_CASE("orders of the main catalog") {
    std::set<long long> seen;
    for (const CatalogEntry& e : catalogCurveSets(CatalogGroup::Main)) {
        CAPTURE(e.set->name);
        long long r = 0;
        CHECK_NOTHROW(r = order(*e.set));
        seen.insert(r);
    }
    for (long long r : {3, 4, 5, 6, 7, 9, 13, 16, 19, 25, 27, 29, 31, 36, 37, 49, 61, 67, 85, 109})
        CHECK_MESSAGE(seen.count(r), "order " << r);
}

TEST_CASE("single-letter displacements") {
    auto normOf = [](const CurveSet& cs, char c) {
        return trace(cs.production(c), Point::zero(cs.grid.n), 0).end.norm().rational();
    };
    CHECK(normOf(catalogCurveSet("terdragon"), 'F') == 3);
    CHECK(trace(catalogCurveSet("d-sq-r4").production('A'), Point::zero(4), 0).end == Point(4, {2, 0}));
    Point sq5 = trace(catalogCurveSet("sq-r5").production('F'), Point::zero(4), 0).end;
    bool unitMultiple = false;
    for (int k = 0; k < 4; ++k) unitMultiple = unitMultiple || sq5 == Point(4, {2, 1}).rotated(k) ||
                                               sq5 == Point(4, {2, -1}).rotated(k);
    CHECK(unitMultiple);
}

} // TEST_SUITE
