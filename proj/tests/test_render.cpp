#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <set>
#include <sstream>

#include "gridcurve/catalog.hpp"
#include "gridcurve/render.hpp"

using namespace gridcurve;

namespace {

using C = std::complex<double>;

struct Command {
    char op;
    std::vector<double> args;
};

std::vector<Command> parsePath(const std::string& d) {
    std::vector<Command> out;
    std::string s = d;
    for (char& c : s)
        if (c == ',') c = ' ';
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
        if (std::isalpha(static_cast<unsigned char>(tok[0]))) {
            out.push_back({tok[0], {}});
            tok = tok.substr(1);
            if (tok.empty()) continue;
        }
        REQUIRE_FALSE(out.empty());
        out.back().args.push_back(std::stod(tok));
    }
    return out;
}

// Vertices of the traced word in floating point.
std::vector<C> turtle(const Word& w, int n, int dir0) {
    std::vector<C> pts{0};
    int dir = dir0;
    for (size_t i = 0; i < w.letters.size(); ++i) {
        if (i > 0) dir += w.turns[i];
        double a = 2 * M_PI * dir / n;
        pts.push_back(pts.back() + std::polar(1.0, a));
    }
    return pts;
}

// SVG user coordinates of a math point.
C toSvg(C z, double scale) { return {z.real() * scale, -z.imag() * scale}; }

bool inside(const std::vector<C>& poly, C p) {
    bool in = false;
    for (size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
        C a = poly[i], b = poly[j];
        if ((a.imag() > p.imag()) != (b.imag() > p.imag()) &&
            p.real() < (b.real() - a.real()) * (p.imag() - a.imag()) / (b.imag() - a.imag()) + a.real())
            in = !in;
    }
    return in;
}

// Random sample points lie in at most one piece.
int overlaps(const std::vector<AreaPiece>& pieces, int samples) {
    double x0 = 1e9, x1 = -1e9, y0 = 1e9, y1 = -1e9;
    for (const auto& p : pieces)
        for (C z : p.polygon) {
            x0 = std::min(x0, z.real());
            x1 = std::max(x1, z.real());
            y0 = std::min(y0, z.imag());
            y1 = std::max(y1, z.imag());
        }
    std::mt19937 rng(1);
    std::uniform_real_distribution<double> ux(x0, x1), uy(y0, y1);
    int bad = 0;
    for (int s = 0; s < samples; ++s) {
        C p(ux(rng), uy(rng));
        int hits = 0;
        for (const auto& piece : pieces) hits += inside(piece.polygon, p);
        bad += hits > 1;
    }
    return bad;
}

int countOf(const std::string& s, const std::string& needle) {
    int n = 0;
    for (size_t p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
    return n;
}

} // namespace

TEST_SUITE("render") {

TEST_CASE("svg checker") {
    CHECK(checkSvg("<svg xmlns=\"http://www.w3.org/2000/svg\"><g><path d=\"M0,0 L1,1\"/></g></svg>"));
    std::string why;
    CHECK_FALSE(checkSvg("<svg><script>x</script></svg>", &why));
    CHECK_FALSE(why.empty());
    CHECK_FALSE(checkSvg("<svg><g></svg>"));
    CHECK_FALSE(checkSvg("<svg></svg><svg></svg>"));
    CHECK_FALSE(checkSvg("<svg><path d=\"M0,0 L1,1/></svg>"));
    CHECK_FALSE(checkSvg("<svg><path d=\"M0,0 Lnan,1\"/></svg>"));
    CHECK_FALSE(checkSvg("<svg><polygon points=\"0,0 inf,1\"/></svg>"));
    CHECK_FALSE(checkSvg(""));
}

TEST_CASE("palettes") {
    CHECK(defaultPalette().size() == 12);
    auto p = makePalette(19);
    CHECK(p.size() == 19);
    CHECK(std::set<std::string>(p.begin(), p.end()).size() == 19);
    for (const auto& c : p) CHECK(c.size() == 7);
}

TEST_CASE("sharp lines follow the turtle") {
    RenderStyle style;
    style.cornerRadius = 0;
    for (auto [name, axiom, k] : {std::tuple{"terdragon", "F", 3}, {"ju19", "A", 2}, {"folding-r9", "L", 2}}) {
        CAPTURE(name);
        const CurveSet& cs = catalogCurveSet(name);
        Word w = expand(cs, parseWord(axiom, cs.grid.n, cs.grid.doubleEdges), k);
        auto pts = turtle(w, cs.grid.n, 0);
        auto runs = lineRuns(w, cs.grid, style);
        size_t next = 0;
        for (const auto& run : runs) {
            CHECK(run.firstEdge == next);
            CHECK(run.arcs == 0);
            auto cmds = parsePath(run.d);
            REQUIRE(cmds.size() == run.edgeCount + 1);
            for (size_t i = 0; i < cmds.size(); ++i) {
                CHECK(cmds[i].op == (i == 0 ? 'M' : 'L'));
                C want = toSvg(pts[run.firstEdge + i], style.scale);
                CHECK(std::abs(C(cmds[i].args[0], cmds[i].args[1]) - want) < 1e-3);
            }
            next += run.edgeCount;
        }
        CHECK(next == w.size());
        // letters with the same color share a run
        for (size_t i = 1; i < runs.size(); ++i) CHECK(runs[i].color != runs[i - 1].color);
        CHECK(checkSvg(renderLine(w, cs.grid, style)));
    }
}

TEST_CASE("fillets") {
    const CurveSet& ter = catalogCurveSet("terdragon");
    Word w = parseWord("F+F-F", 3, false);
    auto pts = turtle(w, 3, 0);
    for (double r : {0.1, 0.25, 0.5}) {
        CAPTURE(r);
        RenderStyle style;
        style.cornerRadius = r;
        auto runs = lineRuns(w, ter.grid, style);
        REQUIRE(runs.size() == 1);
        CHECK(runs[0].arcs == 2);
        auto cmds = parsePath(runs[0].d);
        // tangent length r tan(60 deg), at most half an edge
        double tangent = std::min(r * std::tan(M_PI / 3), 0.5);
        double radius = tangent / std::tan(M_PI / 3);
        int arcs = 0;
        for (size_t i = 1; i < cmds.size(); ++i) {
            if (cmds[i].op != 'A') continue;
            ++arcs;
            const auto& a = cmds[i].args;
            CHECK(std::abs(a[0] - radius * style.scale) < 1e-3);
            CHECK(std::abs(a[1] - radius * style.scale) < 1e-3);
            C corner = toSvg(pts[static_cast<size_t>(arcs)], style.scale);
            const auto& prev = cmds[i - 1].args;
            C start(prev[prev.size() - 2], prev[prev.size() - 1]), end(a[5], a[6]);
            CHECK(std::abs(std::abs(start - corner) - tangent * style.scale) < 1e-3);
            CHECK(std::abs(std::abs(end - corner) - tangent * style.scale) < 1e-3);
        }
        CHECK(arcs == 2);
        // a left turn in math coordinates is counterclockwise, sweep flag 0
        for (const auto& c : cmds)
            if (c.op == 'A') {
                CHECK((c.args[4] == 0 || c.args[4] == 1));
            }
        CHECK(cmds[2].op == 'A');
        CHECK(cmds[2].args[4] == 0);
        CHECK(cmds[4].args[4] == 1);
    }
}

TEST_CASE("double grids use lanes and U-turn arcs") {
    const GridSpec& dsq = catalogGrid("d-square");
    RenderStyle style;
    Word w = parseWord("A+A!A+A", 4, true);
    auto runs = lineRuns(w, dsq, style);
    REQUIRE(runs.size() == 1);
    auto cmds = parsePath(runs[0].d);
    // the lane is offset right by half the corner radius
    CHECK(std::abs(cmds[0].args[0] - 0) < 1e-3);
    CHECK(std::abs(cmds[0].args[1] - style.cornerRadius / 2 * style.scale) < 1e-3);
    bool semicircle = false;
    for (const auto& c : cmds)
        if (c.op == 'A' && std::abs(c.args[0] - style.cornerRadius / 2 * style.scale) < 1e-3) semicircle = true;
    CHECK(semicircle);
    CHECK(checkSvg(renderLine(w, dsq, style)));
}

TEST_CASE("ancestor indices") {
    for (auto [name, axiom] : {std::pair{"terdragon", "F"}, {"ju19", "A"}, {"3446-3464-r31", "A"}}) {
        CAPTURE(name);
        const CurveSet& cs = catalogCurveSet(name);
        Word ax = parseWord(axiom, cs.grid.n, cs.grid.doubleEdges);
        Word first = expand(cs, ax, 1);
        for (int k = 1; k <= 3; ++k) {
            if (expandedLength(cs, ax, k) > 200000) break;
            auto anc = ancestorIndices(cs, ax, k);
            CHECK(anc.size() == expandedLength(cs, ax, k));
            std::vector<long long> counts(first.size(), 0);
            for (size_t i = 0; i < anc.size(); ++i) {
                if (i > 0) CHECK(anc[i] >= anc[i - 1]);
                ++counts[static_cast<size_t>(anc[i])];
            }
            for (size_t j = 0; j < first.size(); ++j)
                CHECK(counts[j] == expandedLength(cs, Word::letter(first.letters[j]), k - 1));
        }
    }
}

TEST_CASE("ancestor coloring gives one run per first-iterate edge") {
    const CurveSet& ju = catalogCurveSet("ju19");
    Word w = expand(ju, Word::letter('A'), 2);
    auto anc = ancestorIndices(ju, Word::letter('A'), 2);
    RenderStyle style;
    style.scheme = ColorScheme::ByAncestor;
    const size_t strokes = expand(ju, Word::letter('A'), 1).size();
    style.palette = makePalette(static_cast<int>(strokes));
    auto runs = lineRuns(w, ju.grid, style, &anc);
    CHECK(runs.size() == strokes);
    for (const auto& r : runs) CHECK(r.edgeCount == expandedLength(ju, Word::letter(w.letters[r.firstEdge]), 1));
    std::string svg = renderLine(w, ju.grid, style, &anc);
    CHECK(checkSvg(svg));
    CHECK(countOf(svg, "<path") == static_cast<int>(strokes));
}

TEST_CASE("orientation coloring") {
    const CurveSet& cs = catalogCurveSet("3446-3464-r31");
    Word w = expand(cs, Word::letter('A'), 1);
    RenderStyle style;
    style.scheme = ColorScheme::ByOrientation;
    std::set<std::string> colors;
    for (const auto& r : lineRuns(w, cs.grid, style)) colors.insert(r.color);
    CHECK(colors.size() <= static_cast<size_t>(cs.grid.n / 2));
    CHECK(colors.size() == 6);
}

TEST_CASE("area pieces partition the swept region") {
    struct Case {
        const char* name;
        const char* axiom;
        int k;
        double pieceArea;
    };
    for (const Case& c : {Case{"sq-lr-r13", "L", 2, 0.5}, Case{"gosper", "F", 3, std::sqrt(3.0) / 6}, Case{"terdragon", "F", 4, std::sqrt(3.0) / 6},
                          Case{"d-sq-r4", "A", 3, 0.25}}) {
        CAPTURE(c.name);
        const CurveSet& cs = catalogCurveSet(c.name);
        Word w = expand(cs, parseWord(c.axiom, cs.grid.n, cs.grid.doubleEdges), c.k);
        RenderStyle style;
        style.mode = RenderMode::Area;
        auto pieces = areaPieces(w, cs.grid, style);
        REQUIRE(pieces.size() == w.size());
        double total = 0;
        for (const auto& p : pieces) {
            CHECK_FALSE(p.rim);
            CHECK(std::abs(polygonArea(p.polygon) - c.pieceArea) < 1e-9);
            total += polygonArea(p.polygon);
        }
        CHECK(std::abs(total - c.pieceArea * static_cast<double>(w.size())) < 1e-6);
        CHECK(overlaps(pieces, 3000) == 0);
        std::string svg = render(w, cs.grid, style);
        CHECK(checkSvg(svg));
        CHECK(countOf(svg, "<polygon") == static_cast<int>(pieces.size()));
    }
}

TEST_CASE("every catalog set renders") {
    for (const CatalogEntry& e : catalogCurveSets(CatalogGroup::Main)) {
        const CurveSet& cs = *e.set;
        CAPTURE(cs.name);
        char x = cs.grid.letters[0];
        for (char c : cs.grid.letters)
            if (!cs.isConstant(c)) {
                x = c;
                break;
            }
        Word ax = Word::letter(x);
        int k = 1;
        while (k < 8 && expandedLength(cs, ax, k + 1) < 5000) ++k;
        Word w = expand(cs, ax, k);
        for (RenderMode mode : {RenderMode::Line, RenderMode::Area}) {
            RenderStyle style;
            style.mode = mode;
            std::string why;
            CHECK_MESSAGE(checkSvg(render(w, cs.grid, style), &why), why);
        }
        RenderStyle area;
        area.mode = RenderMode::Area;
        int rim = 0;
        for (const auto& p : areaPieces(w, cs.grid, area)) rim += p.rim;
        CHECK(rim == 0);
    }
}

TEST_CASE("point clouds") {
    std::vector<C> pts{{0, 0}, {1, 0}, {0.5, 0.5}};
    std::string svg = renderPoints(pts, RenderStyle{});
    CHECK(checkSvg(svg));
    CHECK(countOf(svg, "<path") == 1);
    CHECK(countOf(svg, "M") == 3);
}

}
