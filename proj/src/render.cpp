#include "gridcurve/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>

#include "gridcurve/error.hpp"

namespace gridcurve {

namespace {

using C = std::complex<double>;

constexpr int kMaxFaceWalk = 64;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    std::string s = buf;
    if (s == "-0.0000") s = "0.0000";
    return s;
}

struct Box {
    double minX = std::numeric_limits<double>::infinity();
    double minY = std::numeric_limits<double>::infinity();
    double maxX = -std::numeric_limits<double>::infinity();
    double maxY = -std::numeric_limits<double>::infinity();

    void add(C p, double pad = 0) {
        minX = std::min(minX, p.real() - pad);
        maxX = std::max(maxX, p.real() + pad);
        minY = std::min(minY, p.imag() - pad);
        maxY = std::max(maxY, p.imag() + pad);
    }
    bool empty() const { return minX > maxX; }
};

// Math coordinates to SVG user units (y down).
struct Frame {
    double scale = 1;
    std::string x(C p) const { return fmt(p.real() * scale); }
    std::string y(C p) const { return fmt(-p.imag() * scale); }
    std::string xy(C p) const { return x(p) + "," + y(p); }
};

std::string svgDocument(const Box& box, double scale, const std::string& body) {
    double minX = 0, minY = 0, w = 1, h = 1;
    if (!box.empty()) {
        // flip y, then add a 5% margin on each side
        minX = box.minX * scale;
        minY = -box.maxY * scale;
        w = (box.maxX - box.minX) * scale;
        h = (box.maxY - box.minY) * scale;
        double m = 0.05 * std::max({w, h, 1e-9});
        minX -= m;
        minY -= m;
        w += 2 * m;
        h += 2 * m;
    }
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << fmt(minX) << " " << fmt(minY)
        << " " << fmt(w) << " " << fmt(h) << "\" width=\"" << fmt(w) << "\" height=\"" << fmt(h) << "\">\n";
    if (body.empty())
        out << "<g/>\n";
    else
        out << "<g>\n" << body << "</g>\n";
    out << "</svg>\n";
    return out.str();
}

C unitVec(int dir, int n) { return std::polar(1.0, 2 * std::numbers::pi * dir / n); }

int orientationClass(int dir, int n) { return n % 2 == 0 ? normDir(dir, n) % (n / 2) : normDir(dir, n); }

std::vector<std::string> edgeColors(const TraceResult& tr, const GridSpec& grid, const RenderStyle& style,
                                    const std::vector<int>* ancestors) {
    if (style.palette.empty()) throw Error("empty palette");
    const auto pick = [&](long long i) {
        long long m = static_cast<long long>(style.palette.size());
        return style.palette[static_cast<size_t>(((i % m) + m) % m)];
    };
    std::vector<std::string> out;
    out.reserve(tr.edges.size());
    if (style.scheme == ColorScheme::ByAncestor) {
        if (!ancestors) throw Error("ancestor coloring needs ancestor indices");
        if (ancestors->size() != tr.edges.size()) throw Error("ancestor indices do not match the word");
    }
    for (size_t i = 0; i < tr.edges.size(); ++i) {
        const TracedEdge& e = tr.edges[i];
        switch (style.scheme) {
        case ColorScheme::ByLetter: out.push_back(pick(std::max(grid.index(e.letter), 0))); break;
        case ColorScheme::ByAncestor: out.push_back(pick((*ancestors)[i])); break;
        case ColorScheme::ByOrientation: out.push_back(pick(orientationClass(e.dir, grid.n))); break;
        }
    }
    return out;
}

TraceResult traceChecked(const Word& word, const GridSpec& grid) {
    std::string why;
    if (!word.empty() && !grid.generic && !wordFollowsGrid(word, grid, &why))
        throw Error("word does not follow grid " + grid.name + ": " + why);
    return trace(word, Point::zero(grid.n), 0);
}

struct Cmd {
    char op = 'L'; // 'M', 'L', 'A'
    C p;
    double radius = 0;
    bool leftTurn = true;
};

// Centroid of the face walked from (letter, dir) by always taking the
// largest (left) or smallest (right) face turn, relative to the tail.
class FaceCenters {
public:
    explicit FaceCenters(const GridSpec& g) : grid_(g) {}

    std::optional<C> offset(char letter, int dir, bool left) {
        auto key = std::make_tuple(letter, normDir(dir, grid_.n), left);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        std::optional<C> v = walk(letter, normDir(dir, grid_.n), left);
        cache_.emplace(key, v);
        return v;
    }

private:
    std::optional<C> walk(char letter, int dir, bool left) const {
        int n = grid_.n;
        C pos = 0, sum = 0;
        char cur = letter;
        int d = dir;
        for (int step = 0; step < kMaxFaceWalk; ++step) {
            sum += pos;
            pos += unitVec(d, n);
            auto succ = grid_.successors(cur);
            if (succ.empty()) return std::nullopt;
            const std::pair<int, char>* best = nullptr;
            for (const auto& s : succ) {
                if (!best) {
                    best = &s;
                    continue;
                }
                int a = faceTurn(s.first, n), b = faceTurn(best->first, n);
                if (left ? a > b : a < b) best = &s;
            }
            d = normDir(d + best->first, n);
            cur = best->second;
            if (cur == letter && d == dir && std::abs(pos) < 1e-9) {
                if (step + 1 < 3 && !grid_.doubleEdges) return std::nullopt;
                return sum / static_cast<double>(step + 1);
            }
        }
        return std::nullopt;
    }

    const GridSpec& grid_;
    std::map<std::tuple<char, int, bool>, std::optional<C>> cache_;
};

} // namespace

const std::vector<std::string>& defaultPalette() {
    static const std::vector<std::string> p = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b",
                                               "#e377c2", "#17becf", "#bcbd22", "#7f7f7f", "#393b79", "#637939"};
    return p;
}

std::vector<std::string> makePalette(int count) {
    std::vector<std::string> out;
    for (int i = 0; i < count; ++i) {
        double h = 360.0 * i / std::max(count, 1);
        // HSV with s = 0.75, v = 0.85
        double s = 0.75, v = 0.85, c = v * s;
        double hp = h / 60.0;
        double x = c * (1 - std::fabs(std::fmod(hp, 2.0) - 1));
        double r = 0, g = 0, b = 0;
        if (hp < 1) { r = c; g = x; }
        else if (hp < 2) { r = x; g = c; }
        else if (hp < 3) { g = c; b = x; }
        else if (hp < 4) { g = x; b = c; }
        else if (hp < 5) { r = x; b = c; }
        else { r = c; b = x; }
        double m = v - c;
        char buf[8];
        std::snprintf(buf, sizeof buf, "#%02x%02x%02x", static_cast<int>(std::lround((r + m) * 255)),
                      static_cast<int>(std::lround((g + m) * 255)), static_cast<int>(std::lround((b + m) * 255)));
        out.emplace_back(buf);
    }
    return out;
}

std::vector<int> ancestorIndices(const CurveSet& cs, const Word& axiom, int k) {
    if (k < 1) throw Error("ancestor coloring needs k >= 1");
    Word first = expand(cs, axiom, 1);
    std::vector<int> out;
    for (size_t j = 0; j < first.size(); ++j) {
        long long len = expandedLength(cs, Word::letter(first.letters[j]), k - 1);
        out.insert(out.end(), static_cast<size_t>(len), static_cast<int>(j));
    }
    return out;
}

std::vector<LineRun> lineRuns(const Word& word, const GridSpec& grid, const RenderStyle& style,
                              const std::vector<int>* ancestors) {
    if (style.cornerRadius < 0 || style.cornerRadius > 0.5) throw Error("corner radius must be in [0, 0.5]");
    TraceResult tr = traceChecked(word, grid);
    std::vector<std::string> colors = edgeColors(tr, grid, style, ancestors);
    const int n = grid.n;
    const size_t m = tr.edges.size();
    // double edges run in a lane right of the center line so both directions show
    const double lane = grid.doubleEdges ? style.cornerRadius / 2 : 0.0;
    std::vector<C> a(m), b(m), u(m);
    for (size_t i = 0; i < m; ++i) {
        u[i] = unitVec(tr.edges[i].dir, n);
        C off = lane * u[i] * C(0, -1);
        a[i] = tr.edges[i].tail.toComplex() + off;
        b[i] = a[i] + u[i];
    }
    // per edge: commands ending the edge, including the corner that follows it
    std::vector<std::vector<Cmd>> cmds(m);
    C start = m ? a[0] : C(0);
    for (size_t i = 0; i < m; ++i) {
        if (i + 1 == m) {
            cmds[i].push_back({'L', b[i]});
            break;
        }
        int t = normTurn(tr.edges[i + 1].dir - tr.edges[i].dir, n);
        if (t == 0) {
            cmds[i].push_back({'L', b[i]});
            continue;
        }
        if (2 * t == n || 2 * t == -n) {
            cmds[i].push_back({'L', b[i]});
            if (lane > 0) cmds[i].push_back({'A', a[i + 1], lane, true});
            else cmds[i].push_back({'L', a[i + 1]});
            continue;
        }
        double theta = std::abs(2 * std::numbers::pi * t / n);
        // corner: intersection of the two lanes
        C d1 = u[i], d2 = u[i + 1];
        C diff = a[i + 1] - a[i];
        double den = d1.real() * d2.imag() - d1.imag() * d2.real();
        double s = (diff.real() * d2.imag() - diff.imag() * d2.real()) / den;
        C corner = a[i] + s * d1;
        double tangent = style.cornerRadius * std::tan(theta / 2);
        tangent = std::min(tangent, 0.5 * std::max(0.0, std::min(std::abs(corner - a[i]), std::abs(b[i + 1] - corner))));
        if (tangent <= 1e-12) {
            cmds[i].push_back({'L', corner});
            continue;
        }
        double radius = tangent / std::tan(theta / 2);
        cmds[i].push_back({'L', corner - tangent * d1});
        cmds[i].push_back({'A', corner + tangent * d2, radius, t > 0});
    }

    Frame f{style.scale};
    std::vector<LineRun> runs;
    C pen = start;
    for (size_t i = 0; i < m;) {
        LineRun run;
        run.color = colors[i];
        run.firstEdge = i;
        std::ostringstream d;
        d << "M" << f.xy(pen);
        size_t j = i;
        for (; j < m && colors[j] == run.color; ++j) {
            for (const Cmd& c : cmds[j]) {
                if (c.op == 'L') {
                    d << " L" << f.xy(c.p);
                    ++run.segments;
                } else {
                    double r = c.radius * style.scale;
                    // math CCW is negative sweep once y is flipped
                    d << " A" << fmt(r) << "," << fmt(r) << " 0 0 " << (c.leftTurn ? 0 : 1) << " " << f.xy(c.p);
                    ++run.arcs;
                }
                pen = c.p;
            }
        }
        run.edgeCount = j - i;
        run.d = d.str();
        runs.push_back(std::move(run));
        i = j;
    }
    return runs;
}

std::string renderLine(const Word& word, const GridSpec& grid, const RenderStyle& style,
                       const std::vector<int>* ancestors) {
    std::vector<LineRun> runs = lineRuns(word, grid, style, ancestors);
    TraceResult tr = trace(word, Point::zero(grid.n), 0);
    Box box;
    for (const TracedEdge& e : tr.edges) {
        box.add(e.tail.toComplex(), style.strokeWidth);
        box.add(e.tail.toComplex() + unitVec(e.dir, grid.n), style.strokeWidth);
    }
    std::ostringstream body;
    for (const LineRun& r : runs)
        body << "<path d=\"" << r.d << "\" fill=\"none\" stroke=\"" << r.color << "\" stroke-width=\""
             << fmt(style.strokeWidth * style.scale) << "\" stroke-linecap=\"round\" stroke-linejoin=\"round\"/>\n";
    return svgDocument(box, style.scale, body.str());
}

std::vector<AreaPiece> areaPieces(const Word& word, const GridSpec& grid, const RenderStyle& style,
                                  const std::vector<int>* ancestors) {
    TraceResult tr = traceChecked(word, grid);
    std::vector<std::string> colors = edgeColors(tr, grid, style, ancestors);
    FaceCenters centers(grid);
    std::vector<AreaPiece> out;
    out.reserve(tr.edges.size());
    for (size_t i = 0; i < tr.edges.size(); ++i) {
        const TracedEdge& e = tr.edges[i];
        C tail = e.tail.toComplex();
        C dirv = unitVec(e.dir, grid.n);
        C head = tail + dirv;
        C mid = (tail + head) / 2.0;
        AreaPiece piece;
        piece.edge = i;
        piece.color = colors[i];
        std::optional<C> left = centers.offset(e.letter, e.dir, true);
        C l = left ? tail + *left : mid + 0.5 * dirv * C(0, 1);
        if (grid.doubleEdges) {
            piece.rim = !left;
            piece.polygon = {tail, head, l};
        } else {
            std::optional<C> right = centers.offset(e.letter, e.dir, false);
            C r = right ? tail + *right : mid + 0.5 * dirv * C(0, -1);
            piece.rim = !left || !right;
            piece.polygon = {tail, r, head, l};
        }
        out.push_back(std::move(piece));
    }
    return out;
}

std::string renderArea(const Word& word, const GridSpec& grid, const RenderStyle& style,
                       const std::vector<int>* ancestors) {
    std::vector<AreaPiece> pieces = areaPieces(word, grid, style, ancestors);
    Frame f{style.scale};
    Box box;
    std::ostringstream body;
    for (const AreaPiece& p : pieces) {
        body << "<polygon points=\"";
        for (size_t i = 0; i < p.polygon.size(); ++i) {
            box.add(p.polygon[i]);
            body << (i ? " " : "") << f.xy(p.polygon[i]);
        }
        body << "\" fill=\"" << p.color << "\"";
        if (style.drawBorders)
            body << " stroke=\"#bbbbbb\" stroke-width=\"" << fmt(0.02 * style.scale) << "\"";
        body << "/>\n";
    }
    return svgDocument(box, style.scale, body.str());
}

std::string render(const Word& word, const GridSpec& grid, const RenderStyle& style,
                   const std::vector<int>* ancestors) {
    return style.mode == RenderMode::Line ? renderLine(word, grid, style, ancestors)
                                          : renderArea(word, grid, style, ancestors);
}

std::string renderPoints(const std::vector<C>& pts, const RenderStyle& style, double size) {
    Frame f{style.scale};
    Box box;
    std::ostringstream d;
    for (const C& p : pts) {
        C corner = p - C(size / 2, -size / 2);
        box.add(p, size);
        d << "M" << f.xy(corner) << " h" << fmt(size * style.scale) << " v" << fmt(size * style.scale) << " h"
          << fmt(-size * style.scale) << " Z ";
    }
    std::string body;
    if (!pts.empty()) {
        std::string path = d.str();
        path.pop_back();
        body = "<path d=\"" + path + "\" fill=\"" + style.palette.front() + "\" stroke=\"none\"/>\n";
    }
    return svgDocument(box, style.scale, body);
}

double polygonArea(const std::vector<C>& poly) {
    double s = 0;
    for (size_t i = 0; i < poly.size(); ++i) {
        const C& p = poly[i];
        const C& q = poly[(i + 1) % poly.size()];
        s += p.real() * q.imag() - q.real() * p.imag();
    }
    return s / 2;
}

bool checkSvg(const std::string& svg, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    static const std::vector<std::string> allowed = {"svg", "g", "path", "polygon"};
    std::vector<std::string> stack;
    int roots = 0;
    size_t i = 0;
    while ((i = svg.find('<', i)) != std::string::npos) {
        size_t close = svg.find('>', i);
        if (close == std::string::npos) return fail("unterminated tag");
        std::string tag = svg.substr(i + 1, close - i - 1);
        i = close + 1;
        if (tag.empty()) return fail("empty tag");
        if (tag[0] == '?' || tag[0] == '!') continue;
        if (tag[0] == '/') {
            std::string name = tag.substr(1);
            if (stack.empty() || stack.back() != name) return fail("mismatched </" + name + ">");
            stack.pop_back();
            continue;
        }
        bool selfClosing = tag.back() == '/';
        if (selfClosing) tag.pop_back();
        std::string name = tag.substr(0, tag.find_first_of(" \t\n"));
        if (std::find(allowed.begin(), allowed.end(), name) == allowed.end()) return fail("element <" + name + ">");
        if (stack.empty()) {
            if (name != "svg") return fail("root is <" + name + ">");
            if (++roots > 1) return fail("more than one root");
        }
        // attribute values: quotes balanced, numbers finite
        if (std::count(tag.begin(), tag.end(), '"') % 2 != 0) return fail("unbalanced quotes in <" + name + ">");
        if (tag.find("nan") != std::string::npos || tag.find("inf") != std::string::npos)
            return fail("non-finite coordinate in <" + name + ">");
        if (!selfClosing) stack.push_back(name);
    }
    if (!stack.empty()) return fail("unclosed <" + stack.back() + ">");
    if (roots != 1) return fail("no <svg> root");
    return true;
}

} // namespace gridcurve
