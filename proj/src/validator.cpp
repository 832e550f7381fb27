#include "gridcurve/validator.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "gridcurve/error.hpp"
#include "gridcurve/parallel.hpp"

namespace gridcurve {

namespace {

using EdgeSet = std::unordered_set<DirectedEdge, EdgeHash>;

// Undirected identity of an edge: the representative with dir < n/2 on even n.
// On odd n the reverse of an edge is not a grid edge, so directed = undirected.
DirectedEdge undirectedKey(const DirectedEdge& e, int n) {
    if (n % 2 == 0 && e.dir >= n / 2) return {e.head(), e.dir - n / 2};
    return e;
}

// Edge identity used for coverage: directed on double grids.
DirectedEdge coverKey(const DirectedEdge& e, const GridSpec& g) {
    return g.doubleEdges ? e : undirectedKey(e, g.n);
}

// Trace with the first edge in direction 0.
TraceResult traceFromOrigin(const Word& w, int n) { return trace(w, Point::zero(n), -w.turns.front()); }

std::string tileName(const Prototile& t, const GridSpec& g) { return t.str(g); }

bool tileIsActive(const CurveSet& cs, const Prototile& t) {
    return std::any_of(t.letters.begin(), t.letters.end(), [&](char c) { return !cs.isConstant(c); });
}

long long ipow(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

int windingNumber(const std::vector<std::complex<double>>& poly, std::complex<double> p) {
    int w = 0;
    size_t m = poly.size();
    for (size_t i = 0; i < m; ++i) {
        auto a = poly[i], b = poly[(i + 1) % m];
        double cross = (b.real() - a.real()) * (p.imag() - a.imag()) - (p.real() - a.real()) * (b.imag() - a.imag());
        if (a.imag() <= p.imag()) {
            if (b.imag() > p.imag() && cross > 0) ++w;
        } else if (b.imag() <= p.imag() && cross < 0) {
            --w;
        }
    }
    return w;
}

// Test point for an edge: its midpoint nudged to the left.
std::complex<double> leftPoint(const DirectedEdge& e) {
    auto a = e.tail.toComplex(), b = e.head().toComplex();
    auto d = b - a;
    return (a + b) * 0.5 + std::complex<double>(-d.imag(), d.real()) * 1e-4;
}

double cross(std::complex<double> a, std::complex<double> b) { return a.real() * b.imag() - a.imag() * b.real(); }

double signedArea(const std::vector<std::complex<double>>& poly) {
    double s = 0;
    for (size_t i = 0; i < poly.size(); ++i) s += cross(poly[i], poly[(i + 1) % poly.size()]);
    return s / 2;
}

// Letters whose edges arise from iterating the given letters.
std::string reachableLetters(const CurveSet& cs, const std::string& letters) {
    SubstMatrix m = substMatrix(cs);
    std::string out;
    for (char c : letters)
        for (int i : reachable(m, cs.grid.index(c)))
            if (out.find(cs.grid.letters[static_cast<size_t>(i)]) == std::string::npos)
                out.push_back(cs.grid.letters[static_cast<size_t>(i)]);
    std::sort(out.begin(), out.end());
    return out;
}

// On double grids each direction of an edge is its own edge and only the
// classes generated by the tile are expected; elsewhere every edge counts.
bool mustCover(char letter, const GridSpec& g, const std::string& reach) {
    return !g.doubleEdges || reach.find(letter) != std::string::npos;
}

constexpr long long kMaxCoverageEdges = 300000;
constexpr long long kMaxAspectEdges = 200000;

} // namespace

SelfAvoidance checkSelfAvoiding(const Word& word, const GridSpec& grid, bool closed) {
    const int n = grid.n;
    SelfAvoidance res;
    if (word.empty()) return res;
    TraceResult tr = trace(word, Point::zero(n), 0);
    const auto& es = tr.edges;
    EdgeSet directed, undirected;
    for (size_t i = 0; i < es.size(); ++i) {
        DirectedEdge e = es[i].edge();
        if (!directed.insert(e).second) return {false, "edge traversed twice in the same direction", i};
        if (!grid.doubleEdges && !undirected.insert(undirectedKey(e, n)).second)
            return {false, "edge traversed twice", i};
    }
    // Visits of a vertex are chords between 4n slots (quarter units of the
    // turn): incoming edges at even slots, outgoing ones a quarter step
    // further counterclockwise.
    std::unordered_map<Point, std::vector<std::pair<int, int>>, PointHash> visits;
    std::unordered_map<Point, std::vector<size_t>, PointHash> visitIndex;
    size_t m = es.size();
    size_t last = closed ? m : m - 1;
    for (size_t i = 0; i < last; ++i) {
        const auto& a = es[i];
        const auto& b = es[(i + 1) % m];
        Point v = a.tail + Point::unit(a.dir, n);
        int in = 2 * normDir(2 * a.dir + n, 2 * n);
        int out = 4 * normDir(b.dir, n) + 1;
        if (in > out) std::swap(in, out);
        visits[v].emplace_back(in, out);
        visitIndex[v].push_back(i);
    }
    bool crossing = false;
    size_t worst = m;
    for (const auto& [v, chords] : visits) {
        if (chords.size() < 2) continue;
        const auto& idx = visitIndex.at(v);
        for (size_t i = 0; i < chords.size(); ++i)
            for (size_t j = i + 1; j < chords.size(); ++j) {
                auto [a1, b1] = chords[i];
                auto [a2, b2] = chords[j];
                bool x = a1 < a2 && a2 < b1;
                bool y = a1 < b2 && b2 < b1;
                if (x != y) {
                    crossing = true;
                    worst = std::min(worst, std::max(idx[i], idx[j]) + 1);
                }
            }
    }
    if (crossing) return {false, "curve crosses itself at a vertex", worst % m};
    return res;
}

bool checkDekking1CS(const CurveSet& cs, std::string* failing) {
    auto tiles = prototiles(cs.grid);
    std::vector<char> ok(tiles.size(), 1);
    parallelFor(tiles.size(), [&](size_t i) {
        Word w = expand(cs, tiles[i].word(), 1);
        ok[i] = checkSelfAvoiding(w, cs.grid, true).ok;
    });
    for (size_t i = 0; i < tiles.size(); ++i)
        if (!ok[i]) {
            if (failing) *failing = tileName(tiles[i], cs.grid);
            return false;
        }
    return true;
}

bool checkDekking1CSTransitions(const CurveSet& cs, std::string* failing) {
    const auto& ts = cs.grid.transitions;
    std::vector<char> ok(ts.size(), 1);
    parallelFor(ts.size(), [&](size_t i) {
        Word w = Word::letter(ts[i].from);
        w.appendTurn(ts[i].turn);
        w.appendLetter(ts[i].to);
        ok[i] = checkSelfAvoiding(expand(cs, w, 1), cs.grid, false).ok;
    });
    for (size_t i = 0; i < ts.size(); ++i)
        if (!ok[i]) {
            if (failing) *failing = cs.grid.transitionString(ts[i]);
            return false;
        }
    return true;
}

bool checkInteriorFilled(const CurveSet& cs, const Prototile& tile, int k, long long* missing) {
    const GridSpec& g = cs.grid;
    Word w = expand(cs, tile.word(), k);
    TraceResult tr = traceFromOrigin(w, g.n);
    if (!(tr.end == Point::zero(g.n))) throw Error("iterate of " + tile.str(g) + " does not close");
    std::string reach = reachableLetters(cs, tile.letters);
    std::vector<std::complex<double>> poly;
    EdgeSet covered;
    double ext = 0;
    for (const auto& e : tr.edges) {
        poly.push_back(e.tail.toComplex());
        ext = std::max(ext, std::abs(poly.back()));
        covered.insert(coverKey(e.edge(), g));
    }
    Patch patch = realizeDisc(g, tr.edges.front(), 0, ext + 2);
    EdgeSet counted;
    long long miss = 0;
    for (const auto& [e, letter] : patch.edges) {
        DirectedEdge key = coverKey(e, g);
        if (!mustCover(letter, g, reach) || covered.count(key) || !counted.insert(key).second) continue;
        if (windingNumber(poly, leftPoint(key)) != 0) ++miss;
    }
    if (missing) *missing = miss;
    return miss == 0;
}

double aspectRatio(const std::vector<std::complex<double>>& pts) {
    if (pts.size() < 2) return 1.0;
    double mx = 0, my = 0;
    for (auto p : pts) mx += p.real(), my += p.imag();
    mx /= pts.size();
    my /= pts.size();
    double a = 0, b = 0, c = 0;
    for (auto p : pts) {
        double x = p.real() - mx, y = p.imag() - my;
        a += x * x;
        b += y * y;
        c += x * y;
    }
    a /= pts.size();
    b /= pts.size();
    c /= pts.size();
    double tr = a + b, det = a * b - c * c;
    double disc = std::sqrt(std::max(tr * tr / 4 - det, 0.0));
    double l1 = tr / 2 + disc, l2 = std::max(tr / 2 - disc, 1e-12);
    return std::sqrt(l1 / l2);
}

bool aspectRises(const std::vector<double>& s) {
    for (size_t i = 0; i + 2 < s.size(); ++i)
        if (s[i + 1] > 1.1 * s[i] && s[i + 2] > 1.1 * s[i + 1]) return true;
    return false;
}

CoverageDiagnostic checkCoverage(const CurveSet& cs, int k, double r) {
    const GridSpec& g = cs.grid;
    CoverageDiagnostic d;
    d.requestedK = k;
    d.r = r;
    long long R = order(cs);

    std::vector<Prototile> tiles;
    for (const auto& t : prototiles(g))
        if (tileIsActive(cs, t)) tiles.push_back(t);

    int kMin = 1;
    if (R > 1)
        while (static_cast<double>(ipow(R, kMin)) < 16 * r * r) ++kMin;
    int kk = std::max(k, kMin);
    auto longest = [&](int j) {
        long long m = 0;
        for (const auto& t : tiles) m = std::max(m, expandedLength(cs, t.word(), j));
        return m;
    };
    while (kk > kMin && longest(kk) > kMaxCoverageEdges) --kk;
    d.k = kk;

    d.tiles.resize(tiles.size());
    parallelFor(tiles.size(), [&](size_t ti) {
        TileCoverage& tc = d.tiles[ti];
        tc.tile = tiles[ti].str(g);
        TraceResult tr = traceFromOrigin(expand(cs, tiles[ti].word(), kk), g.n);
        tc.edges = tr.edges.size();
        std::vector<std::complex<double>> poly;
        for (const auto& e : tr.edges) poly.push_back(e.tail.toComplex());
        if (std::abs(signedArea(poly)) < 1e-9) {
            tc.zeroArea = true;
            return;
        }
        std::string reach = reachableLetters(cs, tiles[ti].letters);
        EdgeSet covered;
        std::unordered_map<Point, size_t, PointHash> firstOut;
        for (size_t i = 0; i < tr.edges.size(); ++i) {
            covered.insert(coverKey(tr.edges[i].edge(), g));
            firstOut.emplace(tr.edges[i].tail, i);
        }
        // Untraversed edges whose tail lies within r + 1 of the iterate,
        // bucketed by midpoint.
        auto cellAt = [](std::complex<double> z, double s) {
            return std::make_pair(static_cast<long long>(std::floor(z.real() / s)),
                                  static_cast<long long>(std::floor(z.imag() / s)));
        };
        const double tube = r + 1;
        std::map<std::pair<long long, long long>, std::vector<std::complex<double>>> near;
        for (const auto& [p, i] : firstOut) near[cellAt(p.toComplex(), tube)].push_back(p.toComplex());
        Patch patch = realizeRegion(g, tr.edges.front(), [&](std::complex<double> z) {
            auto [cx, cy] = cellAt(z, tube);
            for (long long dx = -1; dx <= 1; ++dx)
                for (long long dy = -1; dy <= 1; ++dy) {
                    auto it = near.find({cx + dx, cy + dy});
                    if (it == near.end()) continue;
                    for (auto v : it->second)
                        if (std::norm(v - z) <= tube * tube) return true;
                }
            return false;
        });
        std::map<std::pair<long long, long long>, std::vector<std::complex<double>>> cells;
        auto cellOf = [&](std::complex<double> z) { return cellAt(z, r); };
        EdgeSet uncovered;
        for (const auto& [e, letter] : patch.edges) {
            DirectedEdge key = coverKey(e, g);
            if (mustCover(letter, g, reach) && !covered.count(key) && uncovered.insert(key).second) {
                auto mid = (e.tail.toComplex() + e.head().toComplex()) * 0.5;
                cells[cellOf(mid)].push_back(mid);
            }
        }
        const double r2 = (r + 1e-9) * (r + 1e-9);
        long long best = -1;
        for (const auto& [p, i] : firstOut) {
            auto c = p.toComplex();
            auto [cx, cy] = cellOf(c);
            long long miss = 0;
            for (long long dx = -1; dx <= 1 && (best < 0 || miss <= best); ++dx)
                for (long long dy = -1; dy <= 1; ++dy) {
                    auto it = cells.find({cx + dx, cy + dy});
                    if (it == cells.end()) continue;
                    for (auto m : it->second)
                        if (std::norm(m - c) <= r2) ++miss;
                }
            if (best < 0 || miss < best || (miss == best && p < tc.center)) {
                best = miss;
                tc.center = p;
            }
        }
        tc.missing = std::max<long long>(best, 0);
    });
    d.missing = 0;
    bool any = false;
    for (const auto& t : d.tiles) {
        if (t.zeroArea) continue;
        any = true;
        d.missing = std::max(d.missing, t.missing);
    }
    d.pass = any && d.missing == 0;

    for (char x : g.letters) {
        if (cs.isConstant(x)) continue;
        std::vector<double> series;
        Word ax = Word::letter(x);
        for (int j = 1; j <= std::max(kk + 2, 6) && expandedLength(cs, ax, j) <= kMaxAspectEdges; ++j) {
            TraceResult tr = traceFromOrigin(expand(cs, ax, j), g.n);
            std::vector<std::complex<double>> pts;
            for (const auto& e : tr.edges) pts.push_back(e.tail.toComplex());
            pts.push_back(tr.end.toComplex());
            series.push_back(aspectRatio(pts));
        }
        if (aspectRises(series)) d.aspectRising = true;
        if (!series.empty()) d.boundingBoxAspect = std::max(d.boundingBoxAspect, series.back());
        d.aspectSeries[x] = std::move(series);
    }
    return d;
}

ScaleAnalysis analyzeScale(const CurveSet& cs) {
    const GridSpec& g = cs.grid;
    const int n = g.n;
    ScaleAnalysis a;
    std::map<char, int> tau;
    for (char x : g.letters) {
        const Word& p = cs.production(x);
        TraceResult tr = trace(p, Point::zero(n), 0);
        a.displacement[x] = tr.end;
        tau[x] = normDir(p.turnSum(), n);
        a.netTurn[x] = normTurn(tau[x], n);
    }

    Patch patch = realize(g, 10);
    DirectedEdge seed{Point::zero(n), 0};
    std::unordered_map<DirectedEdge, int, EdgeHash> phi;
    std::unordered_map<Point, Point, PointHash> S;
    phi[seed] = 0;
    S[seed.tail] = Point::zero(n);
    std::deque<DirectedEdge> queue{seed};
    a.mapConsistent = true;
    auto setPhi = [&](const DirectedEdge& e, int v) {
        auto [it, inserted] = phi.emplace(e, normDir(v, n));
        if (inserted) {
            queue.push_back(e);
        } else if (it->second != normDir(v, n)) {
            a.mapConsistent = false;
        }
    };
    auto setS = [&](const Point& p, const Point& v) {
        auto [it, inserted] = S.emplace(p, v);
        if (!inserted && it->second != v) a.mapConsistent = false;
    };
    while (!queue.empty()) {
        DirectedEdge e = queue.front();
        queue.pop_front();
        char x = patch.edges.at(e);
        int f = phi.at(e);
        Point h = e.head();
        setS(h, S.at(e.tail) + a.displacement[x].rotated(e.dir + f));
        for (const auto& [t, y] : g.successors(x)) {
            DirectedEdge nx{h, normDir(e.dir + t, n)};
            auto it = patch.edges.find(nx);
            if (it == patch.edges.end()) continue;
            setPhi(nx, f + tau[x]);
        }
        for (const auto& tr : g.transitions) {
            if (tr.to != x) continue;
            int d = normDir(e.dir - tr.turn, n);
            DirectedEdge pv{e.tail - Point::unit(d, n), d};
            auto it = patch.edges.find(pv);
            if (it == patch.edges.end()) continue;
            int pf = normDir(f - tau[tr.from], n);
            setPhi(pv, pf);
            setS(pv.tail, S.at(e.tail) - a.displacement[tr.from].rotated(d + pf));
        }
    }
    if (!a.mapConsistent) {
        a.problem = "the curves do not fit together on the grid";
        return a;
    }

    // Translations of the coloring: edges with the seed's letter and direction.
    char seedLetter = patch.edges.at(seed);
    std::vector<std::pair<double, Point>> lattice;
    for (const auto& [e, x] : patch.edges)
        if (x == seedLetter && e.dir == 0 && !e.tail.isZero() && S.count(e.tail))
            lattice.emplace_back(std::norm(e.tail.toComplex()), e.tail);
    std::sort(lattice.begin(), lattice.end());
    if (lattice.empty()) {
        a.problem = "patch too small to find translations";
        return a;
    }
    a.t1 = lattice.front().second;
    auto c1 = a.t1.toComplex();
    bool found = false;
    for (const auto& [nm, p] : lattice)
        if (std::abs(cross(c1, p.toComplex())) > 1e-9) {
            a.t2 = p;
            found = true;
            break;
        }
    if (!found) {
        a.problem = "patch too small to find two translations";
        return a;
    }
    a.image1 = S.at(a.t1);
    a.image2 = S.at(a.t2);
    auto c2 = a.t2.toComplex();
    double base = cross(c1, c2);
    a.linear = true;
    for (const auto& [nm, p] : lattice) {
        auto z = p.toComplex();
        long long u = std::llround(cross(z, c2) / base);
        long long v = std::llround(cross(c1, z) / base);
        if (a.t1 * u + a.t2 * v != p) {
            a.linear = false;
            a.problem = "translations do not form a lattice on the patch";
            break;
        }
        if (S.at(p) != a.image1 * u + a.image2 * v) {
            a.linear = false;
            a.problem = "the map of translations is not linear";
            break;
        }
    }
    double det = cross(a.image1.toComplex(), a.image2.toComplex()) / base;
    a.det = std::llround(std::abs(det));
    long long R = 0;
    try {
        R = order(cs);
    } catch (const UnequalRowSums&) {
    }
    a.detMatchesOrder = std::abs(std::abs(det) - static_cast<double>(a.det)) < 1e-6 && a.det == R;
    if (a.linear && !a.detMatchesOrder)
        a.problem = "area scale " + std::to_string(a.det) + " differs from the order " + std::to_string(R);
    a.similarity = a.image1 * a.t2 == a.image2 * a.t1;
    if (a.similarity) a.lambda = divide(a.image1, a.t1);
    return a;
}

const char* verdictName(Verdict v) {
    switch (v) {
    case Verdict::Valid: return "Valid";
    case Verdict::ValidWithCaveats: return "ValidWithCaveats";
    case Verdict::Invalid: return "Invalid";
    }
    return "?";
}

ValidationReport validate(const CurveSet& cs, const ValidateOptions& opts) {
    ValidationReport rep;
    rep.name = cs.name;
    const GridSpec& g = cs.grid;
    rep.constants = cs.constants();
    SubstMatrix m = substMatrix(cs);
    rep.irreducible = isIrreducible(m);
    for (const auto& row : m) rep.rowSums.push_back(std::accumulate(row.begin(), row.end(), 0LL));
    try {
        rep.order = order(m);
    } catch (const UnequalRowSums& e) {
        rep.reasons.push_back(std::string(e.what()) + ": no common order");
    }

    if (g.generic) {
        rep.reasons.push_back("grid " + g.name + " is not a coloring; grid checks do not apply");
        rep.verdict = Verdict::Invalid;
        return rep;
    }
    rep.gridProblems = checkGrid(g);
    for (char x : g.letters) {
        std::string why;
        if (!wordFollowsGrid(cs.production(x), g, &why))
            rep.gridProblems.push_back(std::string("production of ") + x + ": " + why);
    }
    rep.gridConsistent = rep.gridProblems.empty();
    if (!*rep.gridConsistent) rep.reasons.push_back("productions do not follow the grid");
    if (!rep.order || !*rep.gridConsistent) {
        rep.verdict = Verdict::Invalid;
        return rep;
    }

    rep.selfAvoiding = checkDekking1CS(cs, &rep.selfAvoidingFailure);
    if (!rep.selfAvoiding) rep.reasons.push_back("first iterate of " + rep.selfAvoidingFailure + " is not self-avoiding");

    rep.scale = analyzeScale(cs);
    rep.scaleConsistent = rep.scale.consistent();
    if (!rep.scaleConsistent) rep.reasons.push_back("scale inconsistent: " + rep.scale.problem);

    for (const auto& t : prototiles(g)) {
        if (!tileIsActive(cs, t)) continue;
        bool filled = false;
        try {
            filled = checkInteriorFilled(cs, t, 1);
        } catch (const Error&) {
        }
        rep.interiorFilled.emplace_back(t.str(g), filled);
    }

    rep.coverage = checkCoverage(cs, opts.k, opts.r);
    if (!rep.coverage.pass)
        rep.reasons.push_back("iterates leave " + std::to_string(rep.coverage.missing) +
                              " edges untraversed in every disc of radius " + std::to_string(rep.coverage.r).substr(0, 4));

    if (!rep.irreducible) rep.caveats.push_back("reducible substitution matrix");
    if (rep.coverage.aspectRising) rep.caveats.push_back("aspect ratio keeps rising with the iterate");
    if (rep.scaleConsistent && !rep.scale.similarity) rep.caveats.push_back("the substitution is affine, not a similarity");
    for (const auto& [x, t] : rep.scale.netTurn)
        if (t != 0 && !cs.isConstant(x)) {
            rep.caveats.push_back("production of " + std::string(1, x) + " has net turn " + std::to_string(t));
            break;
        }

    bool hard = rep.selfAvoiding && rep.scaleConsistent && rep.coverage.pass;
    rep.verdict = !hard ? Verdict::Invalid : rep.caveats.empty() ? Verdict::Valid : Verdict::ValidWithCaveats;
    return rep;
}

namespace {

std::string yesNo(bool b) { return b ? "yes" : "no"; }

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

std::string ratioStr(const ExactRatio& r) {
    return r.den == 1 ? r.num.str() : "(" + r.num.str() + ")/" + std::to_string(r.den);
}

} // namespace

std::string reportText(const ValidationReport& r) {
    std::ostringstream os;
    os << "curveset: " << r.name << "\n";
    os << "verdict: " << verdictName(r.verdict) << "\n";
    if (r.order) os << "order: " << *r.order << "\n";
    os << "row sums:";
    for (auto s : r.rowSums) os << " " << s;
    os << "\n";
    os << "grid consistent: " << (r.gridConsistent ? yesNo(*r.gridConsistent) : "n/a") << "\n";
    for (const auto& p : r.gridProblems) os << "grid problem: " << p << "\n";
    if (r.gridConsistent && *r.gridConsistent && r.order) {
        os << "self-avoiding: " << yesNo(r.selfAvoiding) << "\n";
        os << "scale consistent: " << yesNo(r.scaleConsistent) << "\n";
        os << "lattice map det: " << r.scale.det << "\n";
        os << "similarity: " << yesNo(r.scale.similarity) << "\n";
        if (r.scale.lambda) os << "lambda: " << ratioStr(*r.scale.lambda) << "\n";
        for (const auto& [t, ok] : r.interiorFilled) os << "interior filled " << t << ": " << yesNo(ok) << "\n";
        os << "irreducible: " << yesNo(r.irreducible) << "\n";
        os << "constants: " << (r.constants.empty() ? "none" : r.constants) << "\n";
        os << "coverage k: " << r.coverage.k << "\n";
        os << "coverage r: " << fmt(r.coverage.r) << "\n";
        os << "coverage missing: " << r.coverage.missing << "\n";
        for (const auto& t : r.coverage.tiles)
            os << "coverage " << t.tile << ": " << t.missing << " missing, " << t.edges << " edges\n";
        os << "aspect ratio: " << fmt(r.coverage.boundingBoxAspect) << "\n";
        os << "aspect rising: " << yesNo(r.coverage.aspectRising) << "\n";
    }
    for (const auto& s : r.reasons) os << "reason: " << s << "\n";
    for (const auto& s : r.caveats) os << "caveat: " << s << "\n";
    if (r.verdict != Verdict::Invalid) os << "note: all implemented checks pass; plane-filling is not proven\n";
    return os.str();
}

std::string reportJson(const ValidationReport& r) {
    nlohmann::ordered_json j;
    j["curveset"] = r.name;
    j["verdict"] = verdictName(r.verdict);
    j["order"] = r.order ? nlohmann::ordered_json(*r.order) : nlohmann::ordered_json(nullptr);
    j["rowSums"] = r.rowSums;
    j["gridConsistent"] = r.gridConsistent ? nlohmann::ordered_json(*r.gridConsistent) : nlohmann::ordered_json("n/a");
    j["gridProblems"] = r.gridProblems;
    j["selfAvoiding"] = r.selfAvoiding;
    j["scaleConsistent"] = r.scaleConsistent;
    j["scale"] = {{"det", r.scale.det},
                  {"similarity", r.scale.similarity},
                  {"lambda", r.scale.lambda ? ratioStr(*r.scale.lambda) : ""}};
    nlohmann::ordered_json filled = nlohmann::ordered_json::object();
    for (const auto& [t, ok] : r.interiorFilled) filled[t] = ok;
    j["interiorFilled"] = filled;
    j["irreducible"] = r.irreducible;
    j["constants"] = r.constants;
    nlohmann::ordered_json tiles = nlohmann::ordered_json::array();
    for (const auto& t : r.coverage.tiles) tiles.push_back({{"tile", t.tile}, {"missing", t.missing}, {"edges", t.edges}});
    j["coverage"] = {{"k", r.coverage.k},
                     {"r", r.coverage.r},
                     {"missing", r.coverage.missing},
                     {"pass", r.coverage.pass},
                     {"tiles", tiles},
                     {"boundingBoxAspect", r.coverage.boundingBoxAspect},
                     {"aspectRising", r.coverage.aspectRising}};
    j["reasons"] = r.reasons;
    j["caveats"] = r.caveats;
    return j.dump(2) + "\n";
}

} // namespace gridcurve
