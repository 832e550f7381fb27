#include "gridcurve/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <unordered_set>

#include "gridcurve/error.hpp"
#include "gridcurve/parallel.hpp"
#include "gridcurve/validator.hpp"

namespace gridcurve {

namespace {

GridSpec squareBase() {
    GridSpec g;
    g.name = "square";
    g.n = 4;
    g.letters = "F";
    g.transitions = {{'F', 1, 'F'}, {'F', -1, 'F'}};
    return g;
}

long long mod(long long a, long long m) {
    a %= m;
    return a < 0 ? a + m : a;
}

// Out-edges alternate between directions {0, 2} on vertices with x + y even
// and {1, 3} on the others.
bool squareEdgeExists(long long x, long long y, int dir) { return (mod(x + y, 2) == 0) == (dir % 2 == 0); }

} // namespace

int TorusPatch::index(const DirectedEdge& e) const {
    long long x = e.tail.coeff(0), y = e.tail.coeff(1);
    long long a = mod(x + y, 2 * R), b = mod(x - y, 2 * C);
    // vertices are the pairs (a, b) with a = b mod 2; two out-edges each
    long long v = a * C + b / 2;
    int slot = e.dir / 2;
    return static_cast<int>(v * 2 + slot);
}

int TorusPatch::translate(int e, int a, int b) const {
    const DirectedEdge& d = edges[static_cast<size_t>(e)];
    Point shift(4, {a + b, a - b});
    return index({d.tail + shift, d.dir});
}

int TorusPatch::rotate(int e) const {
    const DirectedEdge& d = edges[static_cast<size_t>(e)];
    long long x = d.tail.coeff(0), y = d.tail.coeff(1);
    // z -> i z + 1 fixes the center (1+i)/2 of the square at the origin
    return index({Point(4, {1 - y, x}), normDir(d.dir + 1, 4)});
}

int TorusPatch::reflect(int e) const {
    const DirectedEdge& d = edges[static_cast<size_t>(e)];
    long long x = d.tail.coeff(0), y = d.tail.coeff(1);
    // direction k maps to 1 - k under the swap of coordinates
    return index({Point(4, {y + 1, x}), normDir(1 - d.dir, 4)});
}

TorusPatch squareTorus(int R, int C) {
    if (R < 1 || C < 1) throw Error("torus periods must be positive");
    TorusPatch t;
    t.R = R;
    t.C = C;
    const size_t N = static_cast<size_t>(4 * R * C);
    t.edges.resize(N);
    for (long long a = 0; a < 2 * R; ++a)
        for (long long b = a % 2; b < 2 * C; b += 2) {
            long long x = (a + b) / 2, y = (a - b) / 2;
            for (int dir = 0; dir < 4; ++dir) {
                if (!squareEdgeExists(x, y, dir)) continue;
                DirectedEdge e{Point(4, {x, y}), dir};
                t.edges[static_cast<size_t>(t.index(e))] = e;
            }
        }
    for (const auto& tr : squareBase().transitions) t.turns.push_back(tr.turn);
    t.succ.assign(t.turns.size(), std::vector<int>(N));
    t.pred.assign(t.turns.size(), std::vector<int>(N));
    for (size_t i = 0; i < t.turns.size(); ++i)
        for (size_t e = 0; e < N; ++e) {
            const DirectedEdge& d = t.edges[e];
            int s = t.index({d.head(), normDir(d.dir + t.turns[i], 4)});
            t.succ[i][e] = s;
            t.pred[i][static_cast<size_t>(s)] = static_cast<int>(e);
        }
    return t;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
        return true;
    }
};

using Labels = std::vector<int>;

Labels relabel(const std::vector<int>& raw) {
    Labels out(raw.size());
    std::map<int, int> names;
    for (size_t i = 0; i < raw.size(); ++i) {
        auto [it, inserted] = names.emplace(raw[i], static_cast<int>(names.size()));
        out[i] = it->second;
    }
    return out;
}

// Smallest partition containing `base` and the pairs, closed under the
// transition maps in both directions (the unique transition property).
Labels closure(const TorusPatch& t, const Labels& base, const std::vector<std::pair<int, int>>& pairs) {
    UnionFind uf(base.size());
    std::deque<std::pair<int, int>> queue(pairs.begin(), pairs.end());
    std::map<int, int> firstOf;
    for (size_t i = 0; i < base.size(); ++i) {
        auto [it, inserted] = firstOf.emplace(base[i], static_cast<int>(i));
        if (!inserted) queue.emplace_back(it->second, static_cast<int>(i));
    }
    while (!queue.empty()) {
        auto [a, b] = queue.front();
        queue.pop_front();
        if (!uf.unite(a, b)) continue;
        for (size_t i = 0; i < t.turns.size(); ++i) {
            queue.emplace_back(t.succ[i][static_cast<size_t>(a)], t.succ[i][static_cast<size_t>(b)]);
            queue.emplace_back(t.pred[i][static_cast<size_t>(a)], t.pred[i][static_cast<size_t>(b)]);
        }
    }
    std::vector<int> raw(base.size());
    for (size_t i = 0; i < base.size(); ++i) raw[i] = uf.find(static_cast<int>(i));
    return relabel(raw);
}

int countColors(const Labels& l) { return l.empty() ? 0 : *std::max_element(l.begin(), l.end()) + 1; }

Labels transformed(const Labels& l, const std::vector<int>& perm) {
    std::vector<int> raw(l.size());
    for (size_t e = 0; e < l.size(); ++e) raw[e] = l[static_cast<size_t>(perm[e])];
    return relabel(raw);
}

} // namespace

GridSpec Coloring::grid(const TorusPatch& torus, const std::string& name) const {
    static const std::string alphabet = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";
    if (numColors > static_cast<int>(alphabet.size())) throw Error("too many colors to name");
    GridSpec g;
    g.name = name;
    g.n = 4;
    g.letters = alphabet.substr(0, static_cast<size_t>(numColors));
    std::set<std::tuple<int, int, int>> seen;
    for (size_t e = 0; e < assignment.size(); ++e)
        for (size_t i = 0; i < torus.turns.size(); ++i) {
            int to = assignment[static_cast<size_t>(torus.succ[i][e])];
            if (seen.emplace(assignment[e], torus.turns[i], to).second)
                g.transitions.push_back({alphabet[static_cast<size_t>(assignment[e])], torus.turns[i],
                                         alphabet[static_cast<size_t>(to)]});
        }
    return g;
}

std::vector<Coloring> searchColorings(int R, int C, int m, const ColoringSearchOptions& opts) {
    TorusPatch t = squareTorus(R, C);
    const size_t N = t.edges.size();
    std::vector<Coloring> out;
    if (m < 1 || static_cast<size_t>(m) > N) return out;

    // The transition maps act transitively, so a coloring is fixed by the
    // class of edge 0 and every coloring is reached from the finest one by
    // merging edge 0 with further edges.
    Labels finest(N);
    std::iota(finest.begin(), finest.end(), 0);
    std::set<Labels> seen{finest};
    std::deque<Labels> queue{finest};
    std::vector<Labels> found;
    while (!queue.empty()) {
        Labels cur = queue.front();
        queue.pop_front();
        if (countColors(cur) == m) found.push_back(cur);
        if (countColors(cur) <= m) continue;
        for (size_t e = 1; e < N; ++e) {
            if (cur[e] == cur[0]) continue;
            Labels next = closure(t, cur, {{0, static_cast<int>(e)}});
            if (countColors(next) >= m && seen.insert(next).second) queue.push_back(next);
        }
    }

    std::vector<std::vector<int>> symmetries;
    std::vector<int> rot(N);
    for (size_t e = 0; e < N; ++e) rot[e] = t.rotate(static_cast<int>(e));
    std::vector<int> refl(N);
    for (size_t e = 0; e < N; ++e) refl[e] = t.reflect(static_cast<int>(e));
    int turnsAllowed = (opts.rotations && R == C) ? 4 : 1;
    int mirrors = opts.reflections ? 2 : 1;
    for (int a = 0; a < R; ++a)
        for (int b = 0; b < C; ++b) {
            std::vector<int> perm(N);
            for (size_t e = 0; e < N; ++e) perm[e] = t.translate(static_cast<int>(e), a, b);
            for (int q = 0; q < turnsAllowed; ++q) {
                std::vector<int> m = perm;
                for (int f = 0; f < mirrors; ++f) {
                    symmetries.push_back(m);
                    for (size_t e = 0; e < N; ++e) m[e] = refl[static_cast<size_t>(m[e])];
                }
                for (size_t e = 0; e < N; ++e) perm[e] = rot[static_cast<size_t>(perm[e])];
            }
        }

    std::set<Labels> canonical;
    for (const auto& l : found) {
        Labels best = l;
        for (const auto& s : symmetries) best = std::min(best, transformed(l, s));
        canonical.insert(best);
    }
    for (const auto& l : canonical) {
        Coloring c;
        c.assignment = l;
        c.numColors = countColors(l);
        auto preserved = [&](int a, int b) {
            for (size_t e = 0; e < N; ++e)
                if (l[static_cast<size_t>(t.translate(static_cast<int>(e), a, b))] != l[e]) return false;
            return true;
        };
        int r = 1, cc = 1;
        while (R % r != 0 || !preserved(r, 0)) ++r;
        while (C % cc != 0 || !preserved(0, cc)) ++cc;
        c.minimalVector = {r, cc};
        out.push_back(std::move(c));
    }
    return out;
}

std::map<char, long long> torusLetterCounts(const GridSpec& grid) {
    const int n = grid.n;
    Patch patch = realize(grid, 14);
    char seedLetter = patch.edges.at({Point::zero(n), 0});
    auto near = [](const Point& p, double r) { return std::abs(p.toComplex()) <= r; };
    // A translation must carry every edge of the inner patch to an edge of the same letter.
    auto isTranslation = [&](const Point& v) {
        for (const auto& [e, x] : patch.edges) {
            if (!near(e.tail, 4.0)) continue;
            auto it = patch.edges.find({e.tail + v, e.dir});
            if (it == patch.edges.end() || it->second != x) return false;
        }
        return true;
    };
    std::vector<std::pair<double, Point>> candidates;
    for (const auto& [e, x] : patch.edges)
        if (x == seedLetter && e.dir == 0 && !e.tail.isZero() && near(e.tail, 6.0))
            candidates.emplace_back(std::norm(e.tail.toComplex()), e.tail);
    std::sort(candidates.begin(), candidates.end());
    std::optional<Point> t1, t2;
    for (const auto& [nm, p] : candidates) {
        if (!isTranslation(p)) continue;
        if (!t1) {
            t1 = p;
        } else if (std::abs(std::imag(std::conj(t1->toComplex()) * p.toComplex())) > 1e-9) {
            t2 = p;
            break;
        }
    }
    if (!t1 || !t2) throw Error("no translation lattice found for grid " + grid.name);
    auto c1 = t1->toComplex(), c2 = t2->toComplex();
    double base = std::imag(std::conj(c1) * c2);
    std::map<char, long long> counts;
    for (char x : grid.letters) counts[x] = 0;
    std::set<std::pair<Point, int>> cells;
    for (const auto& [e, x] : patch.edges) {
        auto z = e.tail.toComplex();
        double u = std::imag(std::conj(z) * c2) / base;
        double v = std::imag(std::conj(c1) * z) / base;
        long long fu = static_cast<long long>(std::floor(u + 1e-7));
        long long fv = static_cast<long long>(std::floor(v + 1e-7));
        Point reduced = e.tail - *t1 * fu - *t2 * fv;
        if (cells.emplace(reduced, e.dir).second) ++counts[x];
    }
    return counts;
}

namespace {

Word mirror(const Word& w, int n) {
    Word m = w;
    for (int& t : m.turns) t = normTurn(-t, n);
    return m;
}

bool signSymmetric(const GridSpec& g) {
    for (const auto& t : g.transitions) {
        bool found = false;
        for (const auto& u : g.transitions)
            if (u.from == t.from && u.to == t.to && normTurn(u.turn, g.n) == normTurn(-t.turn, g.n)) found = true;
        if (!found) return false;
    }
    return true;
}

// Elements of Z[zeta_n] of norm R, for the quadratic fields.
std::vector<Point> normTargets(int n, long long R) {
    std::vector<Point> out;
    if (eulerPhi(n) != 2) return out;
    long long b = static_cast<long long>(std::ceil(2 * std::sqrt(static_cast<double>(R)))) + 1;
    for (long long x = -b; x <= b; ++x)
        for (long long y = -b; y <= b; ++y) {
            Point p(n, {x, y});
            auto nr = p.norm().rational();
            if (nr && *nr == R) out.push_back(p);
        }
    return out;
}

struct SingleLetterSearch {
    const GridSpec& grid;
    long long R;
    const CurveSearchOptions& opts;
    std::vector<Point> targets;
    std::vector<int> turns;
    std::atomic<long long>& nodes;
    std::atomic<bool>& exceeded;

    std::vector<Word> results;

    void run(Word w, Point pos, int dir, std::unordered_set<DirectedEdge, EdgeHash>& used) {
        if (exceeded) return;
        if (opts.budget > 0 && ++nodes > opts.budget) {
            exceeded = true;
            return;
        }
        long long placed = static_cast<long long>(w.size());
        if (placed == R) {
            if (normDir(w.turnSum(), grid.n) != 0) return;
            if (!targets.empty() && std::find(targets.begin(), targets.end(), pos) == targets.end()) return;
            results.push_back(w);
            return;
        }
        if (!targets.empty()) {
            double rem = static_cast<double>(R - placed);
            bool reachable = std::any_of(targets.begin(), targets.end(), [&](const Point& t) {
                return std::abs(t.toComplex() - pos.toComplex()) <= rem + 1e-9;
            });
            if (!reachable) return;
        }
        for (int t : turns) {
            int d = normDir(dir + t, grid.n);
            DirectedEdge e{pos, d};
            if (used.count(e)) continue;
            DirectedEdge rev{e.head(), normDir(d + grid.n / 2, grid.n)};
            bool hasReverse = grid.n % 2 == 0;
            if (!grid.doubleEdges && hasReverse && used.count(rev)) continue;
            Word next = w;
            next.appendTurn(t);
            next.appendLetter(grid.letters[0]);
            used.insert(e);
            run(next, e.head(), d, used);
            used.erase(e);
        }
    }
};

CurveSearchResult enumerateSingleLetter(const GridSpec& grid, long long R, const CurveSearchOptions& opts) {
    CurveSearchResult res;
    const char x = grid.letters[0];
    std::vector<int> turns;
    for (const auto& [t, y] : grid.successors(x)) turns.push_back(t);
    std::atomic<long long> nodes{0};
    std::atomic<bool> exceeded{false};
    auto targets = normTargets(grid.n, R);

    // top-level branches: the turn after the first edge
    std::vector<std::vector<Word>> branch(turns.size());
    parallelFor(turns.size(), [&](size_t i) {
        SingleLetterSearch s{grid, R, opts, targets, turns, nodes, exceeded, {}};
        Word w = Word::letter(x);
        std::unordered_set<DirectedEdge, EdgeHash> used{{Point::zero(grid.n), 0}};
        if (R == 1) {
            if (i == 0) s.results.push_back(w);
        } else {
            Point pos = Point::unit(0, grid.n);
            int d = normDir(turns[i], grid.n);
            DirectedEdge e{pos, d};
            bool blocked = !grid.doubleEdges && grid.n % 2 == 0 && 2 * normTurn(turns[i], grid.n) == grid.n;
            if (!blocked) {
                used.insert(e);
                w.appendTurn(turns[i]);
                w.appendLetter(x);
                s.run(w, e.head(), d, used);
            }
        }
        branch[i] = std::move(s.results);
    });
    res.nodes = nodes;
    res.budgetExceeded = exceeded;

    bool symmetric = signSymmetric(grid);
    std::vector<std::pair<std::string, Word>> candidates;
    for (const auto& b : branch)
        for (const auto& w : b) {
            std::string s = formatWord(w, grid.n, grid.doubleEdges);
            if (symmetric && formatWord(mirror(w, grid.n), grid.n, grid.doubleEdges) < s) continue;
            candidates.emplace_back(s, w);
        }
    std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<char> keep(candidates.size(), 0);
    std::vector<CurveSet> sets(candidates.size());
    parallelFor(candidates.size(), [&](size_t i) {
        CurveSet cs;
        cs.grid = grid;
        cs.name = grid.name + "-r" + std::to_string(R) + "-" + std::to_string(i + 1);
        cs.productions[x] = candidates[i].second;
        if (!checkSelfAvoiding(cs.productions[x], grid).ok) return;
        keep[i] = validate(cs).verdict != Verdict::Invalid;
        sets[i] = std::move(cs);
    });
    int k = 0;
    for (size_t i = 0; i < candidates.size(); ++i)
        if (keep[i]) {
            sets[i].name = grid.name + "-r" + std::to_string(R) + "-" + std::to_string(++k);
            res.sets.push_back(std::move(sets[i]));
        }
    return res;
}

// Self-avoiding words over the grid's transitions with up to maxLength letters.
void wordsFrom(const GridSpec& grid, int maxLength, long long budget, std::atomic<long long>& nodes,
               std::atomic<bool>& exceeded, std::vector<Word>& out) {
    struct Frame {
        Word w;
        Point pos;
        int dir;
    };
    for (char first : grid.letters) {
        std::vector<Frame> stack{{Word::letter(first), Point::unit(0, grid.n), 0}};
        while (!stack.empty()) {
            if (budget > 0 && ++nodes > budget) {
                exceeded = true;
                return;
            }
            Frame f = stack.back();
            stack.pop_back();
            if (checkSelfAvoiding(f.w, grid).ok) out.push_back(f.w);
            else continue;
            if (static_cast<int>(f.w.size()) >= maxLength) continue;
            for (const auto& [t, y] : grid.successors(f.w.letters.back())) {
                Frame g = f;
                g.w.appendTurn(t);
                g.w.appendLetter(y);
                g.dir = normDir(f.dir + t, grid.n);
                g.pos = f.pos + Point::unit(g.dir, grid.n);
                stack.push_back(std::move(g));
            }
        }
    }
}

CurveSearchResult enumerateMultiLetter(const GridSpec& grid, long long R, const CurveSearchOptions& opts) {
    CurveSearchResult res;
    std::atomic<long long> nodes{0};
    std::atomic<bool> exceeded{false};
    int maxLength = opts.maxLength > 0 ? opts.maxLength : static_cast<int>(R);
    std::vector<Word> pool;
    wordsFrom(grid, maxLength, opts.budget, nodes, exceeded, pool);
    const std::string& letters = grid.letters;
    std::vector<std::vector<const Word*>> choices(letters.size());
    std::vector<Word> fixedWords(letters.size());
    for (size_t i = 0; i < letters.size(); ++i) {
        auto it = opts.fixed.find(letters[i]);
        if (it != opts.fixed.end()) {
            fixedWords[i] = it->second;
            choices[i].push_back(&fixedWords[i]);
        } else {
            for (const auto& w : pool) choices[i].push_back(&w);
        }
    }
    std::vector<long long> counts(letters.size(), 0);
    std::vector<const Word*> pick(letters.size(), nullptr);
    bool symmetric = signSymmetric(grid);
    std::set<std::string> emitted;
    std::function<void(size_t)> rec = [&](size_t i) {
        if (exceeded) return;
        if (opts.budget > 0 && ++nodes > opts.budget) {
            exceeded = true;
            return;
        }
        if (i == letters.size()) {
            for (long long c : counts)
                if (c != R) return;
            CurveSet cs;
            cs.grid = grid;
            for (size_t j = 0; j < letters.size(); ++j) cs.productions[letters[j]] = *pick[j];
            std::string key, mkey;
            for (const auto& [c, w] : cs.productions) {
                key += formatWord(w, grid.n, grid.doubleEdges) + ";";
                mkey += formatWord(mirror(w, grid.n), grid.n, grid.doubleEdges) + ";";
            }
            if (symmetric && mkey < key) return;
            if (!emitted.insert(key).second) return;
            if (validate(cs).verdict == Verdict::Invalid) return;
            cs.name = grid.name + "-r" + std::to_string(R) + "-" + std::to_string(res.sets.size() + 1);
            res.sets.push_back(std::move(cs));
            return;
        }
        for (const Word* w : choices[i]) {
            bool over = false;
            for (char c : w->letters)
                if (++counts[static_cast<size_t>(grid.index(c))] > R) over = true;
            if (!over) {
                pick[i] = w;
                rec(i + 1);
            }
            for (char c : w->letters) --counts[static_cast<size_t>(grid.index(c))];
        }
    };
    rec(0);
    res.nodes = nodes;
    res.budgetExceeded = exceeded;
    return res;
}

} // namespace

CurveSearchResult enumerateCurveSets(const GridSpec& grid, long long order, const CurveSearchOptions& opts) {
    if (order < 1) throw Error("order must be positive");
    if (grid.generic) throw Error("grid " + grid.name + " is not a coloring");
    if (grid.letters.size() == 1 && opts.fixed.empty()) return enumerateSingleLetter(grid, order, opts);
    return enumerateMultiLetter(grid, order, opts);
}

} // namespace gridcurve
