#include "gridcurve/grid.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>

#include "gridcurve/error.hpp"

namespace gridcurve {

int GridSpec::index(char c) const {
    auto p = letters.find(c);
    if (p == std::string::npos) throw Error(std::string("letter '") + c + "' is not in grid " + name);
    return static_cast<int>(p);
}

std::optional<char> GridSpec::next(char from, int turn) const {
    int t = normTurn(turn, n);
    for (const auto& tr : transitions)
        if (tr.from == from && normTurn(tr.turn, n) == t) return tr.to;
    return std::nullopt;
}

std::vector<int> GridSpec::turnsBetween(char from, char to) const {
    std::vector<int> out;
    for (const auto& tr : transitions)
        if (tr.from == from && tr.to == to) out.push_back(normTurn(tr.turn, n));
    return out;
}

std::vector<std::pair<int, char>> GridSpec::successors(char from) const {
    std::vector<std::pair<int, char>> out;
    for (const auto& tr : transitions)
        if (tr.from == from) out.emplace_back(normTurn(tr.turn, n), tr.to);
    std::sort(out.begin(), out.end());
    return out;
}

std::string GridSpec::transitionString(const Transition& t) const {
    return std::string(1, t.from) + formatTurn(t.turn, n, doubleEdges) + t.to;
}

std::vector<std::string> checkGrid(const GridSpec& spec) {
    std::vector<std::string> out;
    std::map<std::pair<char, int>, std::vector<std::string>> fwd, bwd;
    for (const auto& t : spec.transitions) {
        int tt = normTurn(t.turn, spec.n);
        if (!spec.hasLetter(t.from) || !spec.hasLetter(t.to))
            out.push_back("transition " + spec.transitionString(t) + " uses a letter outside the alphabet");
        if (!spec.doubleEdges && spec.n % 2 == 0 && 2 * tt == spec.n)
            out.push_back("transition " + spec.transitionString(t) + " is a U-turn on a grid without double edges");
        fwd[{t.from, tt}].push_back(spec.transitionString(t));
        bwd[{t.to, tt}].push_back(spec.transitionString(t));
    }
    for (const auto& [key, list] : fwd) {
        std::set<std::string> distinct(list.begin(), list.end());
        if (distinct.size() > 1) {
            std::string msg = "(" + std::string(1, key.first) + "," + formatTurn(key.second, spec.n, spec.doubleEdges) +
                              ") has several targets:";
            for (const auto& s : distinct) msg += " " + s;
            out.push_back(msg);
        }
    }
    for (const auto& [key, list] : bwd) {
        std::set<std::string> distinct(list.begin(), list.end());
        if (distinct.size() > 1) {
            std::string msg = "(" + formatTurn(key.second, spec.n, spec.doubleEdges) + "," + std::string(1, key.first) +
                              ") has several sources:";
            for (const auto& s : distinct) msg += " " + s;
            out.push_back(msg);
        }
    }
    return out;
}

void resolveOmittedTurns(Word& w, const GridSpec& spec) {
    for (size_t i = 1; i < w.letters.size(); ++i) {
        int& t = w.turns[i];
        if (t != kOmittedTurn) continue;
        char a = w.letters[i - 1], b = w.letters[i];
        auto options = spec.turnsBetween(a, b);
        if (std::find(options.begin(), options.end(), 0) != options.end()) {
            t = 0;
        } else if (options.size() == 1) {
            t = options.front();
        } else {
            throw Error(std::string("cannot infer the omitted turn between '") + a + "' and '" + b + "' on grid " +
                        spec.name);
        }
    }
    if (w.turns.front() == kOmittedTurn) w.turns.front() = 0;
    if (w.turns.back() == kOmittedTurn) w.turns.back() = 0;
}

bool wordFollowsGrid(const Word& w, const GridSpec& spec, std::string* why) {
    for (char c : w.letters) {
        if (!spec.hasLetter(c)) {
            if (why) *why = std::string("letter '") + c + "' is not in the grid";
            return false;
        }
    }
    for (size_t i = 1; i < w.letters.size(); ++i) {
        auto ts = spec.turnsBetween(w.letters[i - 1], w.letters[i]);
        if (std::find(ts.begin(), ts.end(), normTurn(w.turns[i], spec.n)) == ts.end()) {
            if (why)
                *why = "no transition " + std::string(1, w.letters[i - 1]) +
                       formatTurn(w.turns[i], spec.n, spec.doubleEdges) + w.letters[i] + " at letter " +
                       std::to_string(i);
            return false;
        }
    }
    return true;
}

Patch realize(const GridSpec& spec, int radius) {
    if (spec.letters.empty()) throw Error("grid " + spec.name + " has no letters");
    return realize(spec, radius, TracedEdge{Point::zero(spec.n), 0, spec.letters.front()});
}

Patch realize(const GridSpec& spec, int radius, const TracedEdge& seed) {
    const int n = spec.n;
    Patch patch;
    patch.radius = radius;
    std::deque<std::pair<TracedEdge, int>> queue;
    patch.edges.emplace(seed.edge(), seed.letter);
    queue.emplace_back(seed, 0);
    auto visit = [&](const TracedEdge& e, int dist) {
        auto [it, inserted] = patch.edges.emplace(e.edge(), e.letter);
        if (!inserted) {
            if (it->second != e.letter)
                throw InconsistentColoring(e.tail.str() + "@" + std::to_string(e.dir), it->second, e.letter);
            return;
        }
        queue.emplace_back(e, dist);
    };
    while (!queue.empty()) {
        auto [e, dist] = queue.front();
        queue.pop_front();
        if (dist >= radius) continue;
        Point head = e.tail + Point::unit(e.dir, n);
        for (const auto& t : spec.transitions) {
            if (t.from == e.letter) visit({head, normDir(e.dir + t.turn, n), t.to}, dist + 1);
            if (t.to == e.letter) {
                int d = normDir(e.dir - t.turn, n);
                visit({e.tail - Point::unit(d, n), d, t.from}, dist + 1);
            }
        }
    }
    return patch;
}

Patch realizeDisc(const GridSpec& spec, const TracedEdge& seed, std::complex<double> center, double distance) {
    Patch patch = realizeRegion(spec, seed, [&](std::complex<double> z) { return std::abs(z - center) <= distance; });
    patch.radius = static_cast<int>(std::ceil(distance));
    return patch;
}

Patch realizeRegion(const GridSpec& spec, const TracedEdge& seed,
                    const std::function<bool(std::complex<double>)>& inside) {
    const int n = spec.n;
    Patch patch;
    std::deque<TracedEdge> queue;
    patch.edges.emplace(seed.edge(), seed.letter);
    queue.push_back(seed);
    auto visit = [&](const TracedEdge& e) {
        if (!inside(e.tail.toComplex())) return;
        auto [it, inserted] = patch.edges.emplace(e.edge(), e.letter);
        if (!inserted) {
            if (it->second != e.letter)
                throw InconsistentColoring(e.tail.str() + "@" + std::to_string(e.dir), it->second, e.letter);
            return;
        }
        queue.push_back(e);
    };
    while (!queue.empty()) {
        TracedEdge e = queue.front();
        queue.pop_front();
        Point head = e.tail + Point::unit(e.dir, n);
        for (const auto& t : spec.transitions) {
            if (t.from == e.letter) visit({head, normDir(e.dir + t.turn, n), t.to});
            if (t.to == e.letter) {
                int d = normDir(e.dir - t.turn, n);
                visit({e.tail - Point::unit(d, n), d, t.from});
            }
        }
    }
    return patch;
}

int faceTurn(int t, int n) {
    t = normTurn(t, n);
    if (n % 2 == 0 && 2 * t == n) return -t;
    return t;
}

const char* senseName(Sense s) {
    switch (s) {
    case Sense::CCW: return "CCW";
    case Sense::CW: return "CW";
    case Sense::Digon: return "CW";
    }
    return "?";
}

Word Prototile::word() const {
    Word w;
    for (int r = 0; r < exponent; ++r)
        for (size_t i = 0; i < letters.size(); ++i) {
            w.appendLetter(letters[i]);
            w.appendTurn(turns[i]);
        }
    return w;
}

std::string Prototile::str(const GridSpec& spec) const {
    std::string s = "[";
    for (size_t i = 0; i < letters.size(); ++i) s += letters[i] + formatTurn(turns[i], spec.n, spec.doubleEdges);
    s += "]^" + std::to_string(exponent);
    return s;
}

namespace {

std::optional<std::vector<std::pair<char, int>>> faceWalk(const GridSpec& spec, char start, bool left) {
    const int n = spec.n;
    std::vector<std::pair<char, int>> seq;
    char x = start;
    int d = 0;
    Point p = Point::zero(n);
    for (int step = 0; step < 1024; ++step) {
        auto succ = spec.successors(x);
        if (succ.empty()) return std::nullopt;
        auto best = succ.front();
        for (const auto& s : succ) {
            int a = faceTurn(s.first, n), b = faceTurn(best.first, n);
            if (left ? a > b : a < b) best = s;
        }
        seq.emplace_back(x, best.first);
        p += Point::unit(d, n);
        d = normDir(d + best.first, n);
        x = best.second;
        if (x == start && d == 0 && p.isZero()) return seq;
    }
    return std::nullopt;
}

Prototile canonicalTile(const GridSpec& spec, std::vector<std::pair<char, int>> seq) {
    const size_t m = seq.size();
    auto best = seq;
    for (size_t r = 1; r < m; ++r) {
        std::vector<std::pair<char, int>> rot(seq.begin() + static_cast<long>(r), seq.end());
        rot.insert(rot.end(), seq.begin(), seq.begin() + static_cast<long>(r));
        if (rot < best) best = rot;
    }
    size_t period = m;
    for (size_t p = 1; p <= m; ++p) {
        if (m % p != 0) continue;
        bool ok = true;
        for (size_t i = 0; i < m && ok; ++i) ok = best[i] == best[(i + p) % m];
        if (ok) {
            period = p;
            break;
        }
    }
    Prototile t;
    for (size_t i = 0; i < period; ++i) {
        t.letters.push_back(best[i].first);
        t.turns.push_back(best[i].second);
    }
    t.exponent = static_cast<int>(m / period);
    long long total = 0;
    bool uturns = true;
    for (const auto& [c, turn] : best) {
        total += faceTurn(turn, spec.n);
        if (2 * normTurn(turn, spec.n) != spec.n) uturns = false;
    }
    if (m == 2 && uturns)
        t.sense = Sense::Digon;
    else
        t.sense = total > 0 ? Sense::CCW : Sense::CW;
    return t;
}

} // namespace

std::vector<Prototile> prototiles(const GridSpec& spec) {
    realize(spec, 6);
    std::vector<Prototile> out;
    for (char x : spec.letters) {
        for (bool left : {true, false}) {
            auto seq = faceWalk(spec, x, left);
            if (!seq) throw Error(std::string("face next to letter '") + x + "' does not close on grid " + spec.name);
            Prototile t = canonicalTile(spec, *seq);
            if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
        }
    }
    std::sort(out.begin(), out.end(), [](const Prototile& a, const Prototile& b) {
        if (a.clockwise() != b.clockwise()) return !a.clockwise();
        if (a.letters != b.letters) return a.letters < b.letters;
        return a.turns < b.turns;
    });
    return out;
}

} // namespace gridcurve
