#include "gridcurve/lsystem.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "gridcurve/error.hpp"

namespace gridcurve {

const Word& CurveSet::production(char c) const {
    auto it = productions.find(c);
    if (it == productions.end()) throw Error(std::string("curve-set ") + name + " has no production for '" + c + "'");
    return it->second;
}

bool CurveSet::isConstant(char c) const {
    const Word& w = production(c);
    return w.letters.size() == 1 && w.letters[0] == c && normTurn(w.turns[0], grid.n) == 0 &&
           normTurn(w.turns[1], grid.n) == 0;
}

std::string CurveSet::constants() const {
    std::string out;
    for (char c : grid.letters)
        if (productions.count(c) && isConstant(c)) out.push_back(c);
    return out;
}

Word expand(const CurveSet& cs, const Word& axiom, int k) {
    if (k < 0) throw Error("iteration count must be nonnegative");
    Word cur = axiom;
    for (int it = 0; it < k; ++it) {
        Word next;
        next.turns.front() = cur.turns.front();
        for (size_t i = 0; i < cur.letters.size(); ++i) {
            next.append(cs.production(cur.letters[i]));
            next.appendTurn(cur.turns[i + 1]);
        }
        cur = std::move(next);
    }
    return cur;
}

SubstMatrix substMatrix(const CurveSet& cs) {
    const auto& L = cs.grid.letters;
    SubstMatrix m(L.size(), std::vector<long long>(L.size(), 0));
    for (size_t c = 0; c < L.size(); ++c)
        for (char x : cs.production(L[c]).letters) m[static_cast<size_t>(cs.grid.index(x))][c] += 1;
    return m;
}

long long expandedLength(const CurveSet& cs, const Word& axiom, int k) {
    SubstMatrix m = substMatrix(cs);
    std::vector<long long> v(m.size(), 0);
    for (char x : axiom.letters) v[static_cast<size_t>(cs.grid.index(x))] += 1;
    for (int it = 0; it < k; ++it) {
        std::vector<long long> w(m.size(), 0);
        for (size_t r = 0; r < m.size(); ++r)
            for (size_t c = 0; c < m.size(); ++c) w[r] += m[r][c] * v[c];
        v = std::move(w);
    }
    return std::accumulate(v.begin(), v.end(), 0LL);
}

long long order(const SubstMatrix& m) {
    std::vector<long long> sums;
    for (const auto& row : m) sums.push_back(std::accumulate(row.begin(), row.end(), 0LL));
    if (sums.empty()) throw UnequalRowSums(sums);
    for (long long s : sums)
        if (s != sums.front()) throw UnequalRowSums(sums);
    return sums.front();
}

long long order(const CurveSet& cs) { return order(substMatrix(cs)); }

std::vector<int> reachable(const SubstMatrix& m, int from) {
    std::vector<char> seen(m.size(), 0);
    std::vector<int> stack{from}, out;
    seen[static_cast<size_t>(from)] = 1;
    while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        out.push_back(c);
        for (size_t r = 0; r < m.size(); ++r)
            if (m[r][static_cast<size_t>(c)] > 0 && !seen[r]) {
                seen[r] = 1;
                stack.push_back(static_cast<int>(r));
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool isIrreducible(const SubstMatrix& m) {
    for (size_t i = 0; i < m.size(); ++i)
        if (reachable(m, static_cast<int>(i)).size() != m.size()) return false;
    return true;
}

namespace {

// Perron root of an irreducible nonnegative block, via power iteration on
// (B + I) so that periodic blocks converge too.
double blockRadius(const SubstMatrix& m, const std::vector<int>& idx) {
    const size_t k = idx.size();
    bool anyArc = false;
    for (int r : idx)
        for (int c : idx)
            if (m[static_cast<size_t>(r)][static_cast<size_t>(c)] > 0) anyArc = true;
    if (!anyArc) return 0.0;
    std::vector<double> v(k, 1.0), w(k);
    double lambda = 0;
    for (int it = 0; it < 200000; ++it) {
        for (size_t i = 0; i < k; ++i) {
            double s = v[i];
            for (size_t j = 0; j < k; ++j)
                s += static_cast<double>(m[static_cast<size_t>(idx[i])][static_cast<size_t>(idx[j])]) * v[j];
            w[i] = s;
        }
        double norm = *std::max_element(w.begin(), w.end());
        for (size_t i = 0; i < k; ++i) w[i] /= norm;
        double delta = 0;
        for (size_t i = 0; i < k; ++i) delta = std::max(delta, std::abs(w[i] - v[i]));
        v.swap(w);
        double prev = lambda;
        lambda = norm - 1.0;
        if (delta < 1e-15 && std::abs(lambda - prev) < 1e-13) break;
    }
    return lambda;
}

} // namespace

double spectralRadius(const SubstMatrix& m) {
    // strongly connected components by mutual reachability; sizes are tiny
    const size_t n = m.size();
    std::vector<std::vector<int>> reach(n);
    for (size_t i = 0; i < n; ++i) reach[i] = reachable(m, static_cast<int>(i));
    auto reaches = [&](size_t a, size_t b) {
        return std::binary_search(reach[a].begin(), reach[a].end(), static_cast<int>(b));
    };
    std::vector<char> done(n, 0);
    double rho = 0;
    for (size_t i = 0; i < n; ++i) {
        if (done[i]) continue;
        std::vector<int> comp;
        for (size_t j = 0; j < n; ++j)
            if (reaches(i, j) && reaches(j, i)) {
                comp.push_back(static_cast<int>(j));
                done[j] = 1;
            }
        rho = std::max(rho, blockRadius(m, comp));
    }
    return rho;
}

double dimension(const SubstMatrix& m, long long R, int letterIndex) {
    auto idx = reachable(m, letterIndex);
    SubstMatrix sub(idx.size(), std::vector<long long>(idx.size()));
    for (size_t r = 0; r < idx.size(); ++r)
        for (size_t c = 0; c < idx.size(); ++c)
            sub[r][c] = m[static_cast<size_t>(idx[r])][static_cast<size_t>(idx[c])];
    double rho = spectralRadius(sub);
    if (rho <= 1.0 + 1e-12) return 0.0;
    return 2.0 * std::log(rho) / std::log(static_cast<double>(R));
}

double dimension(const CurveSet& cs, char letter) {
    SubstMatrix m = substMatrix(cs);
    return dimension(m, order(m), cs.grid.index(letter));
}

namespace {

Word reversedNegated(const Word& w) {
    Word r;
    r.letters.assign(w.letters.rbegin(), w.letters.rend());
    r.turns.assign(w.turns.rbegin(), w.turns.rend());
    for (int& t : r.turns) t = -t;
    return r;
}

} // namespace

Word relabel(const Word& w, const std::map<char, char>& map) {
    Word r = w;
    for (char& c : r.letters) {
        auto it = map.find(c);
        if (it != map.end()) c = it->second;
    }
    return r;
}

Word makeFolding(const Word& prodL) {
    for (char c : prodL.letters)
        if (c != 'L' && c != 'R') throw Error(std::string("folding construction needs letters L and R, found '") + c + "'");
    return relabel(reversedNegated(prodL), {{'L', 'R'}, {'R', 'L'}});
}

Word reversalComplement(const Word& prod, const std::map<char, char>& map) {
    return relabel(reversedNegated(prod), map);
}

Word dropLetters(const Word& w, const std::string& drop, int n, std::optional<int> targetN) {
    Word r;
    r.turns.front() = w.turns.front();
    for (size_t i = 0; i < w.letters.size(); ++i) {
        if (drop.find(w.letters[i]) == std::string::npos) r.appendLetter(w.letters[i]);
        r.appendTurn(w.turns[i + 1]);
    }
    r.normalize(n);
    if (targetN) {
        if (*targetN <= 0 || n % *targetN != 0)
            throw Error("cannot rescale turns from n=" + std::to_string(n) + " to n=" + std::to_string(*targetN));
        int f = n / *targetN;
        for (int& t : r.turns) {
            if (t % f != 0)
                throw Error("turn " + std::to_string(t) + " is not a multiple of " + std::to_string(f) +
                            " and cannot be rescaled");
            t = normTurn(t / f, *targetN);
        }
    }
    return r;
}

CurveSet dropLettersNormalize(const CurveSet& cs, const std::string& drop, std::optional<int> targetN) {
    for (char c : drop)
        if (!cs.isConstant(c)) throw Error(std::string("letter '") + c + "' is not a constant and cannot be dropped");
    CurveSet out;
    out.name = cs.name + "-dropped";
    out.grid.name = cs.grid.name + "-dropped";
    out.grid.n = targetN.value_or(cs.grid.n);
    for (char c : cs.grid.letters)
        if (drop.find(c) == std::string::npos) out.grid.letters.push_back(c);
    std::set<std::tuple<char, int, char>> seen;
    for (char c : out.grid.letters) {
        Word w = dropLetters(cs.production(c), drop, cs.grid.n, targetN);
        for (size_t i = 1; i < w.letters.size(); ++i) {
            int t = normTurn(w.turns[i], out.grid.n);
            if (out.grid.n % 2 == 0 && 2 * t == out.grid.n) out.grid.doubleEdges = true;
            if (seen.insert({w.letters[i - 1], t, w.letters[i]}).second)
                out.grid.transitions.push_back({w.letters[i - 1], t, w.letters[i]});
        }
        out.productions[c] = std::move(w);
    }
    return out;
}

std::string rewriteText(std::string text, const std::vector<std::pair<std::string, std::string>>& rules) {
    for (const auto& [from, to] : rules) {
        if (from.empty()) continue;
        std::string out;
        size_t pos = 0;
        while (true) {
            size_t hit = text.find(from, pos);
            if (hit == std::string::npos) break;
            out.append(text, pos, hit - pos);
            out += to;
            pos = hit + from.size();
        }
        out.append(text, pos, std::string::npos);
        text = std::move(out);
    }
    return text;
}

Word rewrite(const std::string& text, const std::vector<std::pair<std::string, std::string>>& rules, int n,
             bool uturn) {
    return parseWord(rewriteText(text, rules), n, uturn, true);
}

std::string embedTriangleOn36_3366(const std::string& triangleWord) {
    std::string s = rewriteText(triangleWord, {{"+", "p"},
                                               {"-", "m"},
                                               {"0", "n"},
                                               {"p", "B++D++E--C"},
                                               {"m", "B++D--E--C"},
                                               {"n", "B++D0E--C"},
                                               {"F", "+A-"}});
    if (!s.empty() && s.front() == '+') s.erase(s.begin());
    if (!s.empty() && s.back() == '-') s.pop_back();
    return s;
}

std::string decorateDSquareOn488(const std::string& dsquareWord) {
    return rewriteText(dsquareWord, {{"+", "+F+"}, {"A", "+F-F-F+"}, {"!", "--F--"}});
}

} // namespace gridcurve
