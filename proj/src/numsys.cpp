#include "gridcurve/numsys.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "gridcurve/error.hpp"

namespace gridcurve {

namespace {

long long floorDiv(long long x, long long d) {
    long long q = x / d;
    if ((x % d != 0) && ((x < 0) != (d < 0))) --q;
    return q;
}

long long floorMod(long long x, long long d) { return x - floorDiv(x, d) * d; }

// u*x + v*y = gcd(x, y) >= 0
long long extGcd(long long x, long long y, long long& u, long long& v) {
    long long r0 = x, r1 = y, u0 = 1, u1 = 0, v0 = 0, v1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long t = r0 - q * r1; r0 = r1; r1 = t;
        t = u0 - q * u1; u0 = u1; u1 = t;
        t = v0 - q * v1; v0 = v1; v1 = t;
    }
    if (r0 < 0) { r0 = -r0; u0 = -u0; v0 = -v0; }
    u = u0;
    v = v0;
    return r0;
}

struct ElemHash {
    size_t operator()(const LatticeElem& z) const {
        return std::hash<long long>()(z.a) * 1000003u ^ std::hash<long long>()(z.b);
    }
};

void requireSameRing(const LatticeElem& x, const LatticeElem& y) {
    if (x.ring != y.ring) throw Error("lattice elements from different rings");
}

} // namespace

LatticeElem LatticeElem::operator+(const LatticeElem& o) const {
    requireSameRing(*this, o);
    return {a + o.a, b + o.b, ring};
}

LatticeElem LatticeElem::operator-(const LatticeElem& o) const {
    requireSameRing(*this, o);
    return {a - o.a, b - o.b, ring};
}

LatticeElem LatticeElem::operator-() const { return {-a, -b, ring}; }

LatticeElem LatticeElem::operator*(const LatticeElem& o) const {
    requireSameRing(*this, o);
    if (ring == Ring::Gaussian) return {a * o.a - b * o.b, a * o.b + b * o.a, ring};
    // beta^2 = beta - 1
    return {a * o.a - b * o.b, a * o.b + b * o.a + b * o.b, ring};
}

LatticeElem LatticeElem::conj() const {
    if (ring == Ring::Gaussian) return {a, -b, ring};
    // conj(omega6) = 1 - omega6
    return {a + b, -b, ring};
}

long long LatticeElem::norm() const {
    if (ring == Ring::Gaussian) return a * a + b * b;
    return a * a + a * b + b * b;
}

std::optional<LatticeElem> LatticeElem::divide(const LatticeElem& o) const {
    requireSameRing(*this, o);
    long long n = o.norm();
    if (n == 0) throw Error("division by zero");
    LatticeElem p = *this * o.conj();
    if (p.a % n != 0 || p.b % n != 0) return std::nullopt;
    return LatticeElem{p.a / n, p.b / n, ring};
}

std::complex<double> LatticeElem::toComplex() const {
    std::complex<double> beta = ring == Ring::Gaussian ? std::complex<double>(0, 1)
                                                       : std::polar(1.0, std::numbers::pi / 3);
    return static_cast<double>(a) + static_cast<double>(b) * beta;
}

std::string LatticeElem::str() const {
    std::ostringstream out;
    out << a << "," << b;
    return out.str();
}

LatticeElem parseLatticeElem(const std::string& text, Ring ring) {
    std::istringstream in(text);
    long long a = 0, b = 0;
    char comma = 0;
    if (!(in >> a)) throw Error("bad lattice element '" + text + "', expected a,b");
    if (in >> comma) {
        if (comma != ',' || !(in >> b)) throw Error("bad lattice element '" + text + "', expected a,b");
    }
    std::string rest;
    if (in >> rest) throw Error("bad lattice element '" + text + "', expected a,b");
    return {a, b, ring};
}

ResidueMap::ResidueMap(const LatticeElem& radix) : radix_(radix) {
    if (radix.norm() < 2) throw Error("radix must have norm >= 2");
    LatticeElem beta{0, 1, radix.ring};
    LatticeElem v1 = radix, v2 = radix * beta;
    long long u = 0, v = 0;
    modD_ = extGcd(v1.b, v2.b, u, v);
    shiftB_ = u * v1.a + v * v2.a;
    modA_ = radix.norm() / modD_;
}

LatticeElem ResidueMap::reduce(const LatticeElem& z) const {
    long long k = floorDiv(z.b, modD_);
    long long x = z.a - k * shiftB_;
    return {floorMod(x, modA_), z.b - k * modD_, z.ring};
}

std::vector<LatticeElem> ResidueMap::classes() const {
    std::vector<LatticeElem> out;
    for (long long y = 0; y < modD_; ++y)
        for (long long x = 0; x < modA_; ++x) out.push_back({x, y, radix_.ring});
    return out;
}

ResidueCheck checkResidueSystem(const NumerationSystem& ns) {
    ResidueCheck out;
    out.norm = ns.radix.norm();
    ResidueMap map(ns.radix);
    std::vector<LatticeElem> reduced;
    for (const LatticeElem& d : ns.digits) reduced.push_back(map.reduce(d));
    for (size_t i = 0; i < reduced.size(); ++i)
        for (size_t j = i + 1; j < reduced.size(); ++j)
            if (reduced[i] == reduced[j]) out.duplicates.emplace_back(i, j);
    for (const LatticeElem& c : map.classes())
        if (std::find(reduced.begin(), reduced.end(), c) == reduced.end()) out.missing.push_back(c);
    out.complete = out.duplicates.empty() && out.missing.empty() &&
                   static_cast<long long>(ns.digits.size()) == out.norm;
    return out;
}

bool isCompleteResidueSystem(const NumerationSystem& ns) { return checkResidueSystem(ns).complete; }

const char* expansionStatusName(ExpansionStatus s) {
    switch (s) {
    case ExpansionStatus::Terminated: return "terminated";
    case ExpansionStatus::Cycle: return "cycle";
    case ExpansionStatus::NoDigit: return "no-digit";
    case ExpansionStatus::NonTerminating: return "non-terminating";
    }
    return "?";
}

Expansion expandInteger(const NumerationSystem& ns, const LatticeElem& z, long long maxSteps) {
    Expansion out;
    std::unordered_set<LatticeElem, ElemHash> seen;
    LatticeElem cur = z;
    cur.ring = ns.ring;
    out.witness = LatticeElem{0, 0, ns.ring};
    while (!cur.isZero()) {
        if (!seen.insert(cur).second) {
            out.status = ExpansionStatus::Cycle;
            out.witness = cur;
            return out;
        }
        if (static_cast<long long>(seen.size()) > maxSteps) {
            out.status = ExpansionStatus::NonTerminating;
            out.witness = cur;
            return out;
        }
        std::optional<LatticeElem> next;
        for (size_t i = 0; i < ns.digits.size(); ++i) {
            next = (cur - ns.digits[i]).divide(ns.radix);
            if (next) {
                out.digits.push_back(i);
                break;
            }
        }
        if (!next) {
            out.status = ExpansionStatus::NoDigit;
            out.witness = cur;
            return out;
        }
        cur = *next;
    }
    return out;
}

LatticeElem evaluate(const NumerationSystem& ns, const std::vector<size_t>& digits) {
    LatticeElem sum{0, 0, ns.ring};
    LatticeElem power{1, 0, ns.ring};
    for (size_t d : digits) {
        sum = sum + ns.digits.at(d) * power;
        power = power * ns.radix;
    }
    return sum;
}

std::vector<LatticeElem> fundamentalRegionPoints(const NumerationSystem& ns, int k) {
    if (k < 0) throw Error("depth must be >= 0");
    std::vector<LatticeElem> pts{LatticeElem{0, 0, ns.ring}};
    LatticeElem power{1, 0, ns.ring};
    for (int i = 0; i < k; ++i) {
        std::vector<LatticeElem> next;
        next.reserve(pts.size() * ns.digits.size());
        for (const LatticeElem& d : ns.digits) {
            LatticeElem step = d * power;
            for (const LatticeElem& p : pts) next.push_back(p + step);
        }
        pts = std::move(next);
        power = power * ns.radix;
    }
    return pts;
}

const std::vector<NamedSystem>& namedSystems() {
    static const std::vector<NamedSystem> table = [] {
        const Ring G = Ring::Gaussian, E = Ring::Eisenstein;
        std::vector<NamedSystem> t;
        t.push_back({"gauss-3", "radix 3 with nine digits, Gaussian integers",
                     {G, {3, 0, G},
                      {{0, 0, G}, {1, -1, G}, {-1, 1, G}, {0, 2, G}, {0, -2, G},
                       {1, 3, G}, {-1, -3, G}, {2, 2, G}, {-2, -2, G}}}});
        t.push_back({"eisenstein-7", "radix -1+3w6 with seven digits, Eisenstein integers",
                     {E, {-1, 3, E},
                      {{0, 0, E}, {0, 1, E}, {0, -1, E}, {-1, 1, E}, {1, -1, E}, {-2, 2, E}, {1, 1, E}}}});
        t.push_back({"eisenstein-2", "radix -2 with four digits, Eisenstein integers",
                     {E, {-2, 0, E}, {{0, 0, E}, {1, 0, E}, {0, 1, E}, {1, 1, E}}}});
        t.push_back({"gauss-2+i", "radix -2+i with digits 0, +-1, +-(1-i); not a residue system",
                     {G, {-2, 1, G}, {{0, 0, G}, {1, 0, G}, {-1, 0, G}, {1, -1, G}, {-1, 1, G}}}});
        return t;
    }();
    return table;
}

const NumerationSystem& namedSystem(const std::string& name) {
    for (const NamedSystem& s : namedSystems())
        if (s.name == name) return s.system;
    throw Error("unknown numeration system '" + name + "'");
}

} // namespace gridcurve
