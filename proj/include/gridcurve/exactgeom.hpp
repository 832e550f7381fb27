#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gridcurve/word.hpp"

namespace gridcurve {

// Largest phi(n) supported; covers every n whose cyclotomic field has degree <= 8.
inline constexpr int kMaxPhi = 8;

int eulerPhi(int n);

// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
std::vector<long long> cyclotomicPolynomial(int n);

// An element of Z[zeta_n], stored on the basis 1, zeta, ..., zeta^(phi(n)-1).
class Point {
public:
    Point() = default;
    explicit Point(int n);
    Point(int n, std::initializer_list<long long> coeffs);

    static Point zero(int n) { return Point(n); }
    static Point unit(int k, int n);
    static Point integer(long long v, int n);

    int n() const { return n_; }
    int phi() const;
    long long coeff(int i) const { return c_[static_cast<size_t>(i)]; }
    std::vector<long long> coeffs() const;

    bool isZero() const;

    Point operator+(const Point& o) const;
    Point operator-(const Point& o) const;
    Point operator-() const;
    Point operator*(const Point& o) const;
    Point operator*(long long s) const;
    Point& operator+=(const Point& o);
    Point& operator-=(const Point& o);

    // Multiply by zeta^k.
    Point rotated(int k) const;
    // Complex conjugate (zeta -> zeta^-1).
    Point conj() const;
    // z * conj(z), the squared length as a field element.
    Point norm() const;
    // Set when the coefficient vector is an integer multiple of 1.
    std::optional<long long> rational() const;
    // Exact test whether every coefficient is divisible by d.
    bool divisibleBy(long long d) const;
    Point dividedBy(long long d) const;

    std::complex<double> toComplex() const;
    std::string str() const;

    bool operator==(const Point& o) const { return n_ == o.n_ && c_ == o.c_; }
    bool operator!=(const Point& o) const { return !(*this == o); }
    bool operator<(const Point& o) const { return n_ != o.n_ ? n_ < o.n_ : c_ < o.c_; }

    size_t hash() const;

private:
    void checkSame(const Point& o) const;

    int n_ = 4;
    std::array<long long, kMaxPhi> c_{};
};

struct PointHash {
    size_t operator()(const Point& p) const { return p.hash(); }
};

// Edge from tail in direction dir (angle dir * 2pi/n).
struct DirectedEdge {
    Point tail;
    int dir = 0;

    Point head() const { return tail + Point::unit(dir, tail.n()); }
    // Requires even n: the anti-parallel edge.
    DirectedEdge reversed() const;

    bool operator==(const DirectedEdge& o) const { return dir == o.dir && tail == o.tail; }
    bool operator<(const DirectedEdge& o) const { return tail == o.tail ? dir < o.dir : tail < o.tail; }
};

struct EdgeHash {
    size_t operator()(const DirectedEdge& e) const { return e.tail.hash() ^ (static_cast<size_t>(e.dir) * 0x94d049bb133111ebull); }
};

struct TracedEdge {
    Point tail;
    int dir = 0;
    char letter = 0;

    DirectedEdge edge() const { return {tail, dir}; }
};

struct TraceResult {
    Point end;
    int endDir = 0;
    std::vector<TracedEdge> edges;
};

// Turtle walk: the leading turn is applied before the first edge, the
// trailing turn after the last. Turns are in units of 2pi/n.
TraceResult trace(const Word& word, const Point& start, int startDir);

// Fraction num/den with den > 0, for exact scale factors outside Z[zeta].
struct ExactRatio {
    Point num;
    long long den = 1;

    std::complex<double> toComplex() const { return num.toComplex() / static_cast<double>(den); }
};

// a / b computed as a * conj(b) / N(b) when N(b) is rational; nullopt otherwise.
std::optional<ExactRatio> divide(const Point& a, const Point& b);

} // namespace gridcurve
