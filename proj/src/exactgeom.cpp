#include "gridcurve/exactgeom.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "gridcurve/error.hpp"

namespace gridcurve {

namespace {

constexpr int kMaxN = 30;

using Coeffs = std::array<long long, kMaxPhi>;

struct Field {
    int n = 0;
    int phi = 0;
    std::vector<Coeffs> powers;  // zeta^k reduced, k = 0..n-1
};

std::vector<long long> polyDivExact(std::vector<long long> num, const std::vector<long long>& den) {
    // both monic, lowest degree first
    size_t dn = den.size() - 1;
    std::vector<long long> q(num.size() - dn, 0);
    for (size_t i = num.size(); i-- > dn;) {
        long long c = num[i];
        q[i - dn] = c;
        if (c == 0) continue;
        for (size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    return q;
}

const std::vector<Field>& fields() {
    static const std::vector<Field> table = [] {
        std::vector<Field> t(kMaxN + 1);
        for (int n = 1; n <= kMaxN; ++n) {
            Field& f = t[static_cast<size_t>(n)];
            f.n = n;
            f.phi = eulerPhi(n);
            if (f.phi > kMaxPhi) continue;
            auto poly = cyclotomicPolynomial(n);
            std::vector<long long> cur(static_cast<size_t>(f.phi), 0);
            cur[0] = 1;
            for (int k = 0; k < n; ++k) {
                Coeffs c{};
                for (int i = 0; i < f.phi; ++i) c[static_cast<size_t>(i)] = cur[static_cast<size_t>(i)];
                f.powers.push_back(c);
                // multiply by x and reduce with the monic polynomial
                long long top = cur.back();
                for (int i = f.phi - 1; i > 0; --i) cur[static_cast<size_t>(i)] = cur[static_cast<size_t>(i - 1)];
                cur[0] = 0;
                for (int i = 0; i < f.phi; ++i) cur[static_cast<size_t>(i)] -= top * poly[static_cast<size_t>(i)];
            }
        }
        return t;
    }();
    return table;
}

const Field& field(int n) {
    if (n < 1 || n > kMaxN) throw Error("unsupported turn resolution n=" + std::to_string(n));
    const Field& f = fields()[static_cast<size_t>(n)];
    if (f.phi > kMaxPhi) throw Error("unsupported turn resolution n=" + std::to_string(n));
    return f;
}

} // namespace

int eulerPhi(int n) {
    int r = 0;
    for (int k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) ++r;
    return r;
}

std::vector<long long> cyclotomicPolynomial(int n) {
    if (n < 1) throw Error("cyclotomic polynomial needs n >= 1");
    std::vector<long long> num(static_cast<size_t>(n) + 1, 0);
    num[0] = -1;
    num[static_cast<size_t>(n)] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) num = polyDivExact(num, cyclotomicPolynomial(d));
    return num;
}

Point::Point(int n) : n_(n) { field(n); }

Point::Point(int n, std::initializer_list<long long> coeffs) : n_(n) {
    const Field& f = field(n);
    if (static_cast<int>(coeffs.size()) > f.phi) throw Error("too many coefficients for n=" + std::to_string(n));
    size_t i = 0;
    for (long long v : coeffs) c_[i++] = v;
}

Point Point::unit(int k, int n) {
    const Field& f = field(n);
    Point p;
    p.n_ = n;
    p.c_ = f.powers[static_cast<size_t>(normDir(k, n))];
    return p;
}

Point Point::integer(long long v, int n) {
    Point p(n);
    p.c_[0] = v;
    return p;
}

int Point::phi() const { return field(n_).phi; }

std::vector<long long> Point::coeffs() const { return {c_.begin(), c_.begin() + phi()}; }

bool Point::isZero() const {
    for (long long v : c_)
        if (v != 0) return false;
    return true;
}

void Point::checkSame(const Point& o) const {
    if (n_ != o.n_) throw Error("mixed turn resolutions " + std::to_string(n_) + " and " + std::to_string(o.n_));
}

Point Point::operator+(const Point& o) const {
    Point r = *this;
    r += o;
    return r;
}

Point Point::operator-(const Point& o) const {
    Point r = *this;
    r -= o;
    return r;
}

Point Point::operator-() const {
    Point r = *this;
    for (long long& v : r.c_) v = -v;
    return r;
}

Point& Point::operator+=(const Point& o) {
    checkSame(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Point& Point::operator-=(const Point& o) {
    checkSame(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Point Point::operator*(const Point& o) const {
    checkSame(o);
    const Field& f = field(n_);
    Point r(n_);
    for (int i = 0; i < f.phi; ++i) {
        if (c_[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j < f.phi; ++j) {
            long long a = c_[static_cast<size_t>(i)] * o.c_[static_cast<size_t>(j)];
            if (a == 0) continue;
            const Coeffs& z = f.powers[static_cast<size_t>((i + j) % n_)];
            for (int k = 0; k < f.phi; ++k) r.c_[static_cast<size_t>(k)] += a * z[static_cast<size_t>(k)];
        }
    }
    return r;
}

Point Point::operator*(long long s) const {
    Point r = *this;
    for (long long& v : r.c_) v *= s;
    return r;
}

Point Point::rotated(int k) const { return *this * unit(k, n_); }

Point Point::conj() const {
    const Field& f = field(n_);
    Point r(n_);
    for (int i = 0; i < f.phi; ++i) {
        long long a = c_[static_cast<size_t>(i)];
        if (a == 0) continue;
        const Coeffs& z = f.powers[static_cast<size_t>((n_ - i) % n_)];
        for (int k = 0; k < f.phi; ++k) r.c_[static_cast<size_t>(k)] += a * z[static_cast<size_t>(k)];
    }
    return r;
}

Point Point::norm() const { return *this * conj(); }

std::optional<long long> Point::rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return std::nullopt;
    return c_[0];
}

bool Point::divisibleBy(long long d) const {
    for (long long v : c_)
        if (v % d != 0) return false;
    return true;
}

Point Point::dividedBy(long long d) const {
    Point r = *this;
    for (long long& v : r.c_) v /= d;
    return r;
}

std::complex<double> Point::toComplex() const {
    std::complex<double> z = 0;
    int ph = phi();
    for (int i = 0; i < ph; ++i) {
        double a = 2.0 * std::numbers::pi * i / n_;
        z += static_cast<double>(c_[static_cast<size_t>(i)]) * std::complex<double>(std::cos(a), std::sin(a));
    }
    return z;
}

std::string Point::str() const {
    std::ostringstream os;
    os << '[';
    int ph = phi();
    for (int i = 0; i < ph; ++i) os << (i ? "," : "") << c_[static_cast<size_t>(i)];
    os << ']';
    return os.str();
}

size_t Point::hash() const {
    uint64_t h = static_cast<uint64_t>(n_);
    for (long long v : c_) {
        h ^= static_cast<uint64_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h ^= h >> 30;
        h *= 0xbf58476d1ce4e5b9ull;
        h ^= h >> 27;
    }
    return static_cast<size_t>(h);
}

DirectedEdge DirectedEdge::reversed() const {
    int n = tail.n();
    if (n % 2 != 0) throw Error("edge reversal needs an even turn resolution");
    return {head(), normDir(dir + n / 2, n)};
}

TraceResult trace(const Word& word, const Point& start, int startDir) {
    int n = start.n();
    TraceResult r;
    r.edges.reserve(word.size());
    Point p = start;
    int d = normDir(startDir + word.turns.front(), n);
    for (size_t i = 0; i < word.letters.size(); ++i) {
        r.edges.push_back({p, d, word.letters[i]});
        p += Point::unit(d, n);
        d = normDir(d + word.turns[i + 1], n);
    }
    r.end = p;
    r.endDir = d;
    return r;
}

namespace {

Point galois(const Point& p, int j) {
    int n = p.n();
    Point r(n);
    for (int i = 0; i < p.phi(); ++i)
        if (p.coeff(i) != 0) r += Point::unit(i * j, n) * p.coeff(i);
    return r;
}

} // namespace

std::optional<ExactRatio> divide(const Point& a, const Point& b) {
    if (b.isZero()) return std::nullopt;
    int n = b.n();
    // product of the other Galois conjugates of b
    Point other = Point::integer(1, n);
    for (int j = 2; j < n; ++j)
        if (std::gcd(j, n) == 1) other = other * galois(b, j);
    auto den = (b * other).rational();
    if (!den || *den == 0) return std::nullopt;
    Point num = a * other;
    long long d = *den;
    if (d < 0) {
        num = -num;
        d = -d;
    }
    long long g = d;
    for (int i = 0; i < num.phi(); ++i) g = std::gcd(g, std::llabs(num.coeff(i)));
    if (g > 1) {
        num = num.dividedBy(g);
        d /= g;
    }
    return ExactRatio{num, d};
}

} // namespace gridcurve
