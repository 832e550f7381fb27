#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gridcurve {

enum class Ring { Gaussian, Eisenstein };

// a + b*beta with beta = i (Gaussian) or beta = omega6 (Eisenstein, omega6^2 = omega6 - 1).
struct LatticeElem {
    long long a = 0;
    long long b = 0;
    Ring ring = Ring::Gaussian;

    LatticeElem() = default;
    LatticeElem(long long a_, long long b_, Ring r = Ring::Gaussian) : a(a_), b(b_), ring(r) {}

    LatticeElem operator+(const LatticeElem& o) const;
    LatticeElem operator-(const LatticeElem& o) const;
    LatticeElem operator-() const;
    LatticeElem operator*(const LatticeElem& o) const;
    LatticeElem conj() const;
    long long norm() const;
    bool isZero() const { return a == 0 && b == 0; }
    // Exact quotient; unset when o does not divide this.
    std::optional<LatticeElem> divide(const LatticeElem& o) const;

    std::complex<double> toComplex() const;
    std::string str() const;

    bool operator==(const LatticeElem& o) const { return a == o.a && b == o.b && ring == o.ring; }
    bool operator!=(const LatticeElem& o) const { return !(*this == o); }
    bool operator<(const LatticeElem& o) const { return a != o.a ? a < o.a : b < o.b; }
};

// "a,b"; throws Error on malformed input.
LatticeElem parseLatticeElem(const std::string& text, Ring ring);

struct NumerationSystem {
    Ring ring = Ring::Gaussian;
    LatticeElem radix;
    std::vector<LatticeElem> digits;
};

// Residue classes modulo the radix, labeled by their reduced representative.
class ResidueMap {
public:
    explicit ResidueMap(const LatticeElem& radix);
    LatticeElem reduce(const LatticeElem& z) const;
    std::vector<LatticeElem> classes() const;
    long long size() const { return modA_ * modD_; }

private:
    LatticeElem radix_;
    long long modA_ = 1; // period along (1, 0)
    long long modD_ = 1; // period of the b coordinate
    long long shiftB_ = 0; // lattice vector (shiftB_, modD_)
};

struct ResidueCheck {
    bool complete = false;
    long long norm = 0;
    // Index pairs of digits in the same residue class.
    std::vector<std::pair<size_t, size_t>> duplicates;
    // Reduced representatives of classes that no digit hits.
    std::vector<LatticeElem> missing;
};

ResidueCheck checkResidueSystem(const NumerationSystem& ns);
bool isCompleteResidueSystem(const NumerationSystem& ns);

enum class ExpansionStatus { Terminated, Cycle, NoDigit, NonTerminating };

const char* expansionStatusName(ExpansionStatus s);

struct Expansion {
    ExpansionStatus status = ExpansionStatus::Terminated;
    // Digit indices, least significant first.
    std::vector<size_t> digits;
    // The value that recurred (Cycle) or has no digit (NoDigit).
    LatticeElem witness;
};

// Greedy division by the radix; gives up after `maxSteps` distinct states.
Expansion expandInteger(const NumerationSystem& ns, const LatticeElem& z, long long maxSteps = 1000000);

// sum_i digits[e_i] * radix^i.
LatticeElem evaluate(const NumerationSystem& ns, const std::vector<size_t>& digits);

// All sums of k digits times powers of the radix, with repetitions.
std::vector<LatticeElem> fundamentalRegionPoints(const NumerationSystem& ns, int k);

struct NamedSystem {
    std::string name;
    std::string description;
    NumerationSystem system;
};

// The digit systems attached to lattice tiles in the catalog.
const std::vector<NamedSystem>& namedSystems();
const NumerationSystem& namedSystem(const std::string& name);

} // namespace gridcurve
