#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gridcurve/exactgeom.hpp"
#include "gridcurve/word.hpp"

namespace gridcurve {

struct Transition {
    char from = 0;
    int turn = 0;
    char to = 0;

    bool operator==(const Transition&) const = default;
};

struct GridSpec {
    std::string name;
    int n = 4;
    std::string letters;
    std::vector<Transition> transitions;
    bool doubleEdges = false;
    // Not a grid coloring: uniqueness checks are skipped, expansion only.
    bool generic = false;

    bool hasLetter(char c) const { return letters.find(c) != std::string::npos; }
    int index(char c) const;

    // The letter reached from `from` after turning `turn`, if any.
    std::optional<char> next(char from, int turn) const;
    // Turns t with (from, t, to) a transition.
    std::vector<int> turnsBetween(char from, char to) const;
    // (turn, to) pairs leaving `from`, sorted by normalized turn.
    std::vector<std::pair<int, char>> successors(char from) const;

    std::string transitionString(const Transition& t) const;
};

// Violations of the unique-transition properties, as readable messages.
std::vector<std::string> checkGrid(const GridSpec& spec);

// Fill in kOmittedTurn entries: 0 when XY is a straight transition, else the
// only turn from X to Y. Throws Error when neither applies.
void resolveOmittedTurns(Word& w, const GridSpec& spec);

// Every turn between consecutive letters is a transition of the grid.
bool wordFollowsGrid(const Word& w, const GridSpec& spec, std::string* why = nullptr);

struct Patch {
    int radius = 0;
    std::unordered_map<DirectedEdge, char, EdgeHash> edges;

    std::optional<char> letterAt(const DirectedEdge& e) const {
        auto it = edges.find(e);
        if (it == edges.end()) return std::nullopt;
        return it->second;
    }
};

// Breadth-first closure of the transitions from a seed edge (default: first
// letter at the origin, direction 0) out to graph distance `radius`.
Patch realize(const GridSpec& spec, int radius);
Patch realize(const GridSpec& spec, int radius, const TracedEdge& seed);
// Same closure, restricted to edges whose tail lies within `distance` of `center`.
Patch realizeDisc(const GridSpec& spec, const TracedEdge& seed, std::complex<double> center, double distance);
// Same closure, restricted to edges whose tail satisfies `inside`; the region
// must be connected through grid edges.
Patch realizeRegion(const GridSpec& spec, const TracedEdge& seed,
                    const std::function<bool(std::complex<double>)>& inside);

enum class Sense { CCW, CW, Digon };

struct Prototile {
    // One period: letters[i] is followed by turns[i].
    std::string letters;
    std::vector<int> turns;
    int exponent = 1;
    Sense sense = Sense::CCW;

    bool clockwise() const { return sense != Sense::CCW; }
    // The closed boundary word, starting with a zero leading turn.
    Word word() const;
    std::string str(const GridSpec& spec) const;
    bool operator==(const Prototile&) const = default;
};

// Turn used to classify faces: the U-turn counts as -n/2.
int faceTurn(int t, int n);

const char* senseName(Sense s);

// Faces to the left (max turn) and right (min turn) of every letter,
// deduplicated up to rotation; CCW first, then CW, each sorted.
std::vector<Prototile> prototiles(const GridSpec& spec);

} // namespace gridcurve
