#include "gridcurve/word.hpp"

#include <cctype>
#include <cstdlib>

#include "gridcurve/error.hpp"

namespace gridcurve {

std::string formatTurn(int t, int n, bool uturn) {
    t = normTurn(t, n);
    if (t == 0) return "0";
    if (uturn && n % 2 == 0 && 2 * t == n) return "!";
    return std::string(static_cast<size_t>(t > 0 ? t : -t), t > 0 ? '+' : '-');
}

std::string formatWord(const Word& w, int n, bool uturn) {
    std::string out;
    if (normTurn(w.turns.front(), n) != 0) out += formatTurn(w.turns.front(), n, uturn);
    for (size_t i = 0; i < w.letters.size(); ++i) {
        out += w.letters[i];
        int t = w.turns[i + 1];
        if (i + 1 < w.letters.size())
            out += formatTurn(t, n, uturn);
        else if (normTurn(t, n) != 0)
            out += formatTurn(t, n, uturn);
    }
    return out;
}

Word parseWord(std::string_view text, int n, bool uturn, bool lenient) {
    Word w;
    // state of the turn run collected since the last letter
    bool haveTurn = false;
    char runChar = 0;
    int runSum = 0;
    size_t runStart = 0;
    auto fail = [&](const std::string& msg, size_t pos) {
        throw ParseError(msg, 1, static_cast<int>(pos) + 1);
    };
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '+' || c == '-' || c == '0' || c == '!') {
            int v = c == '+' ? 1 : c == '-' ? -1 : c == '0' ? 0 : n / 2;
            if (c == '!') {
                if (!uturn) fail("U-turn '!' is only allowed on double-edge grids", i);
                if (n % 2 != 0) fail("U-turn needs an even turn resolution", i);
            }
            if (haveTurn && !lenient) {
                bool sameRun = c == runChar && (c == '+' || c == '-');
                if (!sameRun) fail(std::string("adjacent turns must be merged near '") + c + "'", i);
            }
            if (!haveTurn) runStart = i;
            haveTurn = true;
            runChar = c;
            runSum += v;
            continue;
        }
        if (!std::isalpha(static_cast<unsigned char>(c))) fail(std::string("unexpected character '") + c + "'", i);
        if (haveTurn && !lenient && 2 * std::abs(runSum) > n) fail("turn exceeds n/2 units", runStart);
        if (!w.letters.empty() && !haveTurn) {
            w.turns.back() = kOmittedTurn;
        } else {
            w.turns.back() = runSum;
        }
        w.appendLetter(c);
        haveTurn = false;
        runChar = 0;
        runSum = 0;
    }
    if (haveTurn && !lenient && 2 * std::abs(runSum) > n) fail("turn exceeds n/2 units", runStart);
    if (haveTurn) w.turns.back() = runSum;
    return w;
}

} // namespace gridcurve
