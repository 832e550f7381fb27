#pragma once

#include <climits>
#include <string>
#include <string_view>
#include <vector>

namespace gridcurve {

// Marks a turn left out between two letters; resolved against a grid later.
inline constexpr int kOmittedTurn = INT_MIN;

// Normalize a turn into (-n/2, n/2].
inline int normTurn(int t, int n) {
    t %= n;
    if (t < 0) t += n;
    if (2 * t > n) t -= n;
    return t;
}

inline int normDir(int d, int n) {
    d %= n;
    return d < 0 ? d + n : d;
}

// Letters with the turns around them: turns[i] precedes letters[i], and
// turns.back() follows the last letter.
struct Word {
    std::string letters;
    std::vector<int> turns{0};

    static Word letter(char c) {
        Word w;
        w.letters.push_back(c);
        w.turns.push_back(0);
        return w;
    }

    size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }

    void appendTurn(int t) { turns.back() += t; }

    void appendLetter(char c) {
        letters.push_back(c);
        turns.push_back(0);
    }

    void append(const Word& w) {
        turns.back() += w.turns.front();
        letters += w.letters;
        turns.insert(turns.end(), w.turns.begin() + 1, w.turns.end());
    }

    int turnSum() const {
        long long s = 0;
        for (int t : turns) s += t;
        return static_cast<int>(s);
    }

    void normalize(int n) {
        for (int& t : turns) t = normTurn(t, n);
    }

    bool operator==(const Word&) const = default;
};

// Render one turn in word notation; '!' only when uturn is allowed.
std::string formatTurn(int t, int n, bool uturn);

// Leading and trailing turns appear only when nonzero.
std::string formatWord(const Word& w, int n, bool uturn);

// Parse a bare word such as "F+F-F" or "+A--". Adjacent letters without a turn
// get kOmittedTurn. With lenient set, mixed turn runs ("+--") are summed;
// otherwise they are rejected. Column numbers in errors are 1-based offsets.
Word parseWord(std::string_view text, int n, bool uturn, bool lenient = false);

} // namespace gridcurve
