#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gridcurve {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int col)
        : Error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg), line_(line), col_(col) {}

    int line() const { return line_; }
    int column() const { return col_; }

private:
    int line_;
    int col_;
};

class InconsistentColoring : public Error {
public:
    InconsistentColoring(const std::string& edge, char a, char b)
        : Error("inconsistent coloring at edge " + edge + ": " + std::string(1, a) + " vs " + std::string(1, b)),
          first(a), second(b) {}

    char first;
    char second;
};

class UnequalRowSums : public Error {
public:
    explicit UnequalRowSums(std::vector<long long> sums)
        : Error(describe(sums)), rowSums(std::move(sums)) {}

    std::vector<long long> rowSums;

private:
    static std::string describe(const std::vector<long long>& s) {
        std::string out = "unequal row sums:";
        for (long long v : s) out += " " + std::to_string(v);
        return out;
    }
};

} // namespace gridcurve
