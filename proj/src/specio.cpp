#include "gridcurve/specio.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "gridcurve/error.hpp"

namespace gridcurve {

namespace {

struct Ch {
    char c;
    int line;
    int col;
};

using Seg = std::vector<Ch>;

// Strip comments and join '\' continuations, keeping source positions.
Seg clean(std::string_view text) {
    Seg out;
    int line = 1, col = 1;
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') {
                ++i;
                ++col;
            }
            continue;
        }
        if (c == '\\') {
            size_t j = i + 1;
            while (j < text.size() && (text[j] == ' ' || text[j] == '\t' || text[j] == '\r')) ++j;
            if (j < text.size() && text[j] == '\n') {
                out.push_back({' ', line, col});
                i = j + 1;
                ++line;
                col = 1;
                continue;
            }
            if (j == text.size()) {
                i = j;
                continue;
            }
        }
        out.push_back({c, line, col});
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++i;
    }
    return out;
}

std::string str(const Seg& s) {
    std::string r;
    r.reserve(s.size());
    for (const Ch& c : s) r.push_back(c.c);
    return r;
}

bool isSpace(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

Seg trim(const Seg& s) {
    size_t a = 0, b = s.size();
    while (a < b && isSpace(s[a].c)) ++a;
    while (b > a && isSpace(s[b - 1].c)) --b;
    return Seg(s.begin() + static_cast<long>(a), s.begin() + static_cast<long>(b));
}

std::vector<Seg> split(const Seg& s, char sep) {
    std::vector<Seg> out(1);
    for (const Ch& c : s) {
        if (c.c == sep)
            out.emplace_back();
        else
            out.back().push_back(c);
    }
    return out;
}

[[noreturn]] void failAt(const std::string& msg, const Ch& at) { throw ParseError(msg, at.line, at.col); }

[[noreturn]] void failAt(const std::string& msg, const Seg& seg, const Seg& whole) {
    if (!seg.empty()) failAt(msg, seg.front());
    if (!whole.empty()) failAt(msg, whole.back());
    throw ParseError(msg, 0, 0);
}

class Reader {
public:
    explicit Reader(Seg s) : s_(std::move(s)) {}

    bool atEnd() {
        skipSpace();
        return pos_ >= s_.size();
    }

    void skipSpace() {
        while (pos_ < s_.size() && isSpace(s_[pos_].c)) ++pos_;
    }

    const Ch& here() const {
        static const Ch end{'\0', 0, 0};
        if (pos_ < s_.size()) return s_[pos_];
        return s_.empty() ? end : s_.back();
    }

    // A name: letters, digits and -_.
    Seg name() {
        skipSpace();
        Seg out;
        while (pos_ < s_.size()) {
            char c = s_[pos_].c;
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.') {
                out.push_back(s_[pos_++]);
            } else {
                break;
            }
        }
        if (out.empty()) failAt("expected a name", here());
        return out;
    }

    void expect(char c) {
        skipSpace();
        if (pos_ >= s_.size() || s_[pos_].c != c) failAt(std::string("expected '") + c + "'", here());
        ++pos_;
    }

    Seg untilBrace() {
        Seg out;
        while (pos_ < s_.size() && s_[pos_].c != '}') out.push_back(s_[pos_++]);
        if (pos_ >= s_.size()) failAt("missing '}'", here());
        ++pos_;
        return out;
    }

    Seg restOfLine() {
        Seg out;
        while (pos_ < s_.size() && s_[pos_].c != '\n') out.push_back(s_[pos_++]);
        return out;
    }

private:
    Seg s_;
    size_t pos_ = 0;
};

int parseTurns(const Seg& seg, size_t& i, int n, bool uturn) {
    if (i >= seg.size()) failAt("expected a turn", seg.back());
    char c = seg[i].c;
    if (c == '0') {
        ++i;
        return 0;
    }
    if (c == '!') {
        if (!uturn) failAt("U-turn '!' is only allowed on double-edge grids", seg[i]);
        ++i;
        return n / 2;
    }
    if (c != '+' && c != '-') failAt("expected a turn", seg[i]);
    const Ch& start = seg[i];
    int t = 0;
    while (i < seg.size() && seg[i].c == c) {
        t += c == '+' ? 1 : -1;
        ++i;
    }
    if (2 * std::abs(t) > n) failAt("turn exceeds n/2 units", start);
    return t;
}

Word wordFromSeg(const Seg& seg, int n, bool uturn) {
    try {
        return parseWord(str(seg), n, uturn);
    } catch (const ParseError& e) {
        size_t off = static_cast<size_t>(e.column() - 1);
        std::string msg = e.what();
        auto p = msg.find(": ");
        if (p != std::string::npos) msg = msg.substr(p + 2);
        failAt(msg, off < seg.size() ? seg[off] : seg.back());
    }
}

struct RawCurve {
    std::string name;
    Seg gridName;
    std::vector<std::pair<Seg, Seg>> prods;  // letter, word
    SourceSpan span;
};

struct RawAxiom {
    std::string name;
    Seg gridName;
    Seg word;
    SourceSpan span;
};

GridSpec parseGridBody(const std::string& name, const Seg& body) {
    GridSpec g;
    g.name = name;
    bool haveTurn = false, haveLetters = false, haveTransitions = false;
    Seg transitionsSeg;
    for (const Seg& rawStmt : split(body, ';')) {
        Seg stmt = trim(rawStmt);
        if (stmt.empty()) continue;
        std::string s = str(stmt);
        if (s == "double") {
            g.doubleEdges = true;
            continue;
        }
        if (s == "generic") {
            g.generic = true;
            continue;
        }
        auto parts = split(stmt, '=');
        if (parts.size() != 2) failAt("expected 'key = value'", stmt.front());
        std::string key = str(trim(parts[0]));
        Seg value = trim(parts[1]);
        if (key == "turn") {
            std::string v = str(value);
            if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
                failAt("turn must be a positive integer", value, stmt);
            g.n = std::stoi(v);
            if (g.n < 3) failAt("turn must be at least 3", value.front());
            try {
                Point::zero(g.n);
            } catch (const Error& e) {
                failAt(e.what(), value.front());
            }
            haveTurn = true;
        } else if (key == "letters") {
            for (const Ch& c : value) {
                if (isSpace(c.c)) continue;
                if (!std::isalpha(static_cast<unsigned char>(c.c))) failAt("letters must be single letters", c);
                if (g.hasLetter(c.c)) failAt(std::string("duplicate letter '") + c.c + "'", c);
                g.letters.push_back(c.c);
            }
            haveLetters = true;
        } else if (key == "transitions") {
            transitionsSeg = value;
            haveTransitions = true;
        } else {
            failAt("unknown grid field '" + key + "'", stmt.front());
        }
    }
    if (!haveTurn) failAt("grid " + name + " lacks 'turn'", body, body);
    if (!haveLetters || g.letters.empty()) failAt("grid " + name + " lacks 'letters'", body, body);
    if (!haveTransitions) failAt("grid " + name + " lacks 'transitions'", body, body);
    for (const Seg& rawTr : split(transitionsSeg, ',')) {
        Seg tr;
        for (const Ch& c : rawTr)
            if (!isSpace(c.c)) tr.push_back(c);
        if (tr.empty()) failAt("empty transition", rawTr, transitionsSeg);
        size_t i = 0;
        Transition t;
        t.from = tr[i].c;
        if (!g.hasLetter(t.from)) failAt(std::string("unknown letter '") + t.from + "'", tr[i]);
        ++i;
        t.turn = parseTurns(tr, i, g.n, g.doubleEdges);
        if (i >= tr.size()) failAt("transition lacks a target letter", tr.back());
        t.to = tr[i].c;
        if (!g.hasLetter(t.to)) failAt(std::string("unknown letter '") + t.to + "'", tr[i]);
        if (i + 1 != tr.size()) failAt("unexpected text after transition", tr[i + 1]);
        g.transitions.push_back(t);
    }
    auto violations = g.generic ? std::vector<std::string>{} : checkGrid(g);
    if (!violations.empty()) failAt("grid " + name + ": " + violations.front(), transitionsSeg.front());
    return g;
}

} // namespace

const GridSpec* SpecDocument::findGrid(const std::string& name) const {
    for (const auto& it : items)
        if (auto g = std::get_if<GridSpec>(&it); g && g->name == name) return g;
    return nullptr;
}

const CurveSet* SpecDocument::findCurveSet(const std::string& name) const {
    for (const auto& it : items)
        if (auto c = std::get_if<CurveSet>(&it); c && c->name == name) return c;
    return nullptr;
}

const AxiomDef* SpecDocument::findAxiom(const std::string& name) const {
    for (const auto& it : items)
        if (auto a = std::get_if<AxiomDef>(&it); a && a->name == name) return a;
    return nullptr;
}

std::vector<const GridSpec*> SpecDocument::grids() const {
    std::vector<const GridSpec*> out;
    for (const auto& it : items)
        if (auto g = std::get_if<GridSpec>(&it)) out.push_back(g);
    return out;
}

std::vector<const CurveSet*> SpecDocument::curveSets() const {
    std::vector<const CurveSet*> out;
    for (const auto& it : items)
        if (auto c = std::get_if<CurveSet>(&it)) out.push_back(c);
    return out;
}

SpecDocument parseSpec(std::string_view text, const SpecDocument* scope) {
    Reader rd(clean(text));
    // items in source order; curve-sets and axioms are resolved after all grids are known
    std::vector<std::variant<GridSpec, RawCurve, RawAxiom>> raw;
    std::vector<SourceSpan> spans;
    std::set<std::string> names;
    while (!rd.atEnd()) {
        Ch kwAt = rd.here();
        std::string kw = str(rd.name());
        SourceSpan span{kwAt.line, kwAt.col};
        if (kw == "grid") {
            Seg nameSeg = rd.name();
            std::string name = str(nameSeg);
            if (!names.insert("grid:" + name).second) failAt("duplicate grid '" + name + "'", nameSeg.front());
            rd.expect('{');
            raw.emplace_back(parseGridBody(name, rd.untilBrace()));
        } else if (kw == "curveset") {
            RawCurve rc;
            Seg nameSeg = rd.name();
            rc.name = str(nameSeg);
            if (!names.insert("curveset:" + rc.name).second)
                failAt("duplicate curve-set '" + rc.name + "'", nameSeg.front());
            Seg on = rd.name();
            if (str(on) != "on") failAt("expected 'on'", on.front());
            rc.gridName = rd.name();
            rd.expect('{');
            Seg body = rd.untilBrace();
            for (const Seg& rawLine : split(body, '\n')) {
                Seg line = trim(rawLine);
                if (line.empty()) continue;
                std::string s = str(line);
                auto arrow = s.find("|-->");
                if (arrow == std::string::npos) failAt("expected 'X |--> word'", line.front());
                Seg letter = trim(Seg(line.begin(), line.begin() + static_cast<long>(arrow)));
                Seg word = trim(Seg(line.begin() + static_cast<long>(arrow + 4), line.end()));
                if (letter.size() != 1) failAt("a production starts with a single letter", line.front());
                if (word.empty()) failAt("empty production", line.back());
                rc.prods.emplace_back(letter, word);
            }
            rc.span = span;
            raw.emplace_back(std::move(rc));
        } else if (kw == "axiom") {
            RawAxiom ra;
            ra.name = str(rd.name());
            Seg on = rd.name();
            if (str(on) != "on") failAt("expected 'on'", on.front());
            ra.gridName = rd.name();
            rd.expect('=');
            ra.word = trim(rd.restOfLine());
            if (ra.word.empty()) failAt("empty axiom", rd.here());
            ra.span = span;
            raw.emplace_back(std::move(ra));
        } else {
            failAt("expected 'grid', 'curveset' or 'axiom'", kwAt);
        }
        spans.push_back(span);
    }

    std::map<std::string, GridSpec> local;
    for (const auto& r : raw)
        if (auto g = std::get_if<GridSpec>(&r)) local[g->name] = *g;
    auto lookup = [&](const Seg& nameSeg) -> const GridSpec& {
        std::string nm = str(nameSeg);
        auto it = local.find(nm);
        if (it != local.end()) return it->second;
        if (scope)
            if (const GridSpec* g = scope->findGrid(nm)) return *g;
        failAt("unknown grid '" + nm + "'", nameSeg.front());
    };

    SpecDocument doc;
    doc.spans = spans;
    for (auto& r : raw) {
        if (auto g = std::get_if<GridSpec>(&r)) {
            doc.items.emplace_back(*g);
        } else if (auto rc = std::get_if<RawCurve>(&r)) {
            CurveSet cs;
            cs.name = rc->name;
            cs.grid = lookup(rc->gridName);
            for (const auto& [letterSeg, wordSeg] : rc->prods) {
                char c = letterSeg.front().c;
                if (!cs.grid.hasLetter(c)) failAt(std::string("unknown letter '") + c + "'", letterSeg.front());
                if (cs.productions.count(c)) failAt(std::string("duplicate production for '") + c + "'", letterSeg.front());
                Word w = wordFromSeg(wordSeg, cs.grid.n, cs.grid.doubleEdges);
                for (const Ch& ch : wordSeg)
                    if (std::isalpha(static_cast<unsigned char>(ch.c)) && !cs.grid.hasLetter(ch.c))
                        failAt(std::string("unknown letter '") + ch.c + "'", ch);
                try {
                    resolveOmittedTurns(w, cs.grid);
                } catch (const Error& e) {
                    failAt(e.what(), wordSeg.front());
                }
                cs.productions[c] = std::move(w);
            }
            for (char c : cs.grid.letters)
                if (!cs.productions.count(c))
                    failAt(std::string("curve-set ") + cs.name + " has no production for '" + c + "'",
                           Ch{' ', rc->span.line, rc->span.column});
            doc.items.emplace_back(std::move(cs));
        } else if (auto ra = std::get_if<RawAxiom>(&r)) {
            AxiomDef a;
            a.name = ra->name;
            const GridSpec& g = lookup(ra->gridName);
            a.grid = g.name;
            a.n = g.n;
            a.uturn = g.doubleEdges;
            try {
                a.word = parseAxiom(str(ra->word), g);
            } catch (const ParseError& e) {
                size_t off = static_cast<size_t>(e.column() - 1);
                std::string msg = e.what();
                auto p = msg.find(": ");
                if (p != std::string::npos) msg = msg.substr(p + 2);
                failAt(msg, off < ra->word.size() ? ra->word[off] : ra->word.back());
            } catch (const Error& e) {
                failAt(e.what(), ra->word.front());
            }
            doc.items.emplace_back(std::move(a));
        }
    }
    return doc;
}

Word parseAxiom(std::string_view text, const GridSpec& grid) {
    std::string s;
    for (char c : text)
        if (!isSpace(c)) s.push_back(c);
    Word w;
    if (!s.empty() && s.front() == '[') {
        auto close = s.find(']');
        if (close == std::string::npos) throw ParseError("missing ']'", 1, static_cast<int>(s.size()));
        int k = 1;
        if (close + 1 < s.size()) {
            if (s[close + 1] != '^' || close + 2 >= s.size())
                throw ParseError("expected '^' and an exponent", 1, static_cast<int>(close) + 2);
            std::string e = s.substr(close + 2);
            if (e.find_first_not_of("0123456789") != std::string::npos)
                throw ParseError("exponent must be a positive integer", 1, static_cast<int>(close) + 3);
            k = std::stoi(e);
            if (k < 1) throw ParseError("exponent must be positive", 1, static_cast<int>(close) + 3);
        }
        Word period = parseWord(s.substr(1, close - 1), grid.n, grid.doubleEdges);
        for (char c : period.letters)
            if (!grid.hasLetter(c)) throw Error(std::string("unknown letter '") + c + "'");
        resolveOmittedTurns(period, grid);
        for (int r = 0; r < k; ++r) w.append(period);
    } else {
        w = parseWord(s, grid.n, grid.doubleEdges);
        for (char c : w.letters)
            if (!grid.hasLetter(c)) throw Error(std::string("unknown letter '") + c + "'");
        resolveOmittedTurns(w, grid);
    }
    return w;
}

std::string printGrid(const GridSpec& g) {
    std::ostringstream os;
    os << "grid " << g.name << " {\n  turn = " << g.n << "; letters =";
    for (char c : g.letters) os << ' ' << c;
    os << ';';
    if (g.doubleEdges) os << " double;";
    if (g.generic) os << " generic;";
    os << "\n  transitions = ";
    for (size_t i = 0; i < g.transitions.size(); ++i) os << (i ? ", " : "") << g.transitionString(g.transitions[i]);
    os << "\n}\n";
    return os.str();
}

std::string printCurveSet(const CurveSet& cs) {
    std::ostringstream os;
    os << "curveset " << cs.name << " on " << cs.grid.name << " {\n";
    for (char c : cs.grid.letters) {
        auto it = cs.productions.find(c);
        if (it == cs.productions.end()) continue;
        os << "  " << c << " |--> " << formatWord(it->second, cs.grid.n, cs.grid.doubleEdges) << '\n';
    }
    os << "}\n";
    return os.str();
}

std::string printSpec(const SpecDocument& doc) {
    std::string out;
    for (const auto& it : doc.items) {
        if (!out.empty()) out += '\n';
        if (auto g = std::get_if<GridSpec>(&it)) {
            out += printGrid(*g);
        } else if (auto cs = std::get_if<CurveSet>(&it)) {
            out += printCurveSet(*cs);
        } else if (auto a = std::get_if<AxiomDef>(&it)) {
            out += "axiom " + a->name + " on " + a->grid + " = " + formatWord(a->word, a->n, a->uturn) + "\n";
        }
    }
    return out;
}

namespace {

bool sameGrid(const GridSpec& a, const GridSpec& b) {
    if (a.name != b.name || a.n != b.n || a.letters != b.letters || a.doubleEdges != b.doubleEdges || a.generic != b.generic) return false;
    if (a.transitions.size() != b.transitions.size()) return false;
    for (size_t i = 0; i < a.transitions.size(); ++i) {
        const auto &x = a.transitions[i], &y = b.transitions[i];
        if (x.from != y.from || x.to != y.to || normTurn(x.turn, a.n) != normTurn(y.turn, a.n)) return false;
    }
    return true;
}

bool sameWord(Word a, Word b, int n) {
    a.normalize(n);
    b.normalize(n);
    return a == b;
}

} // namespace

bool sameDocument(const SpecDocument& a, const SpecDocument& b) {
    if (a.items.size() != b.items.size()) return false;
    for (size_t i = 0; i < a.items.size(); ++i) {
        const auto &x = a.items[i], &y = b.items[i];
        if (x.index() != y.index()) return false;
        if (auto g = std::get_if<GridSpec>(&x)) {
            if (!sameGrid(*g, std::get<GridSpec>(y))) return false;
        } else if (auto c = std::get_if<CurveSet>(&x)) {
            const auto& d = std::get<CurveSet>(y);
            if (c->name != d.name || !sameGrid(c->grid, d.grid)) return false;
            if (c->productions.size() != d.productions.size()) return false;
            for (const auto& [k, w] : c->productions) {
                auto it = d.productions.find(k);
                if (it == d.productions.end() || !sameWord(w, it->second, c->grid.n)) return false;
            }
        } else {
            const auto &p = std::get<AxiomDef>(x), &q = std::get<AxiomDef>(y);
            if (p.name != q.name || p.grid != q.grid || !(p.word == q.word)) return false;
        }
    }
    return true;
}

} // namespace gridcurve
