#include "lpeq/syntax.hpp"

#include "lpeq/errors.hpp"

#include <algorithm>
#include <cctype>

namespace lpeq {

bool is_valid_atom_name(std::string_view token) {
    if (token.empty() || !(token[0] >= 'a' && token[0] <= 'z')) return false;
    for (char c : token) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    }
    return token != "not";
}

AtomId Universe::intern(std::string_view name) {
    if (auto id = find(name)) return *id;
    if (!is_valid_atom_name(name)) throw PreconditionError("invalid atom name '" + std::string(name) + "'");
    if (names_.size() >= kMaxUniverseAtoms) {
        throw CapacityError("universe is limited to " + std::to_string(kMaxUniverseAtoms) + " atoms");
    }
    auto id = static_cast<AtomId>(names_.size());
    names_.emplace_back(name);
    index_.emplace(names_.back(), id);
    return id;
}

std::optional<AtomId> Universe::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::string Universe::fresh_name(std::string_view stem) const {
    std::string candidate(stem);
    for (std::size_t i = 1; find(candidate); ++i) candidate = std::string(stem) + std::to_string(i);
    return candidate;
}

Program::Program(std::vector<Rule> rules, UniversePtr universe) : universe_(std::move(universe)) {
    rules_.reserve(rules.size());
    for (const Rule& r : rules) add(r);
}

bool Program::add(const Rule& r) {
    if (contains(r)) return false;
    rules_.push_back(r);
    return true;
}

bool Program::contains(const Rule& r) const { return std::find(rules_.begin(), rules_.end(), r) != rules_.end(); }

std::vector<Rule> Program::sorted_rules() const {
    std::vector<Rule> out = rules_;
    std::sort(out.begin(), out.end());
    return out;
}

bool operator==(const Program& a, const Program& b) {
    return a.size() == b.size() && a.sorted_rules() == b.sorted_rules();
}

AtomSet var_of(std::span<const Rule> rules) {
    AtomSet v;
    for (const Rule& r : rules) v |= r.atoms();
    return v;
}

AtomSet var_of(const Program& p) { return var_of(p.span()); }

Program program_union(const Program& p, const Program& q) {
    Program out(p.universe() ? p.universe() : q.universe());
    for (const Rule& r : p.rules()) out.add(r);
    for (const Rule& r : q.rules()) out.add(r);
    return out;
}

namespace {

enum class Tok { ident, bar, arrow, comma, dot, end };

struct Token {
    Tok kind;
    std::string_view text;
    std::size_t line;
    std::size_t column;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_blank();
        const std::size_t line = line_, col = col_;
        if (pos_ >= text_.size()) return {Tok::end, {}, line, col};
        const char c = text_[pos_];
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                advance();
            }
            return {Tok::ident, text_.substr(start, pos_ - start), line, col};
        }
        switch (c) {
            case '|': advance(); return {Tok::bar, "|", line, col};
            case ',': advance(); return {Tok::comma, ",", line, col};
            case '.': advance(); return {Tok::dot, ".", line, col};
            case ':':
                if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
                    advance();
                    advance();
                    return {Tok::arrow, ":-", line, col};
                }
                break;
            default: break;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_blank() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

class Parser {
public:
    Parser(std::string_view text, Universe& u) : lex_(text), universe_(u) { shift(); }

    void parse(Program& out) {
        while (cur_.kind != Tok::end) out.add(rule());
    }

private:
    void shift() { cur_ = lex_.next(); }

    [[noreturn]] void fail(const std::string& what) const {
        const std::string found = cur_.kind == Tok::end ? "end of input" : "'" + std::string(cur_.text) + "'";
        throw ParseError(what + ", found " + found, cur_.line, cur_.column);
    }

    AtomId atom() {
        if (cur_.kind != Tok::ident) fail("expected atom");
        if (!is_valid_atom_name(cur_.text)) {
            throw ParseError("invalid atom '" + std::string(cur_.text) + "'", cur_.line, cur_.column);
        }
        AtomId id = 0;
        try {
            id = universe_.intern(cur_.text);
        } catch (const CapacityError& e) {
            throw ParseError(e.what(), cur_.line, cur_.column);
        }
        shift();
        return id;
    }

    Rule rule() {
        Rule r;
        if (cur_.kind == Tok::ident) {
            r.head.insert(atom());
            while (cur_.kind == Tok::bar) {
                shift();
                r.head.insert(atom());
            }
        } else if (cur_.kind != Tok::arrow) {
            fail("expected rule");
        }
        if (cur_.kind == Tok::arrow) {
            shift();
            if (cur_.kind != Tok::dot) {
                literal(r);
                while (cur_.kind == Tok::comma) {
                    shift();
                    literal(r);
                }
            }
        }
        if (cur_.kind != Tok::dot) fail("expected '.'");
        shift();
        return r;
    }

    void literal(Rule& r) {
        if (cur_.kind == Tok::ident && cur_.text == "not") {
            shift();
            r.neg.insert(atom());
        } else {
            r.pos.insert(atom());
        }
    }

    Lexer lex_;
    Universe& universe_;
    Token cur_{Tok::end, {}, 1, 1};
};

void append_atoms(std::string& out, AtomSet s, const Universe* u, std::string_view sep, std::string_view prefix = {}) {
    bool first = true;
    s.for_each([&](AtomId id) {
        if (!first) out += sep;
        first = false;
        out += prefix;
        out += u != nullptr && id < u->size() ? u->name(id) : "x" + std::to_string(id);
    });
}

}  // namespace

Program parse_program(std::string_view text, UniversePtr universe) {
    if (!universe) universe = std::make_shared<Universe>();
    Program p(universe);
    Parser(text, *universe).parse(p);
    return p;
}

std::string render_rule(const Rule& r, const Universe* u) {
    std::string out;
    append_atoms(out, r.head, u, " | ");
    if (!r.pos.empty() || !r.neg.empty() || r.head.empty()) {
        out += r.head.empty() ? ":-" : " :-";
        if (!r.pos.empty() || !r.neg.empty()) out += ' ';
        append_atoms(out, r.pos, u, ", ");
        if (!r.pos.empty() && !r.neg.empty()) out += ", ";
        append_atoms(out, r.neg, u, ", ", "not ");
        if (r.pos.empty() && r.neg.empty()) out += ' ';
    }
    out += '.';
    return out;
}

std::string render(const Program& p) {
    std::string out;
    for (const Rule& r : p.sorted_rules()) {
        out += render_rule(r, p.universe().get());
        out += '\n';
    }
    return out;
}

std::string render_set(AtomSet s, const Universe* u) {
    std::string out = "{";
    append_atoms(out, s, u, ",");
    out += '}';
    return out;
}

std::string render_pair(AtomSet x, AtomSet y, const Universe* u) {
    return "(" + render_set(x, u) + "," + render_set(y, u) + ")";
}

std::vector<std::string> atom_names(AtomSet s, const Universe* u) {
    std::vector<std::string> out;
    s.for_each([&](AtomId id) { out.push_back(u != nullptr && id < u->size() ? u->name(id) : "x" + std::to_string(id)); });
    return out;
}

std::vector<AtomSet> subsets_by_size(AtomSet base) {
    std::vector<AtomSet> out;
    for_each_subset(base, [&](AtomSet s) { out.push_back(s); });
    std::stable_sort(out.begin(), out.end(), [](AtomSet a, AtomSet b) { return a.size() < b.size(); });
    return out;
}

}  // namespace lpeq
