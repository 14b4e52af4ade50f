#include "fixtures.hpp"

#include <doctest.h>

using namespace lpeq;

TEST_CASE("parse and render a disjunctive program") {
    auto u = fx::abc();
    const Program p = fx::prog("a | b :- c, not d.\n% comment\n:- a, b.\nc.\n", u);
    REQUIRE(p.size() == 3);
    const Rule& r = p.rules()[0];
    CHECK(r.head == fx::set(u, "ab"));
    CHECK(r.pos == fx::set(u, "c"));
    CHECK(r.neg == fx::set(u, "d"));
    CHECK(render(p) == ":- a, b.\na | b :- c, not d.\nc.\n");
}

TEST_CASE("rendering round-trips") {
    const char* text = "a :- not b.\nb :- not a.\nc :- a, b.\n:- c.\n";
    auto u = fx::abc();
    const Program p = fx::prog(text, u);
    const Program q = fx::prog(render(p), u);
    CHECK(render(q) == render(p));
    CHECK(p.size() == q.size());
}

TEST_CASE("falsum and empty bodies") {
    auto u = fx::abc();
    const Program p = fx::prog(":- .\na :- .\n", u);
    CHECK(p.contains(falsum()));
    CHECK(p.contains(fact(u->intern("a"))));
    CHECK(render_rule(falsum(), u.get()) == ":- .");
}

TEST_CASE("duplicates collapse and equality ignores order") {
    auto u = fx::abc();
    const Program p = fx::prog("a. b. a.", u);
    const Program q = fx::prog("b. a.", u);
    CHECK(p.size() == 2);
    CHECK(p == q);
}

TEST_CASE("parse errors carry line and column") {
    try {
        parse_program("a.\nb :- c d.\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 8);
    }
    CHECK_THROWS_AS(parse_program("a :- not."), ParseError);
    CHECK_THROWS_AS(parse_program("A."), ParseError);
    CHECK_THROWS_AS(parse_program("a"), ParseError);
    CHECK_THROWS_AS(parse_program("a :- b ; c."), ParseError);
    CHECK_THROWS_AS(parse_program("not."), ParseError);
}

TEST_CASE("universe capacity is reported as a parse error") {
    std::string text;
    for (std::size_t i = 0; i <= kMaxUniverseAtoms; ++i) text += "x" + std::to_string(i) + ".\n";
    CHECK_THROWS_AS(parse_program(text), ParseError);
}

TEST_CASE("atom name validation and fresh names") {
    CHECK(is_valid_atom_name("a_1B"));
    CHECK_FALSE(is_valid_atom_name("not"));
    CHECK_FALSE(is_valid_atom_name("1a"));
    CHECK_FALSE(is_valid_atom_name(""));
    Universe u;
    u.intern("w");
    u.intern("w1");
    CHECK(u.fresh_name() == "w2");
}

TEST_CASE("var and union") {
    auto u = fx::abc(4);
    const Program p = fx::prog("a :- b.", u);
    const Program q = fx::prog("c :- not d. a :- b.", u);
    CHECK(var_of(p) == fx::set(u, "ab"));
    const Program pq = program_union(p, q);
    CHECK(pq.size() == 2);
    CHECK(var_of(pq) == fx::set(u, "abcd"));
}

TEST_CASE("set and pair rendering") {
    auto u = fx::abc();
    CHECK(render_set({}, u.get()) == "{}");
    CHECK(render_set(fx::set(u, "ca"), u.get()) == "{a,c}");
    CHECK(render_pair(fx::set(u, "a"), fx::set(u, "ab"), u.get()) == "({a},{a,b})");
}

TEST_CASE("subset enumeration") {
    const AtomSet s = AtomSet::of({1, 3, 4});
    std::vector<AtomSet> seen;
    for_each_subset(s, [&](AtomSet x) { seen.push_back(x); });
    CHECK(seen.size() == 8);
    CHECK(seen.front().empty());
    CHECK(seen.back() == s);
    const auto by_size = subsets_by_size(s);
    for (std::size_t i = 1; i < by_size.size(); ++i) CHECK(by_size[i - 1].size() <= by_size[i].size());
}
