#include "fixtures.hpp"
#include "reference.hpp"

#include <doctest.h>

using namespace lpeq;

namespace {

std::vector<SEPair> pairs(const lpeq::UniversePtr&, std::initializer_list<SEPair> l) {
    std::vector<SEPair> v(l);
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<ref::Pair> raw(const std::vector<SEPair>& v) {
    std::vector<ref::Pair> out;
    for (const auto& s : v) out.emplace_back(s.x.bits(), s.y.bits());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("SE-models of the disjunction and its shift") {
    auto u = fx::abc();
    const Program p = fx::prog("a | b.", u);
    const Program q = fx::prog("a :- not b. b :- not a.", u);
    const auto ab = fx::set(u, "ab");
    CHECK(se_models(p, ab) == pairs(u, {fx::se(u, "a", "a"), fx::se(u, "b", "b"), fx::se(u, "a", "ab"),
                                        fx::se(u, "b", "ab"), fx::se(u, "ab", "ab")}));
    auto sq = se_models(p, ab);
    sq.push_back(fx::se(u, "", "ab"));
    std::sort(sq.begin(), sq.end());
    CHECK(se_models(q, ab) == sq);
    CHECK(ue_models(q, ab) == se_models(p, ab));
}

TEST_CASE("SE- and UE-models agree with the reference") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const Program p = random_program({1 + seed % 4, 1 + seed % 5, 0, 0, seed});
        const AtomSet over = var_of(p);
        CHECK(raw(se_models(p, over)) == ref::se_models(ref::from(p), over.bits()));
        CHECK(raw(ue_models(p, over)) == ref::ue_models(ref::from(p), over.bits()));
        CHECK(answer_sets_via_se(p) == answer_sets(p));
    }
}

TEST_CASE("maximal filter keeps totals and maximal non-totals") {
    auto u = fx::abc();
    const std::vector<SEPair> in = pairs(u, {fx::se(u, "", "abc"), fx::se(u, "a", "abc"), fx::se(u, "b", "abc"),
                                             fx::se(u, "ab", "abc"), fx::se(u, "abc", "abc")});
    CHECK(maximal_filter(in) == pairs(u, {fx::se(u, "ab", "abc"), fx::se(u, "abc", "abc")}));
}

TEST_CASE("ordinary, strong and uniform deciders on the introductory pairs") {
    auto u = fx::abc();
    const Program p1 = fx::prog("a | b.", u);
    const Program q1 = fx::prog("a | b. a :- not b.", u);
    const Program q2 = fx::prog("a :- not b. b :- not a.", u);
    const Program p3 = fx::prog("a | b. :- a, b.", u);
    const Program q3 = fx::prog("a :- not b. b :- not a. :- a, b.", u);
    CHECK(decide_strong(p1, q1).equivalent);
    CHECK_FALSE(decide_strong(p1, q2).equivalent);
    CHECK(decide_uniform(p1, q2).equivalent);
    CHECK(decide_strong(p3, q3).equivalent);
    CHECK(decide_ordinary(p1, q2).equivalent);
    const Verdict v = decide_ordinary(fx::prog("a.", u), fx::prog("b.", u));
    REQUIRE(v.witness);
    CHECK(v.witness->context.empty());
    CHECK(verify_witness(fx::prog("a.", u), fx::prog("b.", u), *v.witness));
}

TEST_CASE("uniform decider cross-check against the extension characterization") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto [p, q] = random_pair({1 + seed % 4, 1 + seed % 4, 0, 0, seed});
        const bool u = decide_uniform(p, q, {true, true, false}).equivalent;
        CHECK(u == uniform_by_extension(p, q));
        const AtomSet over = var_of(p) | var_of(q);
        CHECK(u == ref::rel_uniform(ref::from(p), ref::from(q), over.bits()));
    }
}

TEST_CASE("consequence relations") {
    auto u = fx::abc();
    const Program loop = fx::prog("a :- not a.", u);
    const Rule a = fx::prog("a.", u).rules()[0];
    CHECK(cautious_consequence(loop, a));
    CHECK_FALSE(ue_consequence(loop, a));
    const Program p = fx::prog("a | b.", u);
    const Rule ab = fx::prog("a :- not b.", u).rules()[0];
    CHECK(ue_consequence(p, ab));
    CHECK_FALSE(se_consequence(fx::prog("a :- not b. b :- not a.", u), fx::prog("a | b.", u).rules()[0]));
    CHECK(classical_consequence(p, ab));
}

TEST_CASE("UE-class programs") {
    auto u = fx::abc();
    CHECK(ue_class_check(fx::prog("a | b.", u)));
    CHECK_FALSE(ue_class_check(fx::prog("a :- not a.", u)));
}
