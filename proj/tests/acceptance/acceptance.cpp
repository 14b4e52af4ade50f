#include "fixtures.hpp"
#include "reference.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>

using namespace lpeq;

namespace {

class Criterion {
public:
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (!ok && notes_.size() < 12) notes_.push_back(what);
        failed_ = failed_ || !ok;
    }
    void count(bool ok, const std::string& what) {
        ++checks_;
        if (!ok) {
            ++mismatches_;
            if (notes_.size() < 12) notes_.push_back(what);
            failed_ = true;
        }
    }
    bool failed() const { return failed_; }
    std::size_t checks() const { return checks_; }
    std::size_t mismatches() const { return mismatches_; }
    const std::vector<std::string>& notes() const { return notes_; }

private:
    bool failed_ = false;
    std::size_t checks_ = 0;
    std::size_t mismatches_ = 0;
    std::vector<std::string> notes_;
};

std::string str(const Program& p) {
    std::string s = render(p);
    for (char& c : s) {
        if (c == '\n') c = ' ';
    }
    return "{ " + s + "}";
}

std::string str(AtomSet s, const UniversePtr& u) { return render_set(s, u.get()); }

const DecideOptions kGeneric{false, false, false};
const DecideOptions kPlain{true, false, false};

std::vector<std::pair<Program, Program>> family_pairs(std::size_t atoms) {
    const auto u = letter_universe(atoms);
    const auto progs = program_family(AtomSet::first(atoms), family_rule_bound(atoms, true), u);
    std::vector<std::pair<Program, Program>> out;
    for (std::size_t i = 0; i < progs.size(); ++i) {
        for (std::size_t j = i; j < progs.size(); ++j) out.emplace_back(progs[i], progs[j]);
    }
    return out;
}

std::vector<std::pair<Program, Program>> random_pairs(std::size_t n, std::size_t max_atoms, unsigned required,
                                                      std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Program, Program>> out;
    while (out.size() < n) {
        GeneratorConfig cfg;
        cfg.atom_count = std::uniform_int_distribution<std::size_t>(required & kDisjunctive ? 2 : 1, max_atoms)(rng);
        cfg.rule_count = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
        cfg.required = required;
        cfg.seed = rng();
        out.push_back(random_pair(cfg));
    }
    return out;
}

std::vector<AtomSet> alphabets_of(AtomSet over, std::size_t max_size) {
    std::vector<AtomSet> out;
    for_each_subset(over, [&](AtomSet a) {
        if (a.size() <= max_size) out.push_back(a);
    });
    return out;
}

// 1 ------------------------------------------------------------------------

void golden_examples(Criterion& c) {
    const auto start = std::chrono::steady_clock::now();
    auto u = fx::abc();
    auto load = [&](const char* name) {
        std::ifstream in(fx::data_path(name));
        std::stringstream s;
        s << in.rdbuf();
        return parse_program(s.str(), u);
    };
    const Program p1 = load("p1.lp"), q1 = load("q1.lp");
    const Program p2 = load("p2.lp"), q2 = load("q2.lp");
    const Program p4 = load("p4.lp"), q4 = load("q4.lp");
    const Program p5 = load("p5.lp"), q5 = load("q5.lp");

    c.expect(decide_strong(p1, q1).equivalent, "(P1,Q1) strongly equivalent");

    c.expect(decide_uniform(p2, q2).equivalent, "(P2,Q2) uniformly equivalent");
    const Verdict s2 = decide_strong(p2, q2);
    c.expect(!s2.equivalent, "(P2,Q2) not strongly equivalent");
    if (s2.witness) {
        c.expect(s2.witness->context == fx::prog("a :- b. b :- a.", u),
                 "(P2,Q2) witness R = {a :- b. b :- a.}, got " + str(s2.witness->context));
        c.expect(s2.witness->distinguishing == fx::set(u, "ab"),
                 "(P2,Q2) distinguishing {a,b}, got " + str(s2.witness->distinguishing, u));
        c.expect(verify_witness(p2, q2, *s2.witness), "(P2,Q2) witness verifies");
    } else {
        c.expect(false, "(P2,Q2) strong witness present");
    }

    c.expect(decide_uniform(p4, q4).equivalent, "(P4,Q4) uniformly equivalent");
    c.expect(!decide_strong(p4, q4).equivalent, "(P4,Q4) not strongly equivalent");

    for (std::string_view a : {"", "a", "b", "ab"}) {
        const bool got = decide_rel_uniform(p5, q5, fx::set(u, a)).equivalent;
        const bool oracle = ref::rel_uniform(ref::from(p5), ref::from(q5), fx::set(u, a).bits());
        c.expect(got, "(P5,Q5) rel-uniform equivalent for A = " + str(fx::set(u, a), u) + ": decider " +
                          (got ? "yes" : "no") + ", fact brute force " + (oracle ? "yes" : "no"));
    }
    for (std::string_view a : {"ab", "abc"}) {
        c.expect(!decide_rel_strong(p5, q5, fx::set(u, a)).equivalent,
                 "(P5,Q5) not rel-strong equivalent for A = " + str(fx::set(u, a), u));
    }
    const Verdict u5 = decide_uniform(p5, q5);
    c.expect(!u5.equivalent, "(P5,Q5) not uniformly equivalent");
    if (u5.witness) {
        c.expect(u5.witness->context == fx::prog("c.", u), "(P5,Q5) uniform witness F = {c}, got " + str(u5.witness->context));
        std::string sm;
        for (AtomSet s : answer_sets(program_union(p5, u5.witness->context))) sm += str(s, u);
        c.expect(u5.witness->distinguishing == fx::set(u, "abc"),
                 "(P5,Q5) distinguishing {a,b,c}, got " + str(u5.witness->distinguishing, u) +
                     "; answer sets of P5 + {c}: " + sm);
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(secs < 1.0, "runtime " + std::to_string(secs) + "s < 1s");
}

// 2 ------------------------------------------------------------------------

void table_one(Criterion& c) {
    const auto start = std::chrono::steady_clock::now();
    auto u = fx::abc();
    const Program q = fx::prog("a | b. a :- c. b :- c. :- not c. c :- a, b.", u);
    const Program q2 = fx::prog("a :- not b. b :- not a. a :- c. b :- c. :- not c. c :- a, b.", u);
    using Row = std::vector<std::pair<const char*, const char*>>;
    const std::map<std::string, std::pair<Row, Row>> table = {
        {"abc", {{{"abc", "abc"}, {"a", "abc"}, {"b", "abc"}}, {{"abc", "abc"}, {"a", "abc"}, {"b", "abc"}, {"", "abc"}}}},
        {"ab", {{{"abc", "abc"}, {"a", "abc"}, {"b", "abc"}}, {{"abc", "abc"}, {"a", "abc"}, {"b", "abc"}, {"", "abc"}}}},
        {"ac", {{{"abc", "abc"}, {"a", "abc"}, {"", "abc"}}, {{"abc", "abc"}, {"a", "abc"}, {"", "abc"}}}},
        {"bc", {{{"abc", "abc"}, {"", "abc"}, {"b", "abc"}}, {{"abc", "abc"}, {"b", "abc"}, {"", "abc"}}}},
        {"a", {{}, {}}},
        {"b", {{}, {}}},
        {"c", {{{"abc", "abc"}, {"", "abc"}}, {{"abc", "abc"}, {"", "abc"}}}},
        {"", {{}, {}}},
    };
    const AtomSet v = fx::set(u, "abc");
    for (const auto& [a, rows] : table) {
        const AtomSet alpha = fx::set(u, a);
        auto expected = [&](const Row& row) {
            std::vector<ASEPair> e;
            for (auto [x, y] : row) e.push_back({fx::set(u, x), fx::set(u, y), alpha});
            std::sort(e.begin(), e.end());
            return e;
        };
        c.expect(ase_models(q, alpha, v) == expected(rows.first), "Q row A = " + str(alpha, u));
        c.expect(ase_models(q2, alpha, v) == expected(rows.second), "Q' row A = " + str(alpha, u));
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(secs < 1.0, "runtime " + std::to_string(secs) + "s < 1s");
}

// 3 ------------------------------------------------------------------------

void listings(Criterion& c) {
    auto u = fx::abc();
    auto pairs = [&](std::vector<std::pair<std::string, std::string>> l) {
        std::vector<SEPair> v;
        for (const auto& [x, y] : l) v.push_back(fx::se(u, x, y));
        std::sort(v.begin(), v.end());
        return v;
    };
    const AtomSet ab = fx::set(u, "ab"), abc = fx::set(u, "abc");
    const Program p1 = fx::prog("a | b.", u);
    const Program q2 = fx::prog("a :- not b. b :- not a.", u);
    const Program p4 = fx::prog("a :- not b. a :- b.", u);
    c.expect(se_models(p1, ab) == pairs({{"a", "a"}, {"b", "b"}, {"a", "ab"}, {"b", "ab"}, {"ab", "ab"}}), "SE(P1)");
    c.expect(se_models(q2, ab) == pairs({{"", "ab"}, {"a", "a"}, {"b", "b"}, {"a", "ab"}, {"b", "ab"}, {"ab", "ab"}}),
             "SE(Q2)");
    c.expect(ue_models(q2, ab) == pairs({{"a", "a"}, {"b", "b"}, {"a", "ab"}, {"b", "ab"}, {"ab", "ab"}}), "UE(Q2)");
    std::vector<std::pair<std::string, std::string>> ue4;
    for (std::string y : {"a", "ab", "ac", "abc"}) {
        std::set<std::string> xs{y};
        for (char drop : {'b', 'c'}) {
            std::string x = y;
            x.erase(std::remove(x.begin(), x.end(), drop), x.end());
            xs.insert(x);
        }
        for (const auto& x : xs) ue4.emplace_back(x, y);
    }
    c.expect(ue_models(p4, abc) == pairs(ue4), "UE(P4) over {a,b,c}");
    auto se4 = pairs({{"", "ab"}, {"", "abc"}, {"c", "abc"}});
    for (std::string y : {"a", "ab", "ac", "abc"}) {
        for_each_subset(fx::set(u, y), [&](AtomSet x) {
            if (x.contains(u->intern("a"))) se4.push_back({x, fx::set(u, y)});
        });
    }
    std::sort(se4.begin(), se4.end());
    c.expect(se_models(p4, abc) == se4, "SE(P4) over {a,b,c}");
}

// 4, 5 ----------------------------------------------------------------------

std::string describe_case(const Program& p, const Program& q, AtomSet a) {
    return str(p) + " vs " + str(q) + " A=" + render_set(a, p.universe().get());
}

void uniform_oracle(Criterion& c) {
    const auto start = std::chrono::steady_clock::now();
    auto run = [&](const Program& p, const Program& q, const std::vector<AtomSet>& alphabets) {
        const auto rp = ref::from(p), rq = ref::from(q);
        const AtomSet over = var_of(p) | var_of(q);
        c.count(decide_uniform(p, q, kPlain).equivalent == ref::rel_uniform(rp, rq, over.bits()),
                "uniform " + describe_case(p, q, over));
        for (AtomSet a : alphabets) {
            c.count(decide_rel_uniform(p, q, a, kPlain).equivalent == ref::rel_uniform(rp, rq, a.bits()),
                    "rel-uniform " + describe_case(p, q, a));
        }
    };
    for (const auto& [p, q] : family_pairs(2)) run(p, q, alphabets_of(AtomSet::first(2), 2));
    std::mt19937_64 rng(4004);
    for (const auto& [p, q] : random_pairs(1000, 5, 0, 44)) {
        const AtomSet over = var_of(p) | var_of(q);
        run(p, q, {random_alphabet(over, 5, rng), {}, over});
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(secs < 300.0, "runtime " + std::to_string(secs) + "s < 300s");
}

void strong_oracle(Criterion& c) {
    const auto start = std::chrono::steady_clock::now();
    auto run = [&](const Program& p, const Program& q, AtomSet a) {
        const bool d = decide_rel_strong(p, q, a, kPlain).equivalent;
        c.count(d == ref::rel_strong_unary(ref::from(p), ref::from(q), a.bits()),
                "rel-strong vs unary contexts " + describe_case(p, q, a));
        c.count(d == equivalent_under_programs(p, q, a, 3), "rel-strong vs 3-rule contexts " + describe_case(p, q, a));
    };
    for (const auto& [p, q] : family_pairs(2)) {
        for (AtomSet a : alphabets_of(AtomSet::first(2), 2)) run(p, q, a);
    }
    std::mt19937_64 rng(5005);
    for (const auto& [p, q] : random_pairs(1000, 5, 0, 55)) {
        const AtomSet over = var_of(p) | var_of(q);
        run(p, q, random_alphabet(over, 2, rng));
        run(p, q, {});
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(secs < 600.0, "runtime " + std::to_string(secs) + "s < 600s");
}

// 6 ------------------------------------------------------------------------

void positive_collapse(Criterion& c) {
    std::mt19937_64 rng(6006);
    for (const auto& [p, q] : random_pairs(500, 5, kPositive, 66)) {
        const AtomSet over = var_of(p) | var_of(q);
        const AtomSet a = random_alphabet(over, 5, rng);
        const bool s = decide_rel_strong(p, q, a, kGeneric).equivalent;
        const bool u = decide_rel_uniform(p, q, a, kGeneric).equivalent;
        const bool m = a_minimal_models(p, a, over) == a_minimal_models(q, a, over);
        c.count(s == u && u == m, "positive collapse " + describe_case(p, q, a));
        if (a.size() <= 3) {
            c.count(s == ref::rel_strong_unary(ref::from(p), ref::from(q), a.bits()), "positive oracle " + describe_case(p, q, a));
        }
        const bool sv = decide_rel_strong(p, q, over, kGeneric).equivalent;
        const bool uv = decide_rel_uniform(p, q, over, kGeneric).equivalent;
        const bool cv = classical_models(p, over) == classical_models(q, over);
        c.count(sv == uv && uv == cv, "positive A = var " + describe_case(p, q, over));
    }
}

// 7 ------------------------------------------------------------------------

void shift_properties(Criterion& c) {
    auto u = fx::abc();
    const AtomSet atoms = fx::set(u, "abc");
    for (const Rule& r : rule_family(atoms)) {
        const auto se_r = se_models(Program({r}, u), atoms);
        const auto se_s = se_models(Program(shift_rule(r), u), atoms);
        std::vector<SEPair> diff;
        std::set_difference(se_s.begin(), se_s.end(), se_r.begin(), se_r.end(), std::back_inserter(diff));
        c.count(std::includes(se_s.begin(), se_s.end(), se_r.begin(), se_r.end()), "SE(r) within SE(r->) for " + render_rule(r, u.get()));
        c.count(diff == s_r(r, atoms), "difference equals S_r for " + render_rule(r, u.get()));
    }
    std::mt19937_64 rng(7007);
    std::size_t unsafe_but_equivalent = 0, safe_but_different = 0, oracle_confirms = 0;
    std::string first_disagreement;
    for (std::uint64_t i = 0; i < 500; ++i) {
        GeneratorConfig cfg{2 + rng() % 4, 1 + rng() % 5, kHcf | kDisjunctive, 0, rng()};
        const Program p = random_program(cfg);
        const AtomSet over = var_of(p);
        const AtomSet a = random_alphabet(over, 5, rng);
        c.count(decide_rel_uniform(p, shift_program(p), a, kPlain).equivalent, "HCF shift " + str(p));
        for (const Rule& r : p.rules()) {
            if (!r.is_disjunctive()) continue;
            const Program shifted = shift_one(p, r);
            const bool safe = check_shift_safe(p, r, a);
            const bool eq = decide_rel_strong(p, shifted, a, kPlain).equivalent;
            if (safe == eq) continue;
            (safe ? safe_but_different : unsafe_but_equivalent)++;
            if (eq == ref::rel_strong_unary(ref::from(p), ref::from(shifted), a.bits())) ++oracle_confirms;
            if (first_disagreement.empty()) {
                first_disagreement = "e.g. P = " + str(p) + ", r = " + render_rule(r, p.universe().get()) +
                                     ", A = " + render_set(a, p.universe().get());
            }
        }
    }
    const std::size_t total = unsafe_but_equivalent + safe_but_different;
    c.expect(total == 0, "shift-safety test vs rel-strong decider: " + std::to_string(total) + " disagreements (" +
                             std::to_string(unsafe_but_equivalent) + " test-unsafe but equivalent, " +
                             std::to_string(safe_but_different) + " test-safe but different; unary-context brute force sides with the decider in " +
                             std::to_string(oracle_confirms) + ")");
    if (total > 0) c.expect(false, first_disagreement);
}

// 8 ------------------------------------------------------------------------

void special_cases(Criterion& c) {
    std::mt19937_64 rng(8008);
    for (std::uint64_t i = 0; i < 500; ++i) {
        const Program p = random_program({1 + rng() % 5, 1 + rng() % 6, kNormal, 0, rng()});
        const AtomSet over = var_of(p);
        const AtomSet a = random_alphabet(over, 5, rng);
        bool ok = true;
        for (const ASEPair& s : ase_interpretations(a, over)) ok = ok && ase_check_normal(p, s) == is_ase_model(p, s);
        c.count(ok, "normal A-SE check on " + str(p));
    }
    for (std::uint64_t i = 0; i < 500; ++i) {
        const Program p = random_program({2 + rng() % 4, 1 + rng() % 6, kHcf | kDisjunctive, 0, rng()});
        const AtomSet over = var_of(p);
        const AtomSet a = random_alphabet(over, 5, rng);
        const auto aue = aue_models(p, a, over, AueMethod::filter);
        bool ok = true;
        for (const ASEPair& s : ase_interpretations(a, over)) {
            ok = ok && aue_check_hcf(p, s) == std::binary_search(aue.begin(), aue.end(), s);
        }
        c.count(ok, "HCF A-UE check on " + str(p));
    }
    for (const auto& [p, q] : random_pairs(500, 6, kHorn, 88)) {
        const AtomSet over = var_of(p) | var_of(q);
        const AtomSet a = random_alphabet(over, 6, rng);
        const bool g = decide_rel_strong(p, q, a, kGeneric).equivalent;
        c.count(decide_horn_rel(p, q, a).equivalent == g, "Horn least-model decider " + describe_case(p, q, a));
        c.count(decide_horn_bounded(p, q, a).equivalent == g, "Horn bounded decider " + describe_case(p, q, a));
    }
}

// 9 ------------------------------------------------------------------------

void degenerate(Criterion& c) {
    auto run = [&](const Program& p, const Program& q) {
        const AtomSet over = var_of(p) | var_of(q);
        const bool o = decide_ordinary(p, q, kPlain).equivalent;
        c.count(decide_rel_strong(p, q, {}, kPlain).equivalent == o, "A = {} rel-strong " + describe_case(p, q, {}));
        c.count(decide_rel_uniform(p, q, {}, kPlain).equivalent == o, "A = {} rel-uniform " + describe_case(p, q, {}));
        over.for_each([&](AtomId x) {
            const AtomSet a = AtomSet::single(x);
            c.count(decide_rel_strong(p, q, a, kPlain).equivalent == decide_rel_uniform(p, q, a, kPlain).equivalent,
                    "|A| = 1 " + describe_case(p, q, a));
        });
        const AtomSet wide = over | AtomSet::single(static_cast<AtomId>(p.universe()->size() - 1));
        c.count(decide_rel_strong(p, q, wide, kPlain).equivalent == decide_strong(p, q, kPlain).equivalent,
                "A >= var rel-strong " + describe_case(p, q, wide));
        c.count(decide_rel_uniform(p, q, wide, kPlain).equivalent == decide_uniform(p, q, kPlain).equivalent,
                "A >= var rel-uniform " + describe_case(p, q, wide));
    };
    for (const auto& [p, q] : family_pairs(2)) run(p, q);
    for (const auto& [p, q] : random_pairs(500, 5, 0, 99)) run(p, q);
}

// 10 -----------------------------------------------------------------------

void non_closure(Criterion& c) {
    auto u = fx::abc();
    const std::string r = ":- not a. :- not b. :- not c. ";
    const Program pa = fx::prog(r + "a. b :- c. c :- b.", u);
    const Program pb = fx::prog(r + "b. a :- c. c :- a.", u);
    const Program pc = fx::prog(r + "c. a :- b. b :- a.", u);
    const AtomSet v = fx::set(u, "abc"), a = fx::set(u, "c");
    const std::vector<ASEPair> two{fx::ase(u, "", "abc", "c"), fx::ase(u, "abc", "abc", "c")};
    const std::vector<ASEPair> one{fx::ase(u, "abc", "abc", "c")};
    c.expect(ase_models(pa, a, v) == two, "SE^A(P_a)");
    c.expect(ase_models(pb, a, v) == two, "SE^A(P_b)");
    c.expect(ase_models(pc, a, v).empty(), "SE^A(P_c) empty");
    c.expect(ase_models(program_union(pa, pb), a, v) == one, "SE^A(P_a + P_b)");
    c.expect(ase_models(program_union(pa, pc), a, v) == one, "SE^A(P_a + P_c)");
    c.expect(ase_models(program_union(pb, pc), a, v) == one, "SE^A(P_b + P_c)");
}

struct Entry {
    const char* title;
    std::function<void(Criterion&)> run;
};

const std::vector<Entry>& criteria() {
    static const std::vector<Entry> all = {
        {"golden examples", golden_examples},
        {"A-SE table for Q and Q'", table_one},
        {"SE/UE listings", listings},
        {"uniform deciders vs fact-set brute force", uniform_oracle},
        {"rel-strong decider vs unary and 3-rule contexts", strong_oracle},
        {"positive-class collapse", positive_collapse},
        {"shift properties", shift_properties},
        {"special-case procedures vs generic", special_cases},
        {"degenerate alphabets", degenerate},
        {"non-closure under union", non_closure},
    };
    return all;
}

bool run_one(std::size_t n) {
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    try {
        criteria()[n - 1].run(c);
    } catch (const std::exception& e) {
        c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "criterion " << n << ": " << (c.failed() ? "FAIL" : "PASS") << "  " << criteria()[n - 1].title << " ("
              << c.checks() << " checks";
    if (c.mismatches() > 0) std::cout << ", " << c.mismatches() << " mismatches";
    std::cout << ", " << std::fixed << std::setprecision(2) << secs << "s)\n";
    for (const auto& note : c.notes()) std::cout << "    failed: " << note << "\n";
    return !c.failed();
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::size_t> which;
    for (int i = 1; i < argc; ++i) {
        const long n = std::strtol(argv[i], nullptr, 10);
        if (n < 1 || n > 10) {
            std::cerr << "usage: lpeq_acceptance [1-10 ...]\n";
            return 2;
        }
        which.push_back(static_cast<std::size_t>(n));
    }
    if (which.empty()) {
        for (std::size_t n = 1; n <= 10; ++n) which.push_back(n);
    }
    bool ok = true;
    for (std::size_t n : which) ok = run_one(n) && ok;
    return ok ? 0 : 1;
}
