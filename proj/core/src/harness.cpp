#include "lpeq/harness.hpp"

#include "lpeq/errors.hpp"
#include "lpeq/transforms.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace lpeq {

namespace {

unsigned close_required(unsigned req) { return implied_flags(req); }

unsigned close_forbidden(unsigned forb) {
    if (forb & kHcf) forb |= kNormal;
    if (forb & (kNormal | kPositive)) forb |= kHorn;
    if (forb & (kHorn | kDefinite)) forb |= kUnary;
    return forb;
}

std::pair<unsigned, unsigned> normalized(const GeneratorConfig& cfg) {
    unsigned req = cfg.required;
    unsigned forb = cfg.forbidden;
    if (req & kDisjunctive) forb |= kNormal;
    if (forb & kDisjunctive) req |= kNormal;
    req = close_required(req);
    forb = close_forbidden(forb);
    if (forb & kNormal) req |= kDisjunctive;
    return {req, forb};
}

template <class Int>
Int uniform(std::mt19937_64& rng, Int lo, Int hi) {
    return std::uniform_int_distribution<Int>(lo, hi)(rng);
}

AtomSet random_atoms(std::mt19937_64& rng, std::size_t n, std::size_t k) {
    std::vector<AtomId> ids(n);
    for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<AtomId>(i);
    std::shuffle(ids.begin(), ids.end(), rng);
    AtomSet s;
    for (std::size_t i = 0; i < std::min(k, n); ++i) s.insert(ids[i]);
    return s;
}

struct Shape {
    std::size_t min_head = 0;
    std::size_t max_head = 2;
    std::size_t max_pos = 2;
    std::size_t max_neg = 2;
};

Shape shape_for(unsigned req, std::size_t atoms) {
    Shape s;
    if (req & kDefinite) s.min_head = 1;
    if (req & (kNormal | kDefinite)) s.max_head = 1;
    if (req & kUnary) s.max_pos = 1;
    if (req & kPositive) s.max_neg = 0;
    s.max_head = std::min(s.max_head, atoms);
    s.max_pos = std::min(s.max_pos, atoms);
    s.max_neg = std::min(s.max_neg, atoms);
    return s;
}

Rule random_rule(std::mt19937_64& rng, std::size_t atoms, const Shape& s) {
    std::size_t h = 1;
    const int roll = uniform(rng, 0, 9);
    if (roll == 0) h = 0;
    else if (roll >= 7) h = 2;
    h = std::clamp(h, s.min_head, s.max_head);
    const std::size_t pos = uniform<std::size_t>(rng, 0, s.max_pos);
    std::size_t neg = 0;
    if (s.max_neg > 0) {
        const int n = uniform(rng, 0, 3);
        neg = std::min<std::size_t>(n <= 1 ? 0 : static_cast<std::size_t>(n - 1), s.max_neg);
    }
    return Rule{random_atoms(rng, atoms, h), random_atoms(rng, atoms, pos), random_atoms(rng, atoms, neg)};
}

bool fits(const Program& p, unsigned req, unsigned forb) {
    const unsigned f = classify(p).flags;
    return (f & req) == req && (f & forb) == 0;
}

std::mt19937_64 seeded(std::uint64_t seed, std::uint64_t salt) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(salt)};
    return std::mt19937_64(seq);
}

}  // namespace

void validate(const GeneratorConfig& cfg) {
    if (cfg.atom_count < 1 || cfg.atom_count > 8) throw PreconditionError("atom_count must be in 1..8");
    if (cfg.rule_count > 12) throw PreconditionError("rule_count must be in 0..12");
    if ((cfg.required | cfg.forbidden) & ~kAllClassFlags) throw PreconditionError("unknown class flag");
    const auto [req, forb] = normalized(cfg);
    if (req & forb) throw PreconditionError("unsatisfiable class constraint combination");
    if (cfg.rule_count == 0 && ((req & kDisjunctive) || (forb & ~kDisjunctive))) {
        throw PreconditionError("unsatisfiable class constraint combination for an empty program");
    }
    if ((req & kDisjunctive) && cfg.atom_count < 2) {
        throw PreconditionError("unsatisfiable class constraint combination: disjunction needs two atoms");
    }
}

UniversePtr letter_universe(std::size_t n) {
    auto u = std::make_shared<Universe>();
    for (std::size_t i = 0; i < n; ++i) {
        if (i < 26) u->intern(std::string(1, static_cast<char>('a' + i)));
        else u->intern("x" + std::to_string(i));
    }
    return u;
}

namespace {

Program draw_program(std::mt19937_64& rng, const GeneratorConfig& cfg, unsigned req, const UniversePtr& u) {
    const Shape shape = shape_for(req, cfg.atom_count);
    Program p(u);
    for (std::size_t tries = 0; p.size() < cfg.rule_count && tries < 100; ++tries) {
        p.add(random_rule(rng, cfg.atom_count, shape));
    }
    return p;
}

}  // namespace

Program random_program(const GeneratorConfig& cfg, UniversePtr u) {
    validate(cfg);
    const auto [req, forb] = normalized(cfg);
    if (!u) u = letter_universe(cfg.atom_count);
    for (std::size_t i = 0; i < cfg.atom_count; ++i) u->intern(std::string(1, static_cast<char>('a' + i)));
    auto rng = seeded(cfg.seed, 0x9e37);
    for (int attempt = 0; attempt < 5000; ++attempt) {
        Program p = draw_program(rng, cfg, req, u);
        if (fits(p, req, forb)) return p;
    }
    throw PreconditionError("random_program: could not satisfy the class constraints");
}

std::pair<Program, Program> random_pair(const GeneratorConfig& cfg) {
    Program p = random_program(cfg);
    const auto [req, forb] = normalized(cfg);
    const Shape shape = shape_for(req, cfg.atom_count);
    auto rng = seeded(cfg.seed, 0x51ed);
    for (int attempt = 0; attempt < 50; ++attempt) {
        std::vector<Rule> rules = p.rules();
        switch (uniform(rng, 0, 4)) {
            case 0: rules.push_back(random_rule(rng, cfg.atom_count, shape)); break;
            case 1:
                if (!rules.empty()) rules.erase(rules.begin() + uniform<std::size_t>(rng, 0, rules.size() - 1));
                break;
            case 2: {
                std::vector<Rule> disj;
                std::copy_if(rules.begin(), rules.end(), std::back_inserter(disj),
                             [](const Rule& r) { return r.is_disjunctive(); });
                if (disj.empty()) continue;
                const Rule r = disj[uniform<std::size_t>(rng, 0, disj.size() - 1)];
                rules = shift_one(p, r).rules();
                break;
            }
            case 3: {
                if (rules.empty()) continue;
                Rule r = rules[uniform<std::size_t>(rng, 0, rules.size() - 1)];
                r.pos.insert(static_cast<AtomId>(uniform<std::size_t>(rng, 0, cfg.atom_count - 1)));
                rules.push_back(r);
                break;
            }
            default:
                if (!rules.empty()) rules.erase(rules.begin() + uniform<std::size_t>(rng, 0, rules.size() - 1));
                rules.push_back(random_rule(rng, cfg.atom_count, shape));
                break;
        }
        Program q(rules, p.universe());
        if (fits(q, req, forb)) return {p, q};
    }
    return {p, p};
}

AtomSet random_alphabet(AtomSet base, std::size_t max_size, std::mt19937_64& rng) {
    std::vector<AtomId> ids = base.ids();
    std::shuffle(ids.begin(), ids.end(), rng);
    const std::size_t k = uniform<std::size_t>(rng, 0, std::min(max_size, ids.size()));
    AtomSet a;
    for (std::size_t i = 0; i < k; ++i) a.insert(ids[i]);
    return a;
}

std::vector<Rule> rule_family(AtomSet atoms) {
    std::vector<AtomSet> heads, singles;
    for_each_subset(atoms, [&](AtomSet s) {
        if (s.size() <= 2) heads.push_back(s);
        if (s.size() <= 1) singles.push_back(s);
    });
    std::vector<Rule> out;
    for (AtomSet h : heads) {
        for (AtomSet bp : singles) {
            for (AtomSet bn : singles) out.push_back(Rule{h, bp, bn});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Program> program_family(AtomSet atoms, std::size_t max_rules, const UniversePtr& u) {
    const auto rules = rule_family(atoms);
    std::vector<Program> out;
    std::vector<std::size_t> idx;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        std::vector<Rule> rs;
        for (std::size_t i : idx) rs.push_back(rules[i]);
        out.emplace_back(std::move(rs), u);
        if (idx.size() == max_rules) return;
        for (std::size_t i = start; i < rules.size(); ++i) {
            idx.push_back(i);
            rec(i + 1);
            idx.pop_back();
        }
    };
    rec(0);
    return out;
}

std::size_t family_rule_bound(std::size_t atom_count, bool pairs) {
    switch (atom_count) {
        case 1: return 3;
        case 2: return pairs ? 2 : 3;
        case 3: return pairs ? 1 : 2;
        default: throw PreconditionError("exhaustive families support 1..3 atoms");
    }
}

namespace {

// For |A| = k ≤ 2: per context program R over A, the table
// sig[Ya] = { Z ⊆ A : Z |= R^Ya } packed as 2^k bits per Ya.
using Signature = std::uint32_t;

std::vector<Signature> context_signatures(std::size_t k, std::size_t max_rules) {
    static std::map<std::pair<std::size_t, std::size_t>, std::vector<Signature>> cache;
    const auto key = std::make_pair(k, max_rules);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    std::vector<Rule> rules;
    std::size_t combos = 1;
    for (std::size_t i = 0; i < k; ++i) combos *= 5;
    for (std::size_t c = 0; c < combos; ++c) {
        Rule r;
        std::size_t code = c;
        for (AtomId i = 0; i < k; ++i, code /= 5) {
            switch (code % 5) {
                case 1: r.head.insert(i); break;
                case 2: r.pos.insert(i); break;
                case 3: r.neg.insert(i); break;
                case 4: r.head.insert(i); r.neg.insert(i); break;
                default: break;
            }
        }
        rules.push_back(r);
    }
    const std::size_t subsets = std::size_t{1} << k;
    auto rule_sig = [&](const Rule& r) {
        Signature sig = 0;
        for (std::size_t ya = 0; ya < subsets; ++ya) {
            for (std::size_t z = 0; z < subsets; ++z) {
                if (satisfies_reduct(AtomSet{z}, AtomSet{ya}, r)) sig |= Signature{1} << (ya * subsets + z);
            }
        }
        return sig;
    };
    std::vector<Signature> rs;
    for (const Rule& r : rules) rs.push_back(rule_sig(r));
    std::set<Signature> sigs;
    const Signature full = subsets * subsets >= 32 ? ~Signature{0} : (Signature{1} << (subsets * subsets)) - 1;
    std::function<void(std::size_t, std::size_t, Signature)> rec = [&](std::size_t start, std::size_t depth, Signature s) {
        sigs.insert(s);
        if (depth == max_rules) return;
        for (std::size_t i = start; i < rs.size(); ++i) rec(i + 1, depth + 1, s & rs[i]);
    };
    rec(0, 0, full);
    return cache[key] = std::vector<Signature>(sigs.begin(), sigs.end());
}

}  // namespace

bool equivalent_under_programs(const Program& p, const Program& q, AtomSet a, std::size_t max_rules) {
    const AtomSet over = var_of(p) | var_of(q);
    a &= over;
    const std::size_t k = a.size();
    if (k > 2) throw CapacityError("equivalent_under_programs: at most 2 alphabet atoms");
    require_enumerable(over);
    const auto ids = a.ids();
    auto local = [&](AtomSet s) {
        std::uint32_t m = 0;
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (s.contains(ids[i])) m |= 1u << i;
        }
        return m;
    };
    const std::size_t subsets = std::size_t{1} << k;
    struct Row {
        std::uint32_t ya;
        bool sat_p, sat_q;
        std::uint32_t proj_p, proj_q;
        auto operator<=>(const Row&) const = default;
    };
    std::set<Row> rows;
    for_each_subset(over, [&](AtomSet y) {
        Row row{local(y & a), models(y, p), models(y, q), 0, 0};
        if (!row.sat_p && !row.sat_q) return;
        for_each_subset(y, [&](AtomSet x) {
            if (x == y) return;
            if (row.sat_p && models_reduct(x, y, p)) row.proj_p |= 1u << local(x & a);
            if (row.sat_q && models_reduct(x, y, q)) row.proj_q |= 1u << local(x & a);
        });
        rows.insert(row);
    });
    const std::uint32_t mask = (std::uint32_t{1} << subsets) - 1;
    for (Signature sig : context_signatures(k, max_rules)) {
        for (const Row& r : rows) {
            const std::uint32_t m = (sig >> (r.ya * subsets)) & mask;
            const bool in_ctx = (m >> r.ya) & 1u;
            const bool as_p = r.sat_p && in_ctx && (r.proj_p & m) == 0;
            const bool as_q = r.sat_q && in_ctx && (r.proj_q & m) == 0;
            if (as_p != as_q) return false;
        }
    }
    return true;
}

namespace {

using Msg = std::optional<std::string>;

std::string one_line(const Program& p) {
    std::string s = render(p);
    std::replace(s.begin(), s.end(), '\n', ' ');
    if (!s.empty() && s.back() == ' ') s.pop_back();
    return s.empty() ? "(empty)" : s;
}

template <class Pairs>
std::string list_pairs(const Pairs& pairs, const Universe* u) {
    std::string out = "{";
    for (const auto& s : pairs) {
        if (out.size() > 1) out += ' ';
        out += render_pair(s.x, s.y, u);
    }
    return out + "}";
}

std::string list_sets(const std::vector<AtomSet>& sets, const Universe* u) {
    std::string out = "{";
    for (AtomSet s : sets) {
        if (out.size() > 1) out += ' ';
        out += render_set(s, u);
    }
    return out + "}";
}

std::string dump_program(const char* label, const Program& p, AtomSet a, AtomSet over) {
    const Universe* u = p.universe().get();
    std::ostringstream os;
    os << "  " << label << " = " << one_line(p) << "\n";
    os << "    AS = " << list_sets(answer_sets(p), u) << "\n";
    os << "    SE = " << list_pairs(se_models(p, over), u) << "\n";
    os << "    SE^A = " << list_pairs(ase_models(p, a, over), u) << "\n";
    os << "    UE^A = " << list_pairs(aue_models(p, a, over, AueMethod::filter), u) << "\n";
    return os.str();
}

bool verdict_of(const Verdict& v) { return v.equivalent; }

std::string yesno(bool b) { return b ? "yes" : "no"; }

const DecideOptions kGeneric{false, false, false};
const DecideOptions kNoWitness{true, false, false};

struct Property {
    PropertyInfo info;
    std::function<Msg(const Rule&, AtomSet)> on_rule;
    std::function<Msg(const Program&, AtomSet)> on_program;
    std::function<Msg(const Program&, const Program&, AtomSet)> on_pair;
};

Msg check_hierarchy(const Program& p, AtomSet atoms) {
    const auto se = se_models(p, atoms);
    const auto ue = maximal_filter(se);
    const auto cms = classical_models(p, atoms);
    const auto as = answer_sets(p);
    std::vector<std::vector<AtomSet>> as_with_facts;
    for_each_subset(atoms, [&](AtomSet f) {
        std::vector<Rule> rs = p.rules();
        for (const Rule& r : facts_of(f)) rs.push_back(r);
        as_with_facts.push_back(answer_sets(rs, atoms));
    });
    for (const Rule& r : rule_family(atoms)) {
        const Rule single[] = {r};
        auto all_pairs = [&](const std::vector<SEPair>& v) {
            return std::all_of(v.begin(), v.end(), [&](const SEPair& s) { return is_se_model(single, s); });
        };
        auto all_sets = [&](const std::vector<AtomSet>& v) {
            return std::all_of(v.begin(), v.end(), [&](AtomSet y) { return satisfies(y, r); });
        };
        const bool s = all_pairs(se);
        const bool u = all_pairs(ue);
        const bool f = std::all_of(as_with_facts.begin(), as_with_facts.end(), all_sets);
        const bool c = all_sets(as);
        const bool m = all_sets(cms);
        if ((s && !u) || (u && !f) || (f && !c) || (m && !c) || (s && !m)) {
            return "chain broken for rule " + render_rule(r, p.universe().get()) + ": se=" + yesno(s) +
                   " ue=" + yesno(u) + " facts=" + yesno(f) + " cautious=" + yesno(c) + " classical=" + yesno(m);
        }
    }
    return std::nullopt;
}

Msg check_ue_class(const Program& p, AtomSet atoms) {
    if (!ue_class_check(p)) return std::nullopt;
    for (const Rule& r : rule_family(atoms)) {
        if (ue_consequence(p, r) != classical_consequence(p, r)) {
            return "UE-class program but consequence differs on " + render_rule(r, p.universe().get());
        }
    }
    return std::nullopt;
}

Msg check_shift_se(const Rule& r, AtomSet atoms) {
    const Program pr({r});
    const Program ps(shift_rule(r));
    const auto se_r = se_models(pr, atoms);
    const auto se_s = se_models(ps, atoms);
    if (!std::includes(se_s.begin(), se_s.end(), se_r.begin(), se_r.end())) return "SE(r) not contained in SE(r->)";
    std::vector<SEPair> diff;
    std::set_difference(se_s.begin(), se_s.end(), se_r.begin(), se_r.end(), std::back_inserter(diff));
    if (diff != s_r(r, atoms)) return "SE(r->) minus SE(r) differs from S_r";
    return std::nullopt;
}

Msg check_a_sm(const Program& p, AtomSet a) {
    const AtomSet over = var_of(p);
    const auto as = answer_sets(p);
    const auto ase = ase_models(p, a, over);
    std::vector<AtomSet> derived;
    for (const ASEPair& s : ase) {
        if (!s.total()) continue;
        const bool nontotal = std::any_of(ase.begin(), ase.end(), [&](const ASEPair& o) { return o.y == s.y && !o.total(); });
        if (!nontotal) derived.push_back(s.y);
    }
    if (derived != as) return "answer sets differ from the A-SE characterization";
    return std::nullopt;
}

Msg check_setoase(const Program& p, AtomSet a) {
    const AtomSet over = var_of(p);
    a &= over;
    for (const ASEPair& s : ase_models(p, a, over)) {
        if (s.total()) {
            if (!is_se_model(p, SEPair{s.y, s.y})) return "total A-SE-model is not an SE-model";
            continue;
        }
        const bool found = !for_each_subset(s.y - a, [&](AtomSet z) { return !is_se_model(p, SEPair{s.x | z, s.y}); });
        if (!found) return "non-total A-SE-model has no SE-model extension";
    }
    return std::nullopt;
}

Msg check_totnontot(const Program& p, AtomSet a) {
    const AtomSet over = var_of(p);
    a &= over;
    const auto ase = ase_models(p, a, over);
    auto has = [&](ASEPair s) { return std::binary_search(ase.begin(), ase.end(), s); };
    for (const ASEPair& t : ase) {
        if (!t.total()) continue;
        for (const ASEPair& u : ase) {
            if (!u.total() || !u.y.proper_subset_of(t.y)) continue;
            const AtomSet xa = u.y & a;
            if (!xa.proper_subset_of(t.y & a) || !has({xa, t.y, a})) return "part (1) fails";
        }
    }
    const bool positive = classify(p).positive();
    for (const ASEPair& s : ase) {
        if (s.total()) continue;
        if (!has({s.y, s.y, a})) return "part (2): total missing";
        if (positive) {
            const bool found = std::any_of(ase.begin(), ase.end(), [&](const ASEPair& o) {
                return o.total() && o.y.subset_of(s.y) && (o.y & a) == s.x;
            });
            if (!found) return "part (2): no total model below";
        }
    }
    return std::nullopt;
}

Msg check_aue_forms(const Program& p, AtomSet a) {
    const AtomSet over = var_of(p);
    const auto aue = aue_models(p, a, over, AueMethod::cross_checked);
    if ((a & over).size() <= 1 && aue != ase_models(p, a, over)) return "|A| <= 1 but A-UE differs from A-SE";
    return std::nullopt;
}

Msg check_special_normal(const Program& p, AtomSet a) {
    if (!classify(p).normal()) return std::nullopt;
    const AtomSet over = var_of(p);
    for (const ASEPair& c : ase_interpretations(a, over)) {
        if (ase_check_normal(p, c) != is_ase_model(p, c)) return "normal check disagrees at " + render_pair(c.x, c.y, p.universe().get());
    }
    return std::nullopt;
}

Msg check_special_hcf(const Program& p, AtomSet a) {
    if (!is_hcf(p)) return std::nullopt;
    const AtomSet over = var_of(p);
    const auto aue = aue_models(p, a, over, AueMethod::filter);
    for (const ASEPair& c : ase_interpretations(a, over)) {
        if (aue_check_hcf(p, c) != std::binary_search(aue.begin(), aue.end(), c)) {
            return "HCF check disagrees at " + render_pair(c.x, c.y, p.universe().get());
        }
    }
    return std::nullopt;
}

Msg check_shift_hcf_uniform(const Program& p, AtomSet a) {
    if (!is_hcf(p)) return std::nullopt;
    if (!decide_rel_uniform(p, shift_program(p), a, kGeneric).equivalent) return "HCF program not A-UE-equivalent to its shift";
    return std::nullopt;
}

Msg check_shift_safe_prop(const Program& p, AtomSet a) {
    for (const Rule& r : p.rules()) {
        const bool safe = check_shift_safe(p, r, a);
        const bool eq = decide_rel_strong(p, shift_one(p, r), a, kGeneric).equivalent;
        if (safe != eq) {
            return "shift test " + yesno(safe) + " vs decider " + yesno(eq) + " for " + render_rule(r, p.universe().get());
        }
    }
    return std::nullopt;
}

Msg check_a_hcf_safe(const Program& p, AtomSet a) {
    for (const Rule& r : p.rules()) {
        if (rule_is_a_hcf(p, r, a) && !check_shift_safe(p, r, a)) {
            return "A-HCF rule not shift-safe: " + render_rule(r, p.universe().get());
        }
    }
    if (a.empty() && is_a_hcf(p, a) != is_hcf(p)) return "A-HCF with empty A differs from HCF";
    return std::nullopt;
}

Msg check_cor_seshift(const Program& p, AtomSet) {
    const Program shifted = shift_program(p);
    const AtomSet over = var_of(p);
    const auto se = se_models(shifted, over);
    bool empty = true;
    for (const Rule& r : p.rules()) {
        if (!r.is_disjunctive()) continue;
        for (const SEPair& s : s_r(r, over)) empty = empty && !std::binary_search(se.begin(), se.end(), s);
    }
    if (decide_strong(p, shifted, kNoWitness).equivalent != empty) return "strong equivalence to shift differs from S_r test";
    return std::nullopt;
}

Msg check_constraint_negation(const Program& p, AtomSet) {
    const Program copy(p.rules(), std::make_shared<Universe>(*p.universe()));
    const auto ce = eliminate_constraints_negation(copy);
    if (!decide_rel_strong(copy, ce.program, ce.alphabet, kNoWitness).equivalent) return "rewriting not equivalent relative to U\\{w}";
    return std::nullopt;
}

Msg check_ue_subset_se(const Program& p, AtomSet) {
    const auto se = se_models(p);
    const auto ue = ue_models(p);
    if (!std::includes(se.begin(), se.end(), ue.begin(), ue.end())) return "UE not contained in SE";
    for (const SEPair& s : se) {
        if (s.total() && !std::binary_search(ue.begin(), ue.end(), s)) return "total SE-model missing from UE";
    }
    return std::nullopt;
}

Msg check_answer_sets_sm(const Program& p, AtomSet) {
    if (answer_sets(p) != answer_sets_via_se(p)) return "answer sets differ from the SE characterization";
    return std::nullopt;
}

Msg pair_unary_oracle(const Program& p, const Program& q, AtomSet a) {
    const bool d = decide_rel_strong(p, q, a, kNoWitness).equivalent;
    const bool b = brute_force_oracle(p, q, a, Mode::rel_strong).equivalent;
    if (d != b) return "rel-strong decider " + yesno(d) + " vs unary brute force " + yesno(b);
    return std::nullopt;
}

Msg pair_uniform_oracle(const Program& p, const Program& q, AtomSet a) {
    const bool d = decide_rel_uniform(p, q, a, kNoWitness).equivalent;
    const bool b = brute_force_oracle(p, q, a, Mode::rel_uniform).equivalent;
    if (d != b) return "rel-uniform decider " + yesno(d) + " vs fact brute force " + yesno(b);
    return std::nullopt;
}

Msg pair_general_oracle(const Program& p, const Program& q, AtomSet a) {
    const bool u = brute_force_oracle(p, q, a, Mode::rel_strong).equivalent;
    const bool g = equivalent_under_programs(p, q, a, 3);
    if (u != g) return "unary contexts " + yesno(u) + " vs all 3-rule contexts " + yesno(g);
    return std::nullopt;
}

Msg pair_positive_collapse(const Program& p, const Program& q, AtomSet a) {
    if (!classify(p).positive() || !classify(q).positive()) return std::nullopt;
    const AtomSet over = var_of(p) | var_of(q);
    const bool s = decide_rel_strong(p, q, a, kGeneric).equivalent;
    const bool u = decide_rel_uniform(p, q, a, kGeneric).equivalent;
    const bool m = a_minimal_models(p, a, over) == a_minimal_models(q, a, over);
    if (s != u || u != m) return "rel-strong " + yesno(s) + ", rel-uniform " + yesno(u) + ", A-minimal " + yesno(m);
    if (over.subset_of(a) && (classical_models(p, over) == classical_models(q, over)) != s) {
        return "classical-model comparison differs";
    }
    return std::nullopt;
}

Msg pair_horn_rel(const Program& p, const Program& q, AtomSet a) {
    if (!classify(p).horn() || !classify(q).horn()) return std::nullopt;
    const bool h = decide_horn_rel(p, q, a).equivalent;
    const bool s = decide_rel_strong(p, q, a, kGeneric).equivalent;
    const bool u = decide_rel_uniform(p, q, a, kGeneric).equivalent;
    if (h != s || h != u) return "horn " + yesno(h) + ", generic strong " + yesno(s) + ", generic uniform " + yesno(u);
    return std::nullopt;
}

Msg pair_horn_bounded(const Program& p, const Program& q, AtomSet a) {
    if (!classify(p).horn() || !classify(q).horn()) return std::nullopt;
    const Verdict h = decide_horn_bounded(p, q, a);
    const bool s = decide_rel_strong(p, q, a, kGeneric).equivalent;
    if (h.equivalent != s) return "bounded " + yesno(h.equivalent) + " vs generic " + yesno(s);
    if (h.witness && !verify_witness(p, q, *h.witness)) return "bounded witness fails verification";
    return std::nullopt;
}

Msg pair_degenerate(const Program& p, const Program& q, AtomSet) {
    const AtomSet over = var_of(p) | var_of(q);
    const bool ord = decide_ordinary(p, q, kNoWitness).equivalent;
    if (decide_rel_strong(p, q, {}, kNoWitness).equivalent != ord) return "A = {} rel-strong differs from ordinary";
    if (decide_rel_uniform(p, q, {}, kNoWitness).equivalent != ord) return "A = {} rel-uniform differs from ordinary";
    std::optional<std::string> bad;
    over.for_each([&](AtomId x) {
        const AtomSet a = AtomSet::single(x);
        if (!bad && decide_rel_strong(p, q, a, kNoWitness).equivalent != decide_rel_uniform(p, q, a, kNoWitness).equivalent) {
            bad = "|A| = 1 rel-strong differs from rel-uniform";
        }
    });
    if (bad) return bad;
    const AtomSet wide = over | AtomSet::single(static_cast<AtomId>(over.width()));
    if (decide_rel_strong(p, q, wide, kNoWitness).equivalent != decide_strong(p, q, kNoWitness).equivalent) {
        return "A = var rel-strong differs from strong";
    }
    if (decide_rel_uniform(p, q, wide, kNoWitness).equivalent != decide_uniform(p, q, kNoWitness).equivalent) {
        return "A = var rel-uniform differs from uniform";
    }
    return std::nullopt;
}

Msg pair_equivalence_hierarchy(const Program& p, const Program& q, AtomSet a) {
    const bool rs = decide_rel_strong(p, q, a, kNoWitness).equivalent;
    const bool ru = decide_rel_uniform(p, q, a, kNoWitness).equivalent;
    const bool o = decide_ordinary(p, q, kNoWitness).equivalent;
    const bool s = decide_strong(p, q, kNoWitness).equivalent;
    const bool u = decide_uniform(p, q, kNoWitness).equivalent;
    if ((rs && !ru) || (ru && !o) || (s && !u) || (u && !o) || (s && !rs) || (u && !ru)) {
        return "hierarchy broken: strong " + yesno(s) + " uniform " + yesno(u) + " rel-strong " + yesno(rs) +
               " rel-uniform " + yesno(ru) + " ordinary " + yesno(o);
    }
    return std::nullopt;
}

Msg pair_witness_sound(const Program& p, const Program& q, AtomSet a) {
    const AtomSet ea = effective_alphabet(p, q, a);
    for (Mode m : {Mode::rel_strong, Mode::rel_uniform}) {
        const Verdict v = decide(p, q, m, a);
        if (v.equivalent) continue;
        if (!v.witness) return std::string("missing witness for ") + std::string(to_string(m));
        const Witness& w = *v.witness;
        if (!verify_witness(p, q, w)) return std::string("witness fails verification for ") + std::string(to_string(m));
        if (!var_of(w.context).subset_of(ea)) return "witness context leaves the alphabet";
        for (const Rule& r : w.context.rules()) {
            if (m == Mode::rel_strong ? !r.is_unary() : !(r.is_definite() && r.pos.empty() && r.neg.empty())) {
                return "witness context has the wrong shape";
            }
        }
    }
    return std::nullopt;
}

Msg pair_uniform_characterizations(const Program& p, const Program& q, AtomSet a) {
    const DecideOptions cross{true, true, false};
    bool u = false;
    try {
        u = decide_uniform(p, q, cross).equivalent;
        decide_rel_uniform(p, q, a, cross);
        decide_rel_strong(p, q, a, cross);
    } catch (const InternalError& e) {
        return std::string(e.what());
    }
    bool cons = true;
    for (const Rule& r : q.rules()) cons = cons && ue_consequence(p, r);
    for (const Rule& r : p.rules()) cons = cons && ue_consequence(q, r);
    if (cons != u) return "mutual UE-consequence differs from UE comparison";
    return std::nullopt;
}

Msg pair_postotal(const Program& p, const Program& q, AtomSet a) {
    if (!classify(p).positive()) return std::nullopt;
    const AtomSet over = var_of(p) | var_of(q);
    const auto sp = ase_models(p, a, over);
    const auto sq = ase_models(q, a, over);
    auto totals = [](const std::vector<ASEPair>& v) {
        std::vector<ASEPair> t;
        std::copy_if(v.begin(), v.end(), std::back_inserter(t), [](const ASEPair& s) { return s.total(); });
        return t;
    };
    if (totals(sp) == totals(sq) && !std::includes(sq.begin(), sq.end(), sp.begin(), sp.end())) {
        return "positive program with equal totals but A-SE not contained";
    }
    return std::nullopt;
}

Msg pair_notclosed(const Program& p, const Program& q, AtomSet a) {
    const AtomSet over = var_of(p) | var_of(q);
    const auto sp = ase_models(p, a, over);
    const auto sq = ase_models(q, a, over);
    const auto su = ase_models(program_union(p, q), a, over);
    auto in = [](const std::vector<ASEPair>& v, const ASEPair& s) { return std::binary_search(v.begin(), v.end(), s); };
    for (const ASEPair& s : sp) {
        if (s.total() && in(sq, s) && !in(su, s)) return "part (i) fails";
    }
    for (const ASEPair& s : su) {
        if (s.total()) continue;
        const ASEPair t{s.y, s.y, s.a};
        if ((in(sp, t) && !in(sp, s)) || (in(sq, t) && !in(sq, s))) return "part (ii) fails";
    }
    return std::nullopt;
}

Msg pair_constraint_positive(const Program& p, const Program& q, AtomSet) {
    if (!classify(p).positive() || !classify(q).positive()) return std::nullopt;
    auto u = std::make_shared<Universe>(*p.universe());
    const Program pc(p.rules(), u);
    const Program qc(q.rules(), u);
    const auto ep = eliminate_constraints_positive(pc);
    const auto eq = eliminate_constraints_positive(qc, ep.w);
    if (decide_ordinary(pc, qc, kNoWitness).equivalent != decide_ordinary(ep.program, eq.program, kNoWitness).equivalent) {
        return "ordinary verdict changed by the positive rewriting";
    }
    return std::nullopt;
}

const std::vector<Property>& registry() {
    static const std::vector<Property> props = [] {
        std::vector<Property> v;
        auto rule = [&](std::string name, std::string summary, auto fn) {
            v.push_back({{std::move(name), PropertyKind::rule, false, 64, 0, std::move(summary)}, fn, nullptr, nullptr});
        };
        auto prog = [&](std::string name, bool per_a, unsigned req, std::string summary, auto fn) {
            v.push_back({{std::move(name), PropertyKind::program, per_a, 64, req, std::move(summary)}, nullptr, fn, nullptr});
        };
        auto pair = [&](std::string name, bool per_a, std::size_t max_a, unsigned req, std::string summary, auto fn) {
            v.push_back({{std::move(name), PropertyKind::pair, per_a, max_a, req, std::move(summary)}, nullptr, nullptr, fn});
        };
        prog("ue-subset-se", false, 0, "UE(P) is contained in SE(P) and keeps every total pair", check_ue_subset_se);
        prog("answer-sets-sm", false, 0, "answer sets equal their SE-model characterization", check_answer_sets_sm);
        prog("hierarchy", false, 0, "se => ue => cautious under all facts => cautious; classical => cautious; se => classical",
             check_hierarchy);
        prog("ue-class", false, 0, "UE-class programs have UE-consequence equal to classical consequence",
             check_ue_class);
        prog("a-sm-lemma", true, 0, "answer sets from total A-SE-models without non-total companions", check_a_sm);
        prog("setoase", true, 0, "A-SE-models project from SE-models", check_setoase);
        prog("totnontot", true, 0, "total/non-total A-SE-model relations", check_totnontot);
        prog("aue-forms", true, 0, "filter and direct A-UE forms agree; |A| <= 1 collapses to A-SE", check_aue_forms);
        prog("special-normal", true, kNormal, "polynomial A-SE check agrees with enumeration on normal programs",
             check_special_normal);
        prog("special-hcf", true, kHcf, "polynomial A-UE check agrees with enumeration on HCF programs",
             check_special_hcf);
        prog("shift-hcf-uniform", true, kHcf, "HCF programs are A-UE-equivalent to their shift", check_shift_hcf_uniform);
        prog("shift-safe", true, 0, "shift-safety test equals rel-strong equivalence with the partial shift",
             check_shift_safe_prop);
        prog("a-hcf-safe", true, 0, "A-HCF rules are shift-safe", check_a_hcf_safe);
        prog("cor-seshift", false, 0, "strong equivalence to the shift iff no S_r pair survives", check_cor_seshift);
        prog("constraint-negation", false, 0, "negation-based constraint elimination is rel-strong equivalent",
             check_constraint_negation);
        rule("shift-se", "SE(r) within SE(r->) and the difference equals S_r", check_shift_se);
        pair("unary-oracle", true, 3, 0, "rel-strong decider equals brute force over unary contexts", pair_unary_oracle);
        pair("uniform-oracle", true, 12, 0, "rel-uniform decider equals brute force over fact sets", pair_uniform_oracle);
        pair("general-oracle", true, 2, 0, "unary contexts and all 3-rule contexts give the same verdict",
             pair_general_oracle);
        pair("positive-collapse", true, 64, kPositive, "positive pairs: rel-strong = rel-uniform = A-minimal models",
             pair_positive_collapse);
        pair("horn-rel", true, 64, kHorn, "least-model Horn decider agrees with the generic deciders", pair_horn_rel);
        pair("horn-bounded", true, 64, kHorn, "bounded Horn decider agrees with the generic decider", pair_horn_bounded);
        pair("degenerate-alphabets", false, 64, 0, "empty, singleton and full alphabets", pair_degenerate);
        pair("equivalence-hierarchy", true, 64, 0, "strong => uniform => ordinary, relativized and plain",
             pair_equivalence_hierarchy);
        pair("witness-sound", true, 64, 0, "witnesses verify and stay within the alphabet", pair_witness_sound);
        pair("uniform-characterizations", true, 64, 0, "alternative uniform characterizations agree",
             pair_uniform_characterizations);
        pair("postotal", true, 64, 0, "positive P with equal totals has SE^A(P) within SE^A(Q)", pair_postotal);
        pair("notclosed", true, 64, 0, "A-SE-models of unions, parts (i) and (ii)", pair_notclosed);
        pair("constraint-positive", false, 64, kPositive, "positive constraint elimination keeps ordinary verdicts",
             pair_constraint_positive);
        return v;
    }();
    return props;
}

const Property* lookup(std::string_view name) {
    for (const Property& p : registry()) {
        if (p.info.name == name) return &p;
    }
    return nullptr;
}

class Collector {
public:
    explicit Collector(SweepReport& r) : r_(r) {}

    void record(std::string dump) {
        ++r_.failures;
        if (r_.counterexamples.size() < 20) r_.counterexamples.push_back(std::move(dump));
    }

    void finish() { std::sort(r_.counterexamples.begin(), r_.counterexamples.end()); }

private:
    SweepReport& r_;
};

bool run_program(const Property& prop, const Program& p, AtomSet a, Collector& c) {
    Msg m;
    try {
        m = prop.on_program(p, a);
    } catch (const Error& e) {
        m = std::string("exception: ") + e.what();
    }
    if (!m) return true;
    const AtomSet over = var_of(p);
    c.record(*m + "\n  A = " + render_set(a & over, p.universe().get()) + "\n" + dump_program("P", p, a, over));
    return false;
}

bool run_pair(const Property& prop, const Program& p, const Program& q, AtomSet a, Collector& c) {
    Msg m;
    try {
        m = prop.on_pair(p, q, a);
    } catch (const Error& e) {
        m = std::string("exception: ") + e.what();
    }
    if (!m) return true;
    const AtomSet over = var_of(p) | var_of(q);
    c.record(*m + "\n  A = " + render_set(a & over, p.universe().get()) + "\n" + dump_program("P", p, a, over) +
             dump_program("Q", q, a, over));
    return false;
}

bool run_rule(const Property& prop, const Rule& r, AtomSet atoms, const Universe* u, Collector& c) {
    Msg m;
    try {
        m = prop.on_rule(r, atoms);
    } catch (const Error& e) {
        m = std::string("exception: ") + e.what();
    }
    if (!m) return true;
    c.record(*m + "\n  r = " + render_rule(r, u));
    return false;
}

bool class_ok(const Program& p, unsigned req) { return (classify(p).flags & req) == req; }

}  // namespace

const std::vector<PropertyInfo>& property_catalog() {
    static const std::vector<PropertyInfo> infos = [] {
        std::vector<PropertyInfo> v;
        for (const Property& p : registry()) v.push_back(p.info);
        return v;
    }();
    return infos;
}

const PropertyInfo* find_property(std::string_view name) {
    const Property* p = lookup(name);
    return p ? &p->info : nullptr;
}

SweepReport exhaustive_sweep(std::string_view name, std::size_t atom_count) {
    const Property* prop = lookup(name);
    if (!prop) throw PreconditionError("unknown property '" + std::string(name) + "'");
    SweepReport report;
    report.property = std::string(name);
    report.atom_count = atom_count;
    Collector col(report);
    const UniversePtr u = letter_universe(atom_count);
    const AtomSet atoms = AtomSet::first(atom_count);
    std::vector<AtomSet> alphabets;
    for_each_subset(atoms, [&](AtomSet a) {
        if (a.size() <= prop->info.max_alphabet) alphabets.push_back(a);
    });
    if (!prop->info.per_alphabet) alphabets = {atoms};
    switch (prop->info.kind) {
        case PropertyKind::rule:
            if (atom_count < 1 || atom_count > 3) throw PreconditionError("exhaustive sweeps support 1..3 atoms");
            for (const Rule& r : rule_family(atoms)) {
                ++report.instances;
                run_rule(*prop, r, atoms, u.get(), col);
            }
            break;
        case PropertyKind::program:
            for (const Program& p : program_family(atoms, family_rule_bound(atom_count, false), u)) {
                if (!class_ok(p, prop->info.required)) continue;
                for (AtomSet a : alphabets) {
                    ++report.instances;
                    run_program(*prop, p, a, col);
                }
            }
            break;
        case PropertyKind::pair: {
            std::vector<Program> progs;
            for (Program& p : program_family(atoms, family_rule_bound(atom_count, true), u)) {
                if (class_ok(p, prop->info.required)) progs.push_back(std::move(p));
            }
            for (std::size_t i = 0; i < progs.size(); ++i) {
                for (std::size_t j = i; j < progs.size(); ++j) {
                    for (AtomSet a : alphabets) {
                        ++report.instances;
                        run_pair(*prop, progs[i], progs[j], a, col);
                    }
                }
            }
            break;
        }
    }
    col.finish();
    return report;
}

SweepReport random_sweep(std::string_view name, std::size_t max_atoms, std::uint64_t seed, std::size_t count) {
    const Property* prop = lookup(name);
    if (!prop) throw PreconditionError("unknown property '" + std::string(name) + "'");
    if (max_atoms < 1 || max_atoms > 8) throw PreconditionError("random sweeps support 1..8 atoms");
    SweepReport report;
    report.property = std::string(name);
    report.atom_count = max_atoms;
    Collector col(report);
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        GeneratorConfig cfg;
        cfg.atom_count = uniform<std::size_t>(rng, 1, max_atoms);
        cfg.rule_count = uniform<std::size_t>(rng, 1, 5);
        cfg.required = prop->info.required;
        cfg.seed = rng();
        const AtomSet atoms = AtomSet::first(cfg.atom_count);
        const AtomSet a = prop->info.per_alphabet ? random_alphabet(atoms, prop->info.max_alphabet, rng) : atoms;
        ++report.instances;
        switch (prop->info.kind) {
            case PropertyKind::rule: {
                const auto u = letter_universe(cfg.atom_count);
                const Program p = random_program(GeneratorConfig{cfg.atom_count, 1, cfg.required, 0, cfg.seed}, u);
                if (!p.empty()) run_rule(*prop, p.rules().front(), atoms, u.get(), col);
                break;
            }
            case PropertyKind::program: run_program(*prop, random_program(cfg), a, col); break;
            case PropertyKind::pair: {
                const auto [p, q] = random_pair(cfg);
                run_pair(*prop, p, q, a, col);
                break;
            }
        }
    }
    col.finish();
    return report;
}

std::string format_report(const SweepReport& r) {
    std::ostringstream os;
    os << "property " << r.property << ": " << r.instances << " instances over " << r.atom_count << " atoms, "
       << r.failures << " counterexample" << (r.failures == 1 ? "" : "s") << "\n";
    for (const std::string& c : r.counterexamples) os << "- " << c << "\n";
    return os.str();
}

}  // namespace lpeq
