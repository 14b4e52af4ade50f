#include "lpeq/equivalence.hpp"

#include "lpeq/classifier.hpp"
#include "lpeq/errors.hpp"
#include "lpeq/transforms.hpp"

#include <algorithm>
#include <functional>

namespace lpeq {

namespace {

std::vector<Rule> joined(std::span<const Rule> a, std::span<const Rule> b) {
    std::vector<Rule> out(a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

UniversePtr shared_universe(const Program& p, const Program& q) { return p.universe() ? p.universe() : q.universe(); }

bool contains(const std::vector<AtomSet>& sorted, AtomSet s) { return std::binary_search(sorted.begin(), sorted.end(), s); }

std::optional<Witness> compare_under(const Program& p, const Program& q, const std::vector<Rule>& ctx, AtomSet over) {
    const auto ap = answer_sets(joined(p.span(), ctx), over);
    const auto aq = answer_sets(joined(q.span(), ctx), over);
    if (ap == aq) return std::nullopt;
    std::vector<AtomSet> diff;
    std::set_symmetric_difference(ap.begin(), ap.end(), aq.begin(), aq.end(), std::back_inserter(diff));
    const AtomSet y = diff.front();
    return Witness{Program(ctx, shared_universe(p, q)), y, contains(ap, y) ? Side::p : Side::q};
}

std::vector<Rule> excluded(AtomSet s) {
    std::vector<Rule> out;
    s.for_each([&](AtomId v) { out.push_back(constraint(AtomSet::single(v))); });
    return out;
}

void require_horn(const Program& p, const Program& q, const char* who) {
    if (!classify(p).horn() || !classify(q).horn()) throw PreconditionError(std::string(who) + ": programs must be Horn");
}

bool both(const Program& p, const Program& q, ClassFlag f) { return classify(p).has(f) && classify(q).has(f); }

template <class Pred>
std::vector<ASEPair> select(AtomSet a, AtomSet over, Pred pred) {
    std::vector<ASEPair> out;
    for (const ASEPair& c : ase_interpretations(a, over)) {
        if (pred(c)) out.push_back(c);
    }
    return out;
}

// Horn pairs: least-model route when 2^|A| is the smaller search, bounded
// route otherwise. Empty optional when neither applies.
std::optional<bool> horn_route(const Program& p, const Program& q, AtomSet a, AtomSet over) {
    const AtomSet v = over - a;
    if (a.size() <= 20 && (a.size() <= v.size() || v.size() > 20)) return decide_horn_rel(p, q, a).equivalent;
    if (v.size() <= 20) return decide_horn_bounded(p, q, a).equivalent;
    return std::nullopt;
}

}  // namespace

AtomSet effective_alphabet(const Program& p, const Program& q, AtomSet a) { return a & (var_of(p) | var_of(q)); }

Verdict decide_rel_strong(const Program& p, const Program& q, AtomSet a, const DecideOptions& opts) {
    const AtomSet over = var_of(p) | var_of(q);
    a &= over;
    auto generic = [&] { return ase_models(p, a, over) == ase_models(q, a, over); };
    std::optional<bool> eq;
    if (opts.special_cases) {
        if (both(p, q, kHorn)) eq = horn_route(p, q, a, over);
        if (!eq && both(p, q, kPositive)) eq = a_minimal_models(p, a, over) == a_minimal_models(q, a, over);
        if (!eq && both(p, q, kNormal)) {
            eq = select(a, over, [&](const ASEPair& c) { return ase_check_normal(p, c); }) ==
                 select(a, over, [&](const ASEPair& c) { return ase_check_normal(q, c); });
        }
        if (eq && opts.cross_check && *eq != generic()) {
            throw InternalError("decide_rel_strong: special-case route disagrees with A-SE comparison");
        }
    }
    Verdict v;
    v.mode = Mode::rel_strong;
    v.alphabet = a;
    v.equivalent = eq ? *eq : generic();
    if (!v.equivalent && opts.witness) v.witness = build_strong_witness(p, q, a);
    return v;
}

Verdict decide_rel_uniform(const Program& p, const Program& q, AtomSet a, const DecideOptions& opts) {
    const AtomSet over = var_of(p) | var_of(q);
    a &= over;
    const AueMethod method = opts.cross_check ? AueMethod::cross_checked : AueMethod::filter;
    auto generic = [&] { return aue_models(p, a, over, method) == aue_models(q, a, over, method); };
    std::optional<bool> eq;
    if (opts.special_cases) {
        if (both(p, q, kHorn)) eq = horn_route(p, q, a, over);
        if (!eq && both(p, q, kPositive)) eq = a_minimal_models(p, a, over) == a_minimal_models(q, a, over);
        if (!eq && both(p, q, kHcf)) {
            const Program sp = shift_program(p);
            const Program sq = shift_program(q);
            eq = select(a, over, [&](const ASEPair& c) { return aue_check_normal(sp, c); }) ==
                 select(a, over, [&](const ASEPair& c) { return aue_check_normal(sq, c); });
        }
    }
    const bool result = eq ? *eq : generic();
    if (opts.cross_check) {
        if (eq && *eq != generic()) {
            throw InternalError("decide_rel_uniform: special-case route disagrees with A-UE comparison");
        }
        const auto sep = ase_models(p, a, over);
        const auto seq = ase_models(q, a, over);
        auto within = [](const std::vector<ASEPair>& small, const std::vector<ASEPair>& big) {
            return std::includes(big.begin(), big.end(), small.begin(), small.end());
        };
        const bool contained = within(aue_models(p, a, over, AueMethod::filter), seq) &&
                               within(aue_models(q, a, over, AueMethod::filter), sep);
        if (contained != result) throw InternalError("decide_rel_uniform: containment test disagrees");
    }
    Verdict v;
    v.mode = Mode::rel_uniform;
    v.alphabet = a;
    v.equivalent = result;
    if (!v.equivalent && opts.witness) v.witness = build_uniform_witness(p, q, a);
    return v;
}

Verdict decide(const Program& p, const Program& q, Mode mode, AtomSet a, const DecideOptions& opts) {
    switch (mode) {
        case Mode::ordinary: return decide_ordinary(p, q, opts);
        case Mode::strong: return decide_strong(p, q, opts);
        case Mode::uniform: return decide_uniform(p, q, opts);
        case Mode::rel_strong: return decide_rel_strong(p, q, a, opts);
        case Mode::rel_uniform: return decide_rel_uniform(p, q, a, opts);
    }
    throw PreconditionError("unknown mode");
}

bool verify_witness(const Program& p, const Program& q, const Witness& w) {
    const Program& side = w.side == Side::p ? p : q;
    const Program& other = w.side == Side::p ? q : p;
    return is_answer_set(joined(side.span(), w.context.span()), w.distinguishing) &&
           !is_answer_set(joined(other.span(), w.context.span()), w.distinguishing);
}

Witness build_strong_witness(const Program& p, const Program& q, AtomSet a) {
    const AtomSet over = var_of(p) | var_of(q);
    a &= over;
    for (const Side side : {Side::p, Side::q}) {
        const Program& s = side == Side::p ? p : q;
        const Program& o = side == Side::p ? q : p;
        std::optional<Witness> found;
        for_each_subset(over, [&](AtomSet y) {
            if (!models(y, s)) return true;
            const auto proj = proper_reduct_projections(s.span(), y, a);
            if (contains(proj, y & a)) return true;
            auto attempt = [&](std::vector<Rule> ctx) {
                Witness w{Program(std::move(ctx), shared_universe(p, q)), y, side};
                if (verify_witness(p, q, w)) found = std::move(w);
                return found.has_value();
            };
            if (!models(y, o)) return !attempt(facts_of(y & a));
            return for_each_subset(y, [&](AtomSet x) {
                if (x == y || !models_reduct(x, y, o) || contains(proj, x & a)) return true;
                std::vector<Rule> ctx = facts_of(x & a);
                const AtomSet rest = (y - x) & a;
                rest.for_each([&](AtomId h) {
                    (rest - AtomSet::single(h)).for_each([&](AtomId b) {
                        ctx.push_back(Rule{AtomSet::single(h), AtomSet::single(b), {}});
                    });
                });
                return !attempt(std::move(ctx));
            });
        });
        if (found) return *found;
    }
    throw PreconditionError("build_strong_witness: programs are strongly equivalent relative to the alphabet");
}

Witness build_uniform_witness(const Program& p, const Program& q, AtomSet a) {
    const AtomSet over = var_of(p) | var_of(q);
    for (AtomSet f : subsets_by_size(a & over)) {
        if (auto w = compare_under(p, q, facts_of(f), over)) return *w;
    }
    throw PreconditionError("build_uniform_witness: programs are uniformly equivalent relative to the alphabet");
}

Verdict decide_horn_rel(const Program& p, const Program& q, AtomSet a) {
    require_horn(p, q, "decide_horn_rel");
    const AtomSet over = var_of(p) | var_of(q);
    a &= over;
    if (a.size() > 20) throw CapacityError("decide_horn_rel: alphabet larger than 20 atoms");
    Verdict v;
    v.mode = Mode::rel_uniform;
    v.alphabet = a;
    for (AtomSet s : subsets_by_size(a)) {
        const auto fs = facts_of(s);
        const auto lp = horn_least_model(joined(p.span(), fs));
        const auto lq = horn_least_model(joined(q.span(), fs));
        if (lp == lq) continue;
        v.equivalent = false;
        const Side side = lp ? Side::p : Side::q;
        v.witness = Witness{Program(fs, shared_universe(p, q)), lp ? *lp : *lq, side};
        return v;
    }
    return v;
}

namespace {

class HornBounded {
public:
    HornBounded(const Program& p, const Program& q, AtomSet a) : over_(var_of(p) | var_of(q)) {
        a_ = a & over_;
        v_ = over_ - a_;
        if (v_.size() > 20) throw CapacityError("decide_horn_bounded: more than 20 atoms outside the alphabet");
        const AtomSet free = AtomSet::first(kMaxUniverseAtoms) - over_;
        if (free.size() < v_.size()) throw CapacityError("decide_horn_bounded: no room for renamed atoms");
        auto ids = free.ids();
        std::size_t i = 0;
        v_.for_each([&](AtomId v) { prime_[v] = ids[i++]; });
    }

    // Renamed-copy test: for all U ⊆ V with P'_V ∪ (U_=)' satisfiable, some
    // W ⊆ U gives P'_V ∪ (U_=)' ∪ W_= |= Q.
    bool derivability(const Program& p, const Program& q) const {
        std::vector<Rule> pp;
        for (const Rule& r : p.rules()) pp.push_back(Rule{rename(r.head), rename(r.pos), rename(r.neg)});
        return for_each_subset(v_, [&](AtomSet u) {
            std::vector<Rule> base = pp;
            for (const Rule& r : facts_of(u)) base.push_back(Rule{rename(r.head), {}, {}});
            for (const Rule& r : excluded(v_ - u)) base.push_back(Rule{{}, rename(r.pos), {}});
            if (!horn_least_model(base)) return true;
            return !for_each_subset(u, [&](AtomSet w) {
                std::vector<Rule> s = base;
                for (const Rule& r : facts_of(w)) s.push_back(r);
                for (const Rule& r : excluded(v_ - w)) s.push_back(r);
                return !horn_entails(s, q.span());
            });
        });
    }

    // An A-minimal model of p violating some rule of q.
    std::optional<Interpretation> countermodel(const Program& p, const Program& q) const {
        std::optional<Interpretation> found;
        for_each_subset(v_, [&](AtomSet u) {
            std::vector<std::vector<const Rule*>> cand;
            std::vector<AtomId> us = u.ids();
            for (AtomId x : us) {
                std::vector<const Rule*> c;
                for (const Rule& r : p.rules()) {
                    if (r.head == AtomSet::single(x) && (r.pos & v_).subset_of(u - AtomSet::single(x))) c.push_back(&r);
                }
                if (c.empty()) return true;
                cand.push_back(std::move(c));
            }
            for (const Rule& goal : q.rules()) {
                if (!(goal.pos & v_).subset_of(u) || goal.head.intersects(u)) continue;
                std::vector<std::size_t> pick(us.size(), 0);
                for (;;) {
                    if (acyclic(us, cand, pick)) {
                        AtomSet seed = goal.pos & a_;
                        for (std::size_t i = 0; i < us.size(); ++i) seed |= cand[i][pick[i]]->pos & a_;
                        std::vector<Rule> s(p.rules().begin(), p.rules().end());
                        for (const Rule& r : facts_of(seed | u)) s.push_back(r);
                        for (const Rule& r : excluded(v_ - u)) s.push_back(r);
                        const auto l = horn_least_model(s);
                        if (l && !satisfies(*l, goal)) {
                            const auto check = horn_least_model(joined(p.span(), facts_of(*l & a_)));
                            if (check != l) throw InternalError("decide_horn_bounded: countermodel is not A-minimal");
                            found = l;
                            return false;
                        }
                    }
                    std::size_t i = 0;
                    while (i < pick.size() && ++pick[i] == cand[i].size()) pick[i++] = 0;
                    if (i == pick.size()) break;
                }
            }
            return true;
        });
        return found;
    }

    AtomSet alphabet() const { return a_; }

private:
    AtomSet rename(AtomSet s) const {
        AtomSet out = s - v_;
        (s & v_).for_each([&](AtomId v) { out.insert(prime_[v]); });
        return out;
    }

    bool acyclic(const std::vector<AtomId>& us, const std::vector<std::vector<const Rule*>>& cand,
                 const std::vector<std::size_t>& pick) const {
        AtomSet done;
        for (bool progress = true; progress;) {
            progress = false;
            for (std::size_t i = 0; i < us.size(); ++i) {
                if (done.contains(us[i]) || !(cand[i][pick[i]]->pos & v_).subset_of(done)) continue;
                done.insert(us[i]);
                progress = true;
            }
        }
        return done.size() == us.size();
    }

    AtomSet over_;
    AtomSet a_;
    AtomSet v_;
    std::array<AtomId, kMaxUniverseAtoms> prime_{};
};

}  // namespace

Verdict decide_horn_bounded(const Program& p, const Program& q, AtomSet a) {
    require_horn(p, q, "decide_horn_bounded");
    const HornBounded hb(p, q, a);
    Verdict v;
    v.mode = Mode::rel_uniform;
    v.alphabet = hb.alphabet();
    if (hb.derivability(p, q) && hb.derivability(q, p)) return v;
    for (const Side side : {Side::p, Side::q}) {
        const Program& s = side == Side::p ? p : q;
        const Program& o = side == Side::p ? q : p;
        if (auto y = hb.countermodel(s, o)) {
            v.equivalent = false;
            v.witness = Witness{Program(facts_of(*y & v.alphabet), shared_universe(p, q)), *y, side};
            return v;
        }
    }
    return v;
}

std::vector<Rule> unary_rules(AtomSet a) {
    std::vector<Rule> out = facts_of(a);
    a.for_each([&](AtomId h) {
        (a - AtomSet::single(h)).for_each([&](AtomId b) { out.push_back(Rule{AtomSet::single(h), AtomSet::single(b), {}}); });
    });
    return out;
}

Verdict brute_force_oracle(const Program& p, const Program& q, AtomSet a, Mode mode) {
    const AtomSet over = var_of(p) | var_of(q);
    a = (mode == Mode::strong || mode == Mode::uniform) ? over : (a & over);
    Verdict v;
    v.mode = mode;
    v.alphabet = mode == Mode::ordinary ? AtomSet{} : a;
    auto record = [&](std::optional<Witness> w) {
        if (!w) return false;
        v.equivalent = false;
        v.witness = std::move(w);
        return true;
    };
    switch (mode) {
        case Mode::ordinary: record(compare_under(p, q, {}, over)); break;
        case Mode::strong:
        case Mode::rel_strong: {
            if (a.size() > 3) throw CapacityError("brute_force_oracle: strong mode supports at most 3 alphabet atoms");
            const auto rules = unary_rules(a);
            for (std::uint64_t m = 0; m < (std::uint64_t{1} << rules.size()); ++m) {
                std::vector<Rule> ctx;
                for (std::size_t i = 0; i < rules.size(); ++i) {
                    if ((m >> i) & 1u) ctx.push_back(rules[i]);
                }
                if (record(compare_under(p, q, ctx, over))) break;
            }
            break;
        }
        case Mode::uniform:
        case Mode::rel_uniform: {
            if (a.size() > 12) throw CapacityError("brute_force_oracle: uniform mode supports at most 12 alphabet atoms");
            for (AtomSet f : subsets_by_size(a)) {
                if (record(compare_under(p, q, facts_of(f), over))) break;
            }
            break;
        }
    }
    return v;
}

}  // namespace lpeq
