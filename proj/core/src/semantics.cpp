#include "lpeq/semantics.hpp"

#include "lpeq/errors.hpp"

#include <algorithm>

namespace lpeq {

void require_enumerable(AtomSet over, std::size_t cap) {
    if (over.size() > cap) {
        throw CapacityError("enumeration over " + std::to_string(over.size()) + " atoms exceeds the cap of " +
                            std::to_string(cap));
    }
}

bool satisfies(Interpretation i, const Rule& r) {
    if (!r.pos.subset_of(i) || r.neg.intersects(i)) return true;
    return r.head.intersects(i);
}

bool models(Interpretation i, std::span<const Rule> rules) {
    return std::all_of(rules.begin(), rules.end(), [&](const Rule& r) { return satisfies(i, r); });
}

bool satisfies_reduct(Interpretation x, Interpretation y, const Rule& r) {
    if (r.neg.intersects(y) || !r.pos.subset_of(x)) return true;
    return r.head.intersects(x);
}

bool models_reduct(Interpretation x, Interpretation y, std::span<const Rule> rules) {
    return std::all_of(rules.begin(), rules.end(), [&](const Rule& r) { return satisfies_reduct(x, y, r); });
}

Program reduct(const Program& p, Interpretation y) {
    Program out(p.universe());
    for (const Rule& r : p.rules()) {
        if (!r.neg.intersects(y)) out.add(Rule{r.head, r.pos, {}});
    }
    return out;
}

std::vector<Interpretation> classical_models(const Program& p, AtomSet over, std::size_t cap) {
    require_enumerable(over, cap);
    std::vector<Interpretation> out;
    for_each_subset(over, [&](AtomSet i) {
        if (models(i, p)) out.push_back(i);
    });
    return out;
}

std::vector<Interpretation> minimal_models(const Program& p, AtomSet over, std::size_t cap) {
    const auto all = classical_models(p, over, cap);
    std::vector<Interpretation> out;
    for (AtomSet m : all) {
        const bool minimal =
            std::none_of(all.begin(), all.end(), [&](AtomSet o) { return o.proper_subset_of(m); });
        if (minimal) out.push_back(m);
    }
    return out;
}

namespace {

// Least model of the single-head rules of P^Y.
Interpretation reduct_closure(std::span<const Rule> rules, Interpretation y) {
    AtomSet m;
    for (bool changed = true; changed;) {
        changed = false;
        for (const Rule& r : rules) {
            if (r.head.size() != 1 || r.neg.intersects(y) || !r.pos.subset_of(m) || r.head.subset_of(m)) continue;
            m |= r.head;
            changed = true;
        }
    }
    return m;
}

}  // namespace

bool is_answer_set(std::span<const Rule> rules, Interpretation y) {
    if (!models(y, rules)) return false;
    const AtomSet base = reduct_closure(rules, y);
    const bool normal_reduct = std::all_of(rules.begin(), rules.end(),
                                           [&](const Rule& r) { return r.head.size() <= 1 || r.neg.intersects(y); });
    if (normal_reduct) return base == y;
    // Every model of P^Y contains the closure of its single-head rules.
    return for_each_subset(y - base, [&](AtomSet extra) {
        const AtomSet x = base | extra;
        return x == y || !models_reduct(x, y, rules);
    });
}

std::vector<Interpretation> answer_sets(std::span<const Rule> rules, AtomSet over, std::size_t cap) {
    AtomSet heads;
    for (const Rule& r : rules) heads |= r.head;
    heads &= over;
    require_enumerable(heads, cap);
    std::vector<Interpretation> out;
    for_each_subset(heads, [&](AtomSet y) {
        if (is_answer_set(rules, y)) out.push_back(y);
    });
    return out;
}

Interpretation definite_closure(std::span<const Rule> rules, Interpretation seed) {
    AtomSet m = seed;
    for (bool changed = true; changed;) {
        changed = false;
        for (const Rule& r : rules) {
            if (r.head.size() != 1 || !r.pos.subset_of(m) || r.head.subset_of(m)) continue;
            m |= r.head;
            changed = true;
        }
    }
    return m;
}

std::optional<Interpretation> horn_least_model(std::span<const Rule> rules) {
    for (const Rule& r : rules) {
        if (!r.is_horn()) throw PreconditionError("horn_least_model: program is not Horn");
    }
    const AtomSet m = definite_closure(rules);
    for (const Rule& r : rules) {
        if (r.head.empty() && r.pos.subset_of(m)) return std::nullopt;
    }
    return m;
}

bool horn_entails(std::span<const Rule> p, const Rule& r) {
    if (!r.is_horn()) throw PreconditionError("horn_entails: goal rule is not Horn");
    std::vector<Rule> s(p.begin(), p.end());
    const auto body = facts_of(r.pos);
    s.insert(s.end(), body.begin(), body.end());
    const auto lm = horn_least_model(s);
    if (!lm) return true;
    return r.head.intersects(*lm);
}

bool horn_entails(std::span<const Rule> p, std::span<const Rule> goals) {
    return std::all_of(goals.begin(), goals.end(), [&](const Rule& g) { return horn_entails(p, g); });
}

BoundSets bound_sets(Interpretation y, AtomSet u) {
    BoundSets b;
    (u - y).for_each([&](AtomId v) { b.subseteq.push_back(constraint(AtomSet::single(v))); });
    b.subset = b.subseteq;
    b.subset.push_back(constraint(y));
    b.equal = b.subseteq;
    const auto fy = facts_of(y);
    b.equal.insert(b.equal.end(), fy.begin(), fy.end());
    return b;
}

std::vector<Rule> facts_of(AtomSet s) {
    std::vector<Rule> out;
    s.for_each([&](AtomId a) { out.push_back(fact(a)); });
    return out;
}

}  // namespace lpeq
