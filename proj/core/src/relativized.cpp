#include "lpeq/relativized.hpp"

#include "lpeq/errors.hpp"
#include "lpeq/transforms.hpp"

#include <algorithm>

namespace lpeq {

namespace {

void require_shape(const ASEPair& pair) {
    if (!pair.well_shaped()) throw PreconditionError("pair is not an A-SE-interpretation");
}

bool contains(const std::vector<AtomSet>& sorted, AtomSet s) {
    return std::binary_search(sorted.begin(), sorted.end(), s);
}

}  // namespace

std::vector<AtomSet> proper_reduct_projections(std::span<const Rule> rules, AtomSet y, AtomSet a) {
    std::vector<AtomSet> out;
    for_each_subset(y, [&](AtomSet x) {
        if (x != y && models_reduct(x, y, rules)) out.push_back(x & a);
    });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_ase_model(std::span<const Rule> rules, const ASEPair& pair) {
    require_shape(pair);
    const AtomSet y = pair.y;
    if (!models(y, rules)) return false;
    const AtomSet ya = y & pair.a;
    const bool smaller = !for_each_subset(y - pair.a, [&](AtomSet z) {
        const AtomSet y2 = ya | z;
        return y2 == y || !models_reduct(y2, y, rules);
    });
    if (smaller) return false;
    if (pair.total()) return true;
    return !for_each_subset(y - pair.a, [&](AtomSet z) { return !models_reduct(pair.x | z, y, rules); });
}

std::vector<ASEPair> ase_models(const Program& p, AtomSet a, AtomSet over, std::size_t cap) {
    require_enumerable(over, cap);
    a &= over;
    std::vector<ASEPair> out;
    for_each_subset(over, [&](AtomSet y) {
        if (!models(y, p)) return;
        const AtomSet ya = y & a;
        const auto proj = proper_reduct_projections(p.span(), y, a);
        if (contains(proj, ya)) return;
        for_each_subset(ya, [&](AtomSet x) {
            if (x != ya && contains(proj, x)) out.push_back({x, y, a});
        });
        out.push_back({y, y, a});
    });
    return out;
}

bool is_aue_model_direct(std::span<const Rule> rules, const ASEPair& pair) {
    require_shape(pair);
    const AtomSet y = pair.y;
    if (!models(y, rules)) return false;
    const AtomSet xa = pair.x & pair.a;
    const AtomSet ya = y & pair.a;
    const bool blocked = !for_each_subset(y, [&](AtomSet x2) {
        if (x2 == y) return true;
        const AtomSet x2a = x2 & pair.a;
        if (!(xa.proper_subset_of(x2a) || x2a == ya)) return true;
        return !models_reduct(x2, y, rules);
    });
    if (blocked) return false;
    if (pair.total()) return true;
    return !for_each_subset(y - pair.a, [&](AtomSet z) { return !models_reduct(xa | z, y, rules); });
}

std::vector<ASEPair> ase_interpretations(AtomSet a, AtomSet over, std::size_t cap) {
    require_enumerable(over, cap);
    a &= over;
    std::vector<ASEPair> out;
    for_each_subset(over, [&](AtomSet y) {
        const AtomSet ya = y & a;
        for_each_subset(ya, [&](AtomSet x) {
            if (x != ya) out.push_back({x, y, a});
        });
        out.push_back({y, y, a});
    });
    return out;
}

std::vector<ASEPair> aue_models(const Program& p, AtomSet a, AtomSet over, AueMethod method, std::size_t cap) {
    auto filtered = [&] {
        const auto ase = ase_models(p, a, over, cap);
        std::vector<SEPair> plain;
        plain.reserve(ase.size());
        for (const ASEPair& s : ase) plain.push_back({s.x, s.y});
        std::vector<ASEPair> out;
        for (const SEPair& s : maximal_filter(plain)) out.push_back({s.x, s.y, a & over});
        return out;
    };
    auto direct = [&] {
        std::vector<ASEPair> out;
        for (const ASEPair& c : ase_interpretations(a, over, cap)) {
            if (is_aue_model_direct(p.span(), c)) out.push_back(c);
        }
        return out;
    };
    switch (method) {
        case AueMethod::filter: return filtered();
        case AueMethod::direct: return direct();
        case AueMethod::cross_checked: break;
    }
    auto f = filtered();
    if (f != direct()) throw InternalError("aue_models: filter and direct forms disagree");
    return f;
}

std::vector<Interpretation> a_minimal_models(const Program& p, AtomSet a, AtomSet over, std::size_t cap) {
    a &= over;
    const auto all = classical_models(p, over, cap);
    std::vector<Interpretation> out;
    for (AtomSet m : all) {
        const bool minimal = std::none_of(all.begin(), all.end(), [&](AtomSet o) {
            return o.proper_subset_of(m) && (o & a) == (m & a);
        });
        if (minimal) out.push_back(m);
    }
    return out;
}

namespace {

std::vector<Rule> reduct_rules(const Program& p, AtomSet y) {
    std::vector<Rule> out;
    for (const Rule& r : p.rules()) {
        if (!r.neg.intersects(y)) out.push_back(Rule{r.head, r.pos, {}});
    }
    return out;
}

void append(std::vector<Rule>& to, const std::vector<Rule>& from) { to.insert(to.end(), from.begin(), from.end()); }

std::vector<Rule> excluded(AtomSet s) {
    std::vector<Rule> out;
    s.for_each([&](AtomId v) { out.push_back(constraint(AtomSet::single(v))); });
    return out;
}

void require_normal(const Program& p, const char* who) {
    for (const Rule& r : p.rules()) {
        if (!r.is_normal()) throw PreconditionError(std::string(who) + ": program is not normal");
    }
}

// P^Y ∪ (Y∩A) ∪ Y_⊂ is unsatisfiable.
bool step_total(const std::vector<Rule>& py, AtomSet y, AtomSet a, AtomSet u) {
    std::vector<Rule> s = py;
    append(s, facts_of(y & a));
    append(s, bound_sets(y, u).subset);
    return !horn_least_model(s).has_value();
}

// P^Y ∪ X ∪ { :- x | x in A\X } ∪ Y_⊆ is satisfiable.
bool step_extension(const std::vector<Rule>& py, AtomSet x, AtomSet y, AtomSet a, AtomSet u) {
    std::vector<Rule> s = py;
    append(s, facts_of(x));
    append(s, excluded(a - x));
    append(s, bound_sets(y, u).subseteq);
    return horn_least_model(s).has_value();
}

}  // namespace

bool ase_check_normal(const Program& p, const ASEPair& pair) {
    require_normal(p, "ase_check_normal");
    require_shape(pair);
    const AtomSet u = var_of(p) | pair.y | pair.a;
    const auto py = reduct_rules(p, pair.y);
    if (!models(pair.y, py)) return false;
    if (!step_total(py, pair.y, pair.a, u)) return false;
    return pair.total() || step_extension(py, pair.x, pair.y, pair.a, u);
}

bool aue_check_normal(const Program& p, const ASEPair& pair) {
    require_normal(p, "aue_check_normal");
    require_shape(pair);
    const AtomSet u = var_of(p) | pair.y | pair.a;
    const auto py = reduct_rules(p, pair.y);
    if (!models(pair.y, py)) return false;
    if (pair.total()) return step_total(py, pair.y, pair.a, u);
    const AtomSet xa = pair.x & pair.a;
    std::vector<Rule> lhs = py;
    append(lhs, facts_of(xa));
    append(lhs, bound_sets(pair.y, u).subset);
    std::vector<Rule> rhs = facts_of(xa);
    append(rhs, excluded(pair.a - pair.x));
    if (!horn_entails(lhs, rhs)) return false;
    return step_extension(py, pair.x, pair.y, pair.a, u);
}

bool aue_check_hcf(const Program& p, const ASEPair& pair) {
    if (!is_hcf(p)) throw PreconditionError("aue_check_hcf: program is not head-cycle free");
    return aue_check_normal(shift_program(p), pair);
}

}  // namespace lpeq
