#include "lpeq/transforms.hpp"

#include "lpeq/errors.hpp"
#include "lpeq/relativized.hpp"

#include <algorithm>

namespace lpeq {

std::vector<Rule> shift_rule(const Rule& r) {
    if (r.head.empty()) return {r};
    std::vector<Rule> out;
    r.head.for_each([&](AtomId a) {
        const AtomSet h = AtomSet::single(a);
        out.push_back(Rule{h, r.pos, r.neg | (r.head - h)});
    });
    return out;
}

Program shift_program(const Program& p) {
    Program out(p.universe());
    for (const Rule& r : p.rules()) {
        for (const Rule& s : shift_rule(r)) out.add(s);
    }
    return out;
}

Program shift_one(const Program& p, const Rule& r) {
    if (!p.contains(r)) throw PreconditionError("shift_one: rule is not part of the program");
    Program out(p.universe());
    for (const Rule& s : p.rules()) {
        if (s == r) {
            for (const Rule& t : shift_rule(r)) out.add(t);
        } else {
            out.add(s);
        }
    }
    return out;
}

std::vector<SEPair> s_r(const Rule& r, AtomSet over, std::size_t cap) {
    require_enumerable(over, cap);
    std::vector<SEPair> out;
    for_each_subset(over, [&](AtomSet y) {
        if (y.intersects(r.neg) || (r.head & y).size() < 2) return;
        for_each_subset(y, [&](AtomSet x) {
            if (r.pos.subset_of(x) && !r.head.intersects(x)) out.push_back({x, y});
        });
    });
    return out;
}

DependencyGraph::DependencyGraph(const Program& p, AtomSet clique) : vertices_(var_of(p) | clique) {
    for (const Rule& r : p.rules()) {
        r.pos.for_each([&](AtomId from) { adj_[from] |= (r.head - AtomSet::single(from)).bits(); });
    }
    clique.for_each([&](AtomId from) { adj_[from] |= (clique - AtomSet::single(from)).bits(); });
    reach_ = adj_;
    // Warshall closure on bit rows.
    vertices_.for_each([&](AtomId k) {
        const std::uint64_t kb = std::uint64_t{1} << k;
        vertices_.for_each([&](AtomId i) {
            if (reach_[i] & kb) reach_[i] |= reach_[k];
        });
    });
}

std::vector<std::pair<AtomId, AtomId>> DependencyGraph::edges() const {
    std::vector<std::pair<AtomId, AtomId>> out;
    vertices_.for_each([&](AtomId from) { successors(from).for_each([&](AtomId to) { out.emplace_back(from, to); }); });
    return out;
}

bool DependencyGraph::head_cycle(AtomSet head) const {
    bool found = false;
    head.for_each([&](AtomId a) {
        ((reachable(a) & head) - AtomSet::single(a)).for_each([&](AtomId b) { found = found || reachable(b).contains(a); });
    });
    return found;
}

bool is_a_hcf(const Program& p, AtomSet a) {
    const DependencyGraph g(p, a);
    return std::none_of(p.rules().begin(), p.rules().end(), [&](const Rule& r) { return g.head_cycle(r.head); });
}

bool is_hcf(const Program& p) { return is_a_hcf(p, {}); }

bool rule_is_a_hcf(const Program& p, const Rule& r, AtomSet a) { return !DependencyGraph(p, a).head_cycle(r.head); }

bool check_shift_safe(const Program& p, const Rule& r, AtomSet a) {
    const Program shifted = shift_one(p, r);
    const AtomSet over = var_of(p);
    a &= over;
    const auto sr = s_r(r, over);
    for (const SEPair& s : se_models(shifted, over)) {
        if (!std::binary_search(sr.begin(), sr.end(), s)) continue;
        const bool rescued = !for_each_subset(s.y, [&](AtomSet x2) {
            const bool ok = x2 != s.y && x2 != s.x && (x2 & a) == (s.x & a) && is_se_model(p, SEPair{x2, s.y});
            return !ok;
        });
        if (!rescued) return false;
    }
    return true;
}

namespace {

AtomId resolve_fresh(const Program& p, std::optional<AtomId> w) {
    if (!p.universe()) throw PreconditionError("constraint elimination needs a program with a universe");
    if (w) {
        if (var_of(p).contains(*w)) throw PreconditionError("constraint elimination: atom already occurs in the program");
        if (*w >= p.universe()->size()) throw PreconditionError("constraint elimination: atom id not in universe");
        return *w;
    }
    return p.universe()->intern(p.universe()->fresh_name("w"));
}

}  // namespace

ConstraintElimination eliminate_constraints_negation(const Program& p, std::optional<AtomId> w) {
    ConstraintElimination out{Program(p.universe()), resolve_fresh(p, w), {}};
    const AtomSet ws = AtomSet::single(out.w);
    for (const Rule& r : p.rules()) {
        out.program.add(r.head.empty() ? Rule{ws, r.pos, r.neg | ws} : r);
    }
    out.alphabet = p.universe()->all() - ws;
    return out;
}

ConstraintElimination eliminate_constraints_positive(const Program& p, std::optional<AtomId> w) {
    for (const Rule& r : p.rules()) {
        if (!r.is_positive()) throw PreconditionError("eliminate_constraints_positive: program is not positive");
    }
    ConstraintElimination out{Program(p.universe()), resolve_fresh(p, w), {}};
    const AtomSet ws = AtomSet::single(out.w);
    for (const Rule& r : p.rules()) out.program.add(r.head.empty() ? Rule{ws, r.pos, {}} : r);
    out.alphabet = p.universe()->all() - ws;
    out.alphabet.for_each([&](AtomId v) { out.program.add(Rule{AtomSet::single(v), ws, {}}); });
    return out;
}

}  // namespace lpeq
