#include "lpeq/se_models.hpp"

#include "lpeq/equivalence.hpp"
#include "lpeq/errors.hpp"

#include <algorithm>

namespace lpeq {

bool is_se_model(std::span<const Rule> rules, SEPair pair) {
    return pair.x.subset_of(pair.y) && models(pair.y, rules) && models_reduct(pair.x, pair.y, rules);
}

std::vector<SEPair> se_models(const Program& p, AtomSet over, std::size_t cap) {
    require_enumerable(over, cap);
    std::vector<SEPair> out;
    for_each_subset(over, [&](AtomSet y) {
        if (!models(y, p)) return;
        for_each_subset(y, [&](AtomSet x) {
            if (models_reduct(x, y, p)) out.push_back({x, y});
        });
    });
    return out;
}

std::vector<SEPair> maximal_filter(const std::vector<SEPair>& pairs) {
    std::vector<SEPair> out;
    std::vector<SEPair> group;
    auto flush = [&] {
        std::stable_sort(group.begin(), group.end(),
                         [](const SEPair& a, const SEPair& b) { return a.x.size() > b.x.size(); });
        std::vector<AtomSet> kept;
        for (const SEPair& s : group) {
            if (s.total()) {
                out.push_back(s);
                continue;
            }
            const bool dominated =
                std::any_of(kept.begin(), kept.end(), [&](AtomSet k) { return s.x.proper_subset_of(k); });
            if (!dominated) {
                kept.push_back(s.x);
                out.push_back(s);
            }
        }
        group.clear();
    };
    for (const SEPair& s : pairs) {
        if (!group.empty() && group.front().y != s.y) flush();
        group.push_back(s);
    }
    flush();
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SEPair> ue_models(const Program& p, AtomSet over, std::size_t cap) {
    return maximal_filter(se_models(p, over, cap));
}

std::vector<Interpretation> answer_sets_via_se(const Program& p, std::size_t cap) {
    const auto se = se_models(p, var_of(p), cap);
    std::vector<Interpretation> out;
    for (const SEPair& s : se) {
        if (!s.total()) continue;
        const bool smaller = std::any_of(se.begin(), se.end(), [&](const SEPair& o) { return o.y == s.y && o.x != s.y; });
        if (!smaller) out.push_back(s.y);
    }
    return out;
}

namespace {

bool all_pairs_satisfy(const std::vector<SEPair>& pairs, const Rule& r) {
    const Rule single[] = {r};
    return std::all_of(pairs.begin(), pairs.end(), [&](const SEPair& s) { return is_se_model(single, s); });
}

template <class T>
std::vector<T> symmetric_difference(const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

bool se_consequence(const Program& p, const Rule& r) {
    return all_pairs_satisfy(se_models(p, var_of(p) | r.atoms()), r);
}

bool ue_consequence(const Program& p, const Rule& r) {
    return all_pairs_satisfy(ue_models(p, var_of(p) | r.atoms()), r);
}

bool cautious_consequence(const Program& p, const Rule& r) {
    const auto as = answer_sets(p);
    return std::all_of(as.begin(), as.end(), [&](AtomSet y) { return satisfies(y, r); });
}

bool classical_consequence(const Program& p, const Rule& r) {
    const auto ms = classical_models(p, var_of(p) | r.atoms());
    return std::all_of(ms.begin(), ms.end(), [&](AtomSet m) { return satisfies(m, r); });
}

bool ue_class_check(const Program& p) {
    const auto ue = ue_models(p);
    return std::all_of(ue.begin(), ue.end(), [&](const SEPair& s) { return models(s.x, p); });
}

Verdict decide_ordinary(const Program& p, const Program& q, const DecideOptions& opts) {
    Verdict v;
    v.mode = Mode::ordinary;
    const auto ap = answer_sets(p);
    const auto aq = answer_sets(q);
    v.equivalent = ap == aq;
    if (!v.equivalent && opts.witness) {
        const AtomSet y = symmetric_difference(ap, aq).front();
        const Side side = std::binary_search(ap.begin(), ap.end(), y) ? Side::p : Side::q;
        v.witness = Witness{Program(p.universe() ? p.universe() : q.universe()), y, side};
    }
    return v;
}

Verdict decide_strong(const Program& p, const Program& q, const DecideOptions& opts) {
    const AtomSet over = var_of(p) | var_of(q);
    Verdict v;
    v.mode = Mode::strong;
    v.alphabet = over;
    v.equivalent = se_models(p, over) == se_models(q, over);
    if (!v.equivalent && opts.witness) v.witness = build_strong_witness(p, q, over);
    return v;
}

Verdict decide_uniform(const Program& p, const Program& q, const DecideOptions& opts) {
    const AtomSet over = var_of(p) | var_of(q);
    Verdict v;
    v.mode = Mode::uniform;
    v.alphabet = over;
    v.equivalent = ue_models(p, over) == ue_models(q, over);
    if (opts.cross_check && v.equivalent != uniform_by_extension(p, q)) {
        throw InternalError("decide_uniform: UE comparison and extension conditions disagree");
    }
    if (!v.equivalent && opts.witness) v.witness = build_uniform_witness(p, q, over);
    return v;
}

bool uniform_by_extension(const Program& p, const Program& q) {
    const AtomSet over = var_of(p) | var_of(q);
    const auto sp = se_models(p, over);
    const auto sq = se_models(q, over);
    auto totals = [](const std::vector<SEPair>& s) {
        std::vector<SEPair> t;
        std::copy_if(s.begin(), s.end(), std::back_inserter(t), [](const SEPair& e) { return e.total(); });
        return t;
    };
    if (totals(sp) != totals(sq)) return false;
    std::vector<SEPair> both;
    std::set_intersection(sp.begin(), sp.end(), sq.begin(), sq.end(), std::back_inserter(both));
    auto extends = [&](const SEPair& s) {
        return std::any_of(both.begin(), both.end(), [&](const SEPair& b) {
            return b.y == s.y && !b.total() && s.x.subset_of(b.x);
        });
    };
    for (const auto* side : {&sp, &sq}) {
        for (const SEPair& s : *side) {
            if (!s.total() && !extends(s)) return false;
        }
    }
    return true;
}

}  // namespace lpeq
