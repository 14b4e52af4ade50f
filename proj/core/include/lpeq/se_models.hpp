#pragma once

#include "lpeq/semantics.hpp"
#include "lpeq/verdict.hpp"

#include <compare>
#include <vector>

namespace lpeq {

/// SE-interpretation (X,Y) with X ⊆ Y. Ordered by Y, then X.
struct SEPair {
    Interpretation x;
    Interpretation y;

    bool total() const { return x == y; }
    friend bool operator==(const SEPair&, const SEPair&) = default;
    friend std::strong_ordering operator<=>(const SEPair& a, const SEPair& b) {
        if (auto c = a.y <=> b.y; c != 0) return c;
        return a.x <=> b.x;
    }
};

bool is_se_model(std::span<const Rule> rules, SEPair pair);
inline bool is_se_model(const Program& p, SEPair pair) { return is_se_model(p.span(), pair); }

std::vector<SEPair> se_models(const Program& p, AtomSet over, std::size_t cap = kDefaultEnumCap);
inline std::vector<SEPair> se_models(const Program& p) { return se_models(p, var_of(p)); }

/// Keeps totals and the maximal non-total pairs per Y. Input must be sorted.
std::vector<SEPair> maximal_filter(const std::vector<SEPair>& pairs);

std::vector<SEPair> ue_models(const Program& p, AtomSet over, std::size_t cap = kDefaultEnumCap);
inline std::vector<SEPair> ue_models(const Program& p) { return ue_models(p, var_of(p)); }

/// Answer sets computed as the Y with (Y,Y) in SE(P) and no (X,Y), X ⊂ Y.
std::vector<Interpretation> answer_sets_via_se(const Program& p, std::size_t cap = kDefaultEnumCap);

/// Every SE- (resp. UE-) model of p over var(p) ∪ atoms(r) is an SE-model of {r}.
bool se_consequence(const Program& p, const Rule& r);
bool ue_consequence(const Program& p, const Rule& r);
/// Every answer set of p satisfies r.
bool cautious_consequence(const Program& p, const Rule& r);
/// Every classical model of p over var(p) ∪ atoms(r) satisfies r.
bool classical_consequence(const Program& p, const Rule& r);

/// Every UE-model (X,Y) of p has X |= p.
bool ue_class_check(const Program& p);

Verdict decide_ordinary(const Program& p, const Program& q, const DecideOptions& opts = {});
Verdict decide_strong(const Program& p, const Program& q, const DecideOptions& opts = {});
Verdict decide_uniform(const Program& p, const Program& q, const DecideOptions& opts = {});

/// Conditions (i) and (ii) of the two-part characterization of uniform
/// equivalence (same totals; every non-total pair extends within Y to a
/// common non-total pair).
bool uniform_by_extension(const Program& p, const Program& q);

}  // namespace lpeq
