#pragma once

#include "lpeq/se_models.hpp"

#include <compare>
#include <vector>

namespace lpeq {

/// A-SE-interpretation: X = Y, or X ⊂ (Y ∩ A).
struct ASEPair {
    Interpretation x;
    Interpretation y;
    AtomSet a;

    bool total() const { return x == y; }
    bool well_shaped() const { return x == y || x.proper_subset_of(y & a); }
    friend bool operator==(const ASEPair&, const ASEPair&) = default;
    friend std::strong_ordering operator<=>(const ASEPair& l, const ASEPair& r) {
        if (auto c = l.y <=> r.y; c != 0) return c;
        if (auto c = l.x <=> r.x; c != 0) return c;
        return l.a <=> r.a;
    }
};

/// Throws PreconditionError when the pair is not an A-SE-interpretation.
bool is_ase_model(std::span<const Rule> rules, const ASEPair& pair);
inline bool is_ase_model(const Program& p, const ASEPair& pair) { return is_ase_model(p.span(), pair); }

/// A is intersected with `over`.
std::vector<ASEPair> ase_models(const Program& p, AtomSet a, AtomSet over, std::size_t cap = kDefaultEnumCap);

enum class AueMethod { filter, direct, cross_checked };

/// A-UE membership through the direct three-condition form.
bool is_aue_model_direct(std::span<const Rule> rules, const ASEPair& pair);

/// `filter` keeps totals and per-Y maximal non-total A-SE-models; `direct`
/// tests every candidate with is_aue_model_direct; `cross_checked` runs both
/// and throws InternalError if they differ.
std::vector<ASEPair> aue_models(const Program& p, AtomSet a, AtomSet over,
                                AueMethod method = AueMethod::cross_checked, std::size_t cap = kDefaultEnumCap);

/// Classical models over `over` with no smaller model agreeing on A.
std::vector<Interpretation> a_minimal_models(const Program& p, AtomSet a, AtomSet over,
                                             std::size_t cap = kDefaultEnumCap);
inline std::vector<Interpretation> a_minimal_models(const Program& p, AtomSet a) {
    return a_minimal_models(p, a, var_of(p));
}

/// Polynomial A-SE membership for normal programs (Horn satisfiability tests).
bool ase_check_normal(const Program& p, const ASEPair& pair);
/// Polynomial A-UE membership for normal programs.
bool aue_check_normal(const Program& p, const ASEPair& pair);
/// A-UE membership for head-cycle-free programs via their shifted variant.
bool aue_check_hcf(const Program& p, const ASEPair& pair);

/// Sorted distinct X ∩ A over the proper subsets X ⊂ Y with X |= P^Y.
std::vector<AtomSet> proper_reduct_projections(std::span<const Rule> rules, AtomSet y, AtomSet a);

/// All A-SE-interpretations over `over` in (Y, X) order.
std::vector<ASEPair> ase_interpretations(AtomSet a, AtomSet over, std::size_t cap = kDefaultEnumCap);

}  // namespace lpeq
