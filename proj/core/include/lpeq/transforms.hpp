#pragma once

#include "lpeq/se_models.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace lpeq {

/// r^→ : one normal rule per head atom; {r} for constraints.
std::vector<Rule> shift_rule(const Rule& r);
Program shift_program(const Program& p);
/// P with r replaced by r^→. Throws PreconditionError if r ∉ P.
Program shift_one(const Program& p, const Rule& r);

/// Pairs X ⊆ Y ⊆ over with X |= B+(r), Y ∩ B-(r) = ∅, |H(r) ∩ Y| ≥ 2, H(r) ∩ X = ∅.
std::vector<SEPair> s_r(const Rule& r, AtomSet over, std::size_t cap = kDefaultEnumCap);

/// Positive dependency graph, optionally augmented with the clique over A.
class DependencyGraph {
public:
    explicit DependencyGraph(const Program& p, AtomSet clique = {});

    AtomSet vertices() const { return vertices_; }
    bool has_edge(AtomId from, AtomId to) const { return successors(from).contains(to); }
    AtomSet successors(AtomId v) const { return AtomSet{adj_[v]}; }
    /// Atoms reachable from v by a path of length ≥ 1.
    AtomSet reachable(AtomId v) const { return AtomSet{reach_[v]}; }
    std::vector<std::pair<AtomId, AtomId>> edges() const;
    /// Some cycle passes through two distinct atoms of `head`.
    bool head_cycle(AtomSet head) const;

private:
    AtomSet vertices_;
    std::array<std::uint64_t, kMaxUniverseAtoms> adj_{};
    std::array<std::uint64_t, kMaxUniverseAtoms> reach_{};
};

bool is_hcf(const Program& p);
bool is_a_hcf(const Program& p, AtomSet a);
/// r is A-HCF in p.
bool rule_is_a_hcf(const Program& p, const Rule& r, AtomSet a);

/// Shift-safety test for r ∈ p relative to A (equivalence of P and P^→_r).
bool check_shift_safe(const Program& p, const Rule& r, AtomSet a);

struct ConstraintElimination {
    Program program;
    AtomId w = 0;
    /// The universe without w.
    AtomSet alphabet;
};

/// Replaces every constraint :- B by w :- B, not w. When `w` is not given,
/// the first unused of w, w1, w2, ... is added to p's universe.
ConstraintElimination eliminate_constraints_negation(const Program& p, std::optional<AtomId> w = std::nullopt);
/// Replaces every constraint :- B by w :- B and adds v :- w for every
/// universe atom v other than w. Requires a positive program.
ConstraintElimination eliminate_constraints_positive(const Program& p, std::optional<AtomId> w = std::nullopt);

}  // namespace lpeq
