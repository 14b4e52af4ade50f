#pragma once

#include "lpeq/syntax.hpp"

#include <optional>
#include <span>
#include <vector>

namespace lpeq {

/// Default bound on the number of atoms any exhaustive enumeration may range over.
inline constexpr std::size_t kDefaultEnumCap = 24;

/// Throws CapacityError when `over` has more than `cap` atoms.
void require_enumerable(AtomSet over, std::size_t cap = kDefaultEnumCap);

bool satisfies(Interpretation i, const Rule& r);
bool models(Interpretation i, std::span<const Rule> rules);
inline bool models(Interpretation i, const Program& p) { return models(i, p.span()); }

/// X |= r^Y, evaluated without building the reduct.
bool satisfies_reduct(Interpretation x, Interpretation y, const Rule& r);
/// X |= P^Y.
bool models_reduct(Interpretation x, Interpretation y, std::span<const Rule> rules);
inline bool models_reduct(Interpretation x, Interpretation y, const Program& p) {
    return models_reduct(x, y, p.span());
}

/// Gelfond-Lifschitz reduct.
Program reduct(const Program& p, Interpretation y);

/// All subsets of `over` satisfying every rule, ascending by mask value.
std::vector<Interpretation> classical_models(const Program& p, AtomSet over, std::size_t cap = kDefaultEnumCap);
/// Inclusion-minimal classical models over `over`.
std::vector<Interpretation> minimal_models(const Program& p, AtomSet over, std::size_t cap = kDefaultEnumCap);

/// Y is a minimal model of P^Y.
bool is_answer_set(std::span<const Rule> rules, Interpretation y);
/// Answer sets within `over` (atoms outside `over` are false).
std::vector<Interpretation> answer_sets(std::span<const Rule> rules, AtomSet over, std::size_t cap = kDefaultEnumCap);
inline std::vector<Interpretation> answer_sets(const Program& p, std::size_t cap = kDefaultEnumCap) {
    return answer_sets(p.span(), var_of(p), cap);
}

/// Least model of a Horn program (constraints allowed); nullopt when some
/// constraint is violated by it. Throws PreconditionError on non-Horn input.
std::optional<Interpretation> horn_least_model(std::span<const Rule> rules);
inline std::optional<Interpretation> horn_least_model(const Program& p) { return horn_least_model(p.span()); }

/// Least model of the rules with a single head, ignoring all other rules.
Interpretation definite_closure(std::span<const Rule> rules, Interpretation seed = {});

/// Horn entailment P |= r for Horn P and Horn r.
bool horn_entails(std::span<const Rule> p, const Rule& r);
bool horn_entails(std::span<const Rule> p, std::span<const Rule> goals);

struct BoundSets {
    std::vector<Rule> subseteq;  // { :- y | y in U\Y }
    std::vector<Rule> subset;    // subseteq plus :- y1,...,yn
    std::vector<Rule> equal;     // subseteq plus the facts of Y
};

BoundSets bound_sets(Interpretation y, AtomSet u);

/// Facts {a. | a in s}.
std::vector<Rule> facts_of(AtomSet s);

}  // namespace lpeq
