#pragma once

#include "lpeq/relativized.hpp"
#include "lpeq/verdict.hpp"

#include <vector>

namespace lpeq {

/// A ∩ var(P ∪ Q).
AtomSet effective_alphabet(const Program& p, const Program& q, AtomSet a);

Verdict decide_rel_strong(const Program& p, const Program& q, AtomSet a, const DecideOptions& opts = {});
Verdict decide_rel_uniform(const Program& p, const Program& q, AtomSet a, const DecideOptions& opts = {});
/// Dispatches on `mode`; `a` is ignored for ordinary, strong and uniform.
Verdict decide(const Program& p, const Program& q, Mode mode, AtomSet a = {}, const DecideOptions& opts = {});

/// Unary context plus an interpretation that is an answer set of exactly one
/// side. Throws PreconditionError if P and Q are strongly equivalent relative to A.
Witness build_strong_witness(const Program& p, const Program& q, AtomSet a);
/// Smallest fact set F ⊆ A (by size, then mask) on which the answer sets
/// differ. Throws PreconditionError if none exists.
Witness build_uniform_witness(const Program& p, const Program& q, AtomSet a);
/// Recomputes the answer sets of both sides under the context.
bool verify_witness(const Program& p, const Program& q, const Witness& w);

/// Horn programs, 2^|A| least-model comparisons. Refuses |A| > 20.
Verdict decide_horn_rel(const Program& p, const Program& q, AtomSet a);
/// Horn programs with |var(P ∪ Q) \ A| ≤ 20, via renamed-copy derivability
/// tests and a bounded search for A-minimal countermodels.
Verdict decide_horn_bounded(const Program& p, const Program& q, AtomSet a);

/// Every rule `p :- q` and fact `p.` over A (|A|² rules).
std::vector<Rule> unary_rules(AtomSet a);

/// Definitional check: every unary program over A (strong modes, |A| ≤ 3) or
/// every fact set F ⊆ A (uniform modes, |A| ≤ 12).
Verdict brute_force_oracle(const Program& p, const Program& q, AtomSet a, Mode mode);

}  // namespace lpeq
