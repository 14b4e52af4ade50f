#pragma once

#include "lpeq/classifier.hpp"
#include "lpeq/equivalence.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lpeq {

struct GeneratorConfig {
    std::size_t atom_count = 3;  // 1..8
    std::size_t rule_count = 4;  // 0..12
    unsigned required = 0;       // ClassFlag bits the program must have
    unsigned forbidden = 0;      // ClassFlag bits the program must not have
    std::uint64_t seed = 0;
};

/// Throws PreconditionError on out-of-range sizes or contradictory flags.
void validate(const GeneratorConfig& cfg);

/// Universe holding the atoms a, b, c, ... (n of them).
UniversePtr letter_universe(std::size_t n);

/// Deterministic for a fixed config. Atoms are drawn from the first
/// atom_count letters, interned into `u` (or a fresh universe).
Program random_program(const GeneratorConfig& cfg, UniversePtr u = nullptr);
/// A random program and a mutation of it (rule added, dropped, shifted or
/// weakened), both of the requested class and over one universe.
std::pair<Program, Program> random_pair(const GeneratorConfig& cfg);
/// Uniform random subset of `base` with at most `max_size` elements.
AtomSet random_alphabet(AtomSet base, std::size_t max_size, std::mt19937_64& rng);

/// All rules with |H| ≤ 2, |B+| ≤ 1, |B-| ≤ 1 over `atoms`.
std::vector<Rule> rule_family(AtomSet atoms);
/// All sets of at most `max_rules` rules from rule_family(atoms).
std::vector<Program> program_family(AtomSet atoms, std::size_t max_rules, const UniversePtr& u);
/// Rule bound used by exhaustive sweeps for single programs or pairs.
std::size_t family_rule_bound(std::size_t atom_count, bool pairs);

/// Definitional check against every program over A with at most
/// `max_rules` non-vacuous rules. Supports |A ∩ var| ≤ 2.
bool equivalent_under_programs(const Program& p, const Program& q, AtomSet a, std::size_t max_rules = 3);

enum class PropertyKind { rule, program, pair };

struct PropertyInfo {
    std::string name;
    PropertyKind kind;
    bool per_alphabet;
    std::size_t max_alphabet;  // alphabets larger than this are skipped
    unsigned required;         // class flags inputs must carry
    std::string summary;
};

const std::vector<PropertyInfo>& property_catalog();
const PropertyInfo* find_property(std::string_view name);

struct SweepReport {
    std::string property;
    std::size_t atom_count = 0;
    std::size_t instances = 0;
    std::size_t failures = 0;
    /// Up to 20 sorted counterexample dumps.
    std::vector<std::string> counterexamples;

    bool ok() const { return failures == 0; }
};

/// Every rule, program or pair of the bounded family over `atom_count` ≤ 3
/// atoms, and every alphabet over them.
SweepReport exhaustive_sweep(std::string_view property, std::size_t atom_count);
/// `count` random instances over 1..max_atoms atoms.
SweepReport random_sweep(std::string_view property, std::size_t max_atoms, std::uint64_t seed, std::size_t count);

std::string format_report(const SweepReport& r);

}  // namespace lpeq
