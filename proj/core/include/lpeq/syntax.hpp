#pragma once

#include "lpeq/atom_set.hpp"

#include <compare>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lpeq {

/// Returns true iff `token` is a valid atom name: [a-z][A-Za-z0-9_]* and not
/// the reserved word "not".
bool is_valid_atom_name(std::string_view token);

/// Interned atom table. Ids are dense and assigned in first-occurrence order.
class Universe {
public:
    /// Returns the id of `name`, adding it if absent. Throws PreconditionError
    /// on an invalid name and CapacityError when the table is full.
    AtomId intern(std::string_view name);
    std::optional<AtomId> find(std::string_view name) const;
    const std::string& name(AtomId id) const { return names_.at(id); }
    std::size_t size() const { return names_.size(); }
    AtomSet all() const { return AtomSet::first(names_.size()); }

    /// First of `w`, `w1`, `w2`, ... not yet present.
    std::string fresh_name(std::string_view stem = "w") const;

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, AtomId> index_;
};

using UniversePtr = std::shared_ptr<Universe>;

/// Disjunctive rule  H :- B+, not B-.  Empty head means constraint.
struct Rule {
    AtomSet head;
    AtomSet pos;
    AtomSet neg;

    AtomSet atoms() const { return head | pos | neg; }
    bool is_constraint() const { return head.empty(); }
    bool is_normal() const { return head.size() <= 1; }
    bool is_positive() const { return neg.empty(); }
    bool is_horn() const { return is_normal() && is_positive(); }
    bool is_definite() const { return head.size() == 1; }
    bool is_unary() const { return is_definite() && is_positive() && pos.size() <= 1; }
    bool is_disjunctive() const { return head.size() >= 2; }

    friend bool operator==(const Rule&, const Rule&) = default;
    friend auto operator<=>(const Rule&, const Rule&) = default;
};

inline Rule fact(AtomId a) { return Rule{AtomSet::single(a), {}, {}}; }
inline Rule constraint(AtomSet pos, AtomSet neg = {}) { return Rule{{}, pos, neg}; }
/// The unconditional constraint (falsity).
inline Rule falsum() { return Rule{}; }

/// A finite set of rules over a (possibly shared) universe. Rules keep their
/// first-occurrence order; duplicates are dropped. Equality is set equality.
class Program {
public:
    Program() = default;
    explicit Program(UniversePtr universe) : universe_(std::move(universe)) {}
    explicit Program(std::vector<Rule> rules, UniversePtr universe = nullptr);

    const std::vector<Rule>& rules() const { return rules_; }
    std::span<const Rule> span() const { return rules_; }
    std::size_t size() const { return rules_.size(); }
    bool empty() const { return rules_.empty(); }
    const UniversePtr& universe() const { return universe_; }

    /// Adds `r` unless an identical rule is present. Returns true if added.
    bool add(const Rule& r);
    bool contains(const Rule& r) const;

    /// Rules in canonical (sorted) order.
    std::vector<Rule> sorted_rules() const;

    friend bool operator==(const Program& a, const Program& b);

private:
    std::vector<Rule> rules_;
    UniversePtr universe_;
};

/// Atoms occurring in some rule of `p`.
AtomSet var_of(const Program& p);
AtomSet var_of(std::span<const Rule> rules);

/// Union of two programs over the same universe.
Program program_union(const Program& p, const Program& q);

/// Parses `text`. When `universe` is given, atoms are interned there and the
/// resulting program shares it; otherwise a fresh universe is created.
Program parse_program(std::string_view text, UniversePtr universe = nullptr);

std::string render_rule(const Rule& r, const Universe* u);
/// Canonical text: one rule per line in canonical order.
std::string render(const Program& p);
/// `{a,b}` style; `{}` for the empty set.
std::string render_set(AtomSet s, const Universe* u);
/// `({a},{a,b})` style.
std::string render_pair(AtomSet x, AtomSet y, const Universe* u);
std::vector<std::string> atom_names(AtomSet s, const Universe* u);

}  // namespace lpeq
