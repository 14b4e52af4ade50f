#pragma once

#include "lpeq/syntax.hpp"

#include <string>

namespace lpeq {

enum ClassFlag : unsigned {
    kHorn = 1u << 0,
    kDefinite = 1u << 1,
    kUnary = 1u << 2,
    kNormal = 1u << 3,
    kPositive = 1u << 4,
    kHcf = 1u << 5,
    kDisjunctive = 1u << 6,
};

inline constexpr unsigned kAllClassFlags = 0x7f;

struct ProgramClass {
    unsigned flags = 0;

    bool has(ClassFlag f) const { return (flags & f) != 0; }
    bool horn() const { return has(kHorn); }
    bool definite() const { return has(kDefinite); }
    bool unary() const { return has(kUnary); }
    bool normal() const { return has(kNormal); }
    bool positive() const { return has(kPositive); }
    bool hcf() const { return has(kHcf); }
    bool disjunctive() const { return has(kDisjunctive); }
};

ProgramClass classify(const Program& p);

/// Flags forced by the given ones (unary ⟹ definite, horn; horn ⟹ normal,
/// positive; normal ⟹ hcf).
unsigned implied_flags(unsigned flags);

/// Space-separated flag names, e.g. "horn normal positive hcf".
std::string describe(ProgramClass c);

}  // namespace lpeq
