#pragma once

#include "lpeq/syntax.hpp"

#include <optional>
#include <string_view>

namespace lpeq {

enum class Mode { ordinary, strong, uniform, rel_strong, rel_uniform };
enum class Side { p, q };

std::string_view to_string(Mode m);
std::optional<Mode> parse_mode(std::string_view s);
std::string_view to_string(Side s);

/// `distinguishing` is an answer set of side ∪ context but not of other ∪ context.
struct Witness {
    Program context;
    Interpretation distinguishing;
    Side side = Side::p;
};

struct Verdict {
    bool equivalent = true;
    Mode mode = Mode::ordinary;
    AtomSet alphabet;
    std::optional<Witness> witness;
};

struct DecideOptions {
    /// Route Horn, positive, normal and HCF inputs to the dedicated procedures.
    bool special_cases = true;
    /// Additionally evaluate the alternative characterization and throw
    /// InternalError when the two disagree.
    bool cross_check = false;
    /// Attach a witness on failure.
    bool witness = true;
};

}  // namespace lpeq
