#pragma once

#include "lpeq/lpeq.hpp"

#include <string>
#include <string_view>

namespace fx {

/// Universe with a, b, c, ... interned first so ids follow the alphabet.
inline lpeq::UniversePtr abc(std::size_t n = 3) { return lpeq::letter_universe(n); }

inline lpeq::Program prog(std::string_view text, const lpeq::UniversePtr& u) { return lpeq::parse_program(text, u); }

/// Single-letter atoms: set(u, "ac") = {a, c}.
inline lpeq::AtomSet set(const lpeq::UniversePtr& u, std::string_view letters) {
    lpeq::AtomSet s;
    for (char c : letters) s.insert(u->intern(std::string(1, c)));
    return s;
}

inline lpeq::SEPair se(const lpeq::UniversePtr& u, std::string_view x, std::string_view y) {
    return {set(u, x), set(u, y)};
}

inline lpeq::ASEPair ase(const lpeq::UniversePtr& u, std::string_view x, std::string_view y, std::string_view a) {
    return {set(u, x), set(u, y), set(u, a)};
}

inline std::string data_path(std::string_view name) { return std::string(LPEQ_DATA_DIR) + "/" + std::string(name); }

}  // namespace fx
