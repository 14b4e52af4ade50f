#include "lpeq/verdict.hpp"

namespace lpeq {

std::string_view to_string(Mode m) {
    switch (m) {
        case Mode::ordinary: return "ordinary";
        case Mode::strong: return "strong";
        case Mode::uniform: return "uniform";
        case Mode::rel_strong: return "rel-strong";
        case Mode::rel_uniform: return "rel-uniform";
    }
    return "unknown";
}

std::optional<Mode> parse_mode(std::string_view s) {
    for (Mode m : {Mode::ordinary, Mode::strong, Mode::uniform, Mode::rel_strong, Mode::rel_uniform}) {
        if (s == to_string(m)) return m;
    }
    return std::nullopt;
}

std::string_view to_string(Side s) { return s == Side::p ? "P" : "Q"; }

}  // namespace lpeq
