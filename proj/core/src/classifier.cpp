#include "lpeq/classifier.hpp"

#include "lpeq/transforms.hpp"

#include <algorithm>

namespace lpeq {

ProgramClass classify(const Program& p) {
    const auto& rs = p.rules();
    auto all = [&](auto pred) { return std::all_of(rs.begin(), rs.end(), pred); };
    unsigned f = 0;
    if (all([](const Rule& r) { return r.is_horn(); })) f |= kHorn;
    if (all([](const Rule& r) { return r.is_definite(); })) f |= kDefinite;
    if (all([](const Rule& r) { return r.is_unary(); })) f |= kUnary;
    if (all([](const Rule& r) { return r.is_normal(); })) f |= kNormal;
    if (all([](const Rule& r) { return r.is_positive(); })) f |= kPositive;
    if (!(f & kNormal)) f |= kDisjunctive;
    if ((f & kNormal) || is_hcf(p)) f |= kHcf;
    return ProgramClass{f};
}

unsigned implied_flags(unsigned flags) {
    if (flags & kUnary) flags |= kDefinite | kHorn;
    if (flags & kHorn) flags |= kNormal | kPositive;
    if (flags & kNormal) flags |= kHcf;
    return flags;
}

std::string describe(ProgramClass c) {
    static constexpr std::pair<ClassFlag, const char*> names[] = {
        {kHorn, "horn"},         {kDefinite, "definite"}, {kUnary, "unary"},         {kNormal, "normal"},
        {kPositive, "positive"}, {kHcf, "hcf"},           {kDisjunctive, "disjunctive"},
    };
    std::string out;
    for (const auto& [flag, name] : names) {
        if (!c.has(flag)) continue;
        if (!out.empty()) out += ' ';
        out += name;
    }
    return out;
}

}  // namespace lpeq
