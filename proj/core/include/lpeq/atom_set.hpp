#pragma once

#include <bit>
#include <compare>
#include <initializer_list>
#include <type_traits>
#include <cstdint>
#include <vector>

namespace lpeq {

using AtomId = std::uint32_t;

/// Maximum number of atoms a single universe can hold (bit width of AtomSet).
inline constexpr std::size_t kMaxUniverseAtoms = 64;

/// Set of atom ids backed by a 64-bit mask. Used both for rule components
/// and for interpretations (an interpretation is the set of true atoms).
class AtomSet {
public:
    constexpr AtomSet() = default;
    constexpr explicit AtomSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr AtomSet single(AtomId id) { return AtomSet{std::uint64_t{1} << id}; }
    /// The set {0, ..., n-1}.
    static constexpr AtomSet first(std::size_t n) {
        return AtomSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
    }
    static AtomSet of(std::initializer_list<AtomId> ids) {
        AtomSet s;
        for (AtomId id : ids) s.insert(id);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool contains(AtomId id) const { return (bits_ >> id) & 1u; }
    constexpr bool subset_of(AtomSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool proper_subset_of(AtomSet o) const { return subset_of(o) && bits_ != o.bits_; }
    constexpr bool intersects(AtomSet o) const { return (bits_ & o.bits_) != 0; }

    constexpr void insert(AtomId id) { bits_ |= std::uint64_t{1} << id; }
    constexpr void erase(AtomId id) { bits_ &= ~(std::uint64_t{1} << id); }

    constexpr AtomSet operator|(AtomSet o) const { return AtomSet{bits_ | o.bits_}; }
    constexpr AtomSet operator&(AtomSet o) const { return AtomSet{bits_ & o.bits_}; }
    constexpr AtomSet operator-(AtomSet o) const { return AtomSet{bits_ & ~o.bits_}; }
    constexpr AtomSet& operator|=(AtomSet o) { bits_ |= o.bits_; return *this; }
    constexpr AtomSet& operator&=(AtomSet o) { bits_ &= o.bits_; return *this; }
    constexpr AtomSet& operator-=(AtomSet o) { bits_ &= ~o.bits_; return *this; }

    /// Smallest member; undefined on the empty set.
    constexpr AtomId min() const { return static_cast<AtomId>(std::countr_zero(bits_)); }
    /// One past the largest member (0 for the empty set).
    constexpr std::size_t width() const { return 64u - static_cast<std::size_t>(std::countl_zero(bits_)); }

    std::vector<AtomId> ids() const {
        std::vector<AtomId> out;
        out.reserve(size());
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<AtomId>(std::countr_zero(b)));
        return out;
    }

    /// Applies f to every id in ascending order.
    template <class F>
    constexpr void for_each(F&& f) const {
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(static_cast<AtomId>(std::countr_zero(b)));
    }

    friend constexpr bool operator==(AtomSet, AtomSet) = default;
    friend constexpr auto operator<=>(AtomSet a, AtomSet b) { return a.bits_ <=> b.bits_; }

private:
    std::uint64_t bits_ = 0;
};

/// An interpretation is identified with the set of atoms it makes true.
using Interpretation = AtomSet;

/// Iterates all subsets of `base` in ascending order of their mask value.
/// `f` may return false to stop early; the function then returns false.
template <class F>
constexpr bool for_each_subset(AtomSet base, F&& f) {
    const std::uint64_t m = base.bits();
    std::uint64_t s = 0;
    for (;;) {
        if constexpr (std::is_same_v<decltype(f(AtomSet{})), bool>) {
            if (!f(AtomSet{s})) return false;
        } else {
            f(AtomSet{s});
        }
        if (s == m) return true;
        s = (s - m) & m;
    }
}

/// Subsets of `base` ordered by cardinality, then by mask value.
std::vector<AtomSet> subsets_by_size(AtomSet base);

}  // namespace lpeq
