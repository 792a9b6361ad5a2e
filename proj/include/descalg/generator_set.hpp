#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace descalg {

/// Index of a simple generator, 0-based internally.
using Generator = std::uint8_t;

/// A reduced (or not) word in the simple generators.
using Word = std::vector<Generator>;

inline constexpr unsigned kMaxRank = 32;

/// Subset of the simple generators S, stored as a bitmask.
///
/// Internally 0-based; all parsing and printing is 1-based so that "1,3"
/// means {s1, s3}. Ordering is lexicographic on the sorted index list, which
/// is the order used for every table this library emits.
class GeneratorSet {
public:
    constexpr GeneratorSet() = default;
    constexpr explicit GeneratorSet(std::uint32_t bits) : bits_(bits) {}

    static constexpr GeneratorSet full(unsigned rank) {
        return GeneratorSet(rank >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << rank) - 1));
    }
    static constexpr GeneratorSet single(Generator s) { return GeneratorSet(std::uint32_t{1} << s); }

    static GeneratorSet from_indices(const std::vector<unsigned>& zero_based) {
        GeneratorSet g;
        for (unsigned i : zero_based) g.insert(static_cast<Generator>(i));
        return g;
    }

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr unsigned size() const { return static_cast<unsigned>(std::popcount(bits_)); }
    constexpr bool contains(Generator s) const { return (bits_ >> s) & 1u; }
    constexpr void insert(Generator s) { bits_ |= std::uint32_t{1} << s; }
    constexpr void erase(Generator s) { bits_ &= ~(std::uint32_t{1} << s); }
    constexpr bool is_subset_of(GeneratorSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool within_rank(unsigned rank) const { return is_subset_of(full(rank)); }
    constexpr GeneratorSet complement(unsigned rank) const { return GeneratorSet(full(rank).bits_ & ~bits_); }

    constexpr GeneratorSet operator|(GeneratorSet o) const { return GeneratorSet(bits_ | o.bits_); }
    constexpr GeneratorSet operator&(GeneratorSet o) const { return GeneratorSet(bits_ & o.bits_); }

    /// Sorted 0-based indices.
    std::vector<unsigned> indices() const {
        std::vector<unsigned> out;
        for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<unsigned>(std::countr_zero(b)));
        return out;
    }

    /// Sorted 1-based indices, the I/O convention.
    std::vector<unsigned> one_based() const {
        auto v = indices();
        for (auto& i : v) ++i;
        return v;
    }

    constexpr bool operator==(const GeneratorSet&) const = default;

    std::strong_ordering operator<=>(const GeneratorSet& o) const {
        // Lexicographic on sorted index lists: compare lowest differing bit.
        if (bits_ == o.bits_) return std::strong_ordering::equal;
        const std::uint32_t diff = bits_ ^ o.bits_;
        const std::uint32_t low = diff & (~diff + 1);
        const std::uint32_t below = low - 1;
        // Common prefix is the bits below `low`. The set that owns `low`
        // has the smaller element at that position, unless the other set has
        // no further elements at all (then it is a proper prefix).
        const bool mine = (bits_ & low) != 0;
        const std::uint32_t other_rest = (mine ? o.bits_ : bits_) & ~below;
        if (other_rest == 0) return mine ? std::strong_ordering::greater : std::strong_ordering::less;
        return mine ? std::strong_ordering::less : std::strong_ordering::greater;
    }

    /// "1,3" (empty string for the empty set).
    std::string to_string() const {
        std::string out;
        for (unsigned i : one_based()) {
            if (!out.empty()) out += ',';
            out += std::to_string(i);
        }
        return out;
    }

    /// Subscript notation: "Y_∅", "Y_1", "Y_{1,3}".
    std::string subscript(std::string_view letter = "Y") const {
        std::string out(letter);
        out += '_';
        if (empty()) return out + "∅";
        if (size() == 1) return out + to_string();
        return out + "{" + to_string() + "}";
    }

    /// Parses a comma-separated list of 1-based indices. "", "-", "e" and
    /// "{}" denote the empty set. With `dihedral_aliases`, "s" and "t" stand
    /// for 1 and 2.
    static GeneratorSet parse(std::string_view text, unsigned rank, bool dihedral_aliases = false) {
        GeneratorSet g;
        auto trim = [](std::string_view s) {
            while (!s.empty() && (s.front() == ' ' || s.front() == '{')) s.remove_prefix(1);
            while (!s.empty() && (s.back() == ' ' || s.back() == '}')) s.remove_suffix(1);
            return s;
        };
        text = trim(text);
        if (text.empty() || text == "-" || text == "e") return g;
        while (!text.empty()) {
            const auto comma = text.find(',');
            std::string_view tok = trim(text.substr(0, comma));
            text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
            unsigned idx = 0;
            if (dihedral_aliases && tok == "s") {
                idx = 1;
            } else if (dihedral_aliases && tok == "t") {
                idx = 2;
            } else {
                if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
                    throw std::invalid_argument("bad generator index '" + std::string(tok) + "'");
                idx = static_cast<unsigned>(std::stoul(std::string(tok)));
            }
            if (idx < 1 || idx > rank)
                throw std::invalid_argument("generator index " + std::to_string(idx) + " outside 1.." +
                                            std::to_string(rank));
            g.insert(static_cast<Generator>(idx - 1));
        }
        return g;
    }

private:
    std::uint32_t bits_ = 0;
};

/// All 2^rank subsets, in GeneratorSet order.
inline std::vector<GeneratorSet> all_subsets(unsigned rank) {
    if (rank >= 31) throw std::length_error("rank too large to enumerate subsets");
    std::vector<GeneratorSet> out;
    out.reserve(std::size_t{1} << rank);
    for (std::uint32_t b = 0; b < (std::uint32_t{1} << rank); ++b) out.emplace_back(b);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace descalg
