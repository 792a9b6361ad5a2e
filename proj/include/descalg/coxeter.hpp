#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "descalg/errors.hpp"
#include "descalg/generator_set.hpp"

namespace descalg {

using ElementId = std::uint32_t;

inline constexpr std::size_t kDefaultElementCap = 200000;

/// Coxeter matrix: m[s][t] is the order of st, 1 on the diagonal, 0 for infinity.
using CoxeterMatrix = std::vector<std::vector<unsigned>>;

/// Descriptor of a Coxeter system (W, S).
struct CoxeterSpec {
    enum class Kind { symmetric, dihedral, matrix };

    Kind kind = Kind::symmetric;
    /// Degree n for symmetric(n), order m for dihedral(m). Unused for matrix.
    unsigned order = 1;
    CoxeterMatrix m;
    std::size_t element_cap = kDefaultElementCap;
    /// Optional display name; matrix specs default to "W<rank>".
    std::string name;

    static CoxeterSpec symmetric(unsigned n, std::size_t cap = kDefaultElementCap) {
        return CoxeterSpec{Kind::symmetric, n, {}, cap, {}};
    }
    static CoxeterSpec dihedral(unsigned m, std::size_t cap = kDefaultElementCap) {
        return CoxeterSpec{Kind::dihedral, m, {}, cap, {}};
    }
    static CoxeterSpec matrix(CoxeterMatrix m, std::size_t cap = kDefaultElementCap, std::string name = {}) {
        return CoxeterSpec{Kind::matrix, 0, std::move(m), cap, std::move(name)};
    }

    unsigned rank() const {
        switch (kind) {
            case Kind::symmetric: return order == 0 ? 0 : order - 1;
            case Kind::dihedral: return 2;
            case Kind::matrix: return static_cast<unsigned>(m.size());
        }
        return 0;
    }

    /// Throws InvalidSpec when the descriptor violates its invariants.
    void validate() const {
        if (element_cap == 0) throw InvalidSpec("element_cap must be positive");
        switch (kind) {
            case Kind::symmetric:
                if (order < 1) throw InvalidSpec("symmetric group needs n >= 1");
                if (order > 64) throw InvalidSpec("symmetric group degree too large");
                break;
            case Kind::dihedral:
                if (order < 2) throw InvalidSpec("dihedral group needs m >= 2");
                break;
            case Kind::matrix: {
                const std::size_t r = m.size();
                if (r == 0) throw InvalidSpec("Coxeter matrix must have positive rank");
                if (r > 16) throw InvalidSpec("Coxeter matrix rank above 16 is not supported");
                for (std::size_t i = 0; i < r; ++i) {
                    if (m[i].size() != r) throw InvalidSpec("Coxeter matrix is not square");
                    if (m[i][i] != 1) throw InvalidSpec("Coxeter matrix diagonal must be 1");
                }
                for (std::size_t i = 0; i < r; ++i)
                    for (std::size_t j = 0; j < r; ++j) {
                        if (m[i][j] != m[j][i]) throw InvalidSpec("Coxeter matrix is not symmetric");
                        if (i != j && m[i][j] == 1) throw InvalidSpec("off-diagonal Coxeter entries must be >= 2 or 0");
                    }
                break;
            }
        }
    }

    /// The Coxeter matrix for every kind.
    CoxeterMatrix coxeter_matrix() const {
        if (kind == Kind::matrix) return m;
        const unsigned r = rank();
        CoxeterMatrix out(r, std::vector<unsigned>(r, 2));
        for (unsigned i = 0; i < r; ++i) out[i][i] = 1;
        if (kind == Kind::dihedral) {
            out[0][1] = out[1][0] = order;
        } else {
            for (unsigned i = 0; i + 1 < r; ++i) out[i][i + 1] = out[i + 1][i] = 3;
        }
        return out;
    }

    std::string label() const {
        if (!name.empty()) return name;
        switch (kind) {
            case Kind::symmetric: return "S" + std::to_string(order);
            case Kind::dihedral: return "I" + std::to_string(order);
            case Kind::matrix: return "W" + std::to_string(rank());
        }
        return {};
    }
};

/// A group element. `one_line` is the payload of the symmetric realization
/// (values 1..n); `word` is the lexicographically least reduced word and is
/// kept for every realization.
struct Element {
    std::vector<std::uint8_t> one_line;
    Word word;
    unsigned length = 0;
};

namespace words {

/// All words reachable from `w` by one braid move.
inline std::vector<Word> braid_neighbors(const Word& w, const CoxeterMatrix& m) {
    std::vector<Word> out;
    const std::size_t n = w.size();
    for (std::size_t p = 0; p + 1 < n; ++p) {
        const Generator a = w[p];
        const Generator b = w[p + 1];
        if (a == b) continue;
        const unsigned mab = m[a][b];
        if (mab == 0 || p + mab > n) continue;
        bool alternating = true;
        for (unsigned k = 0; k < mab && alternating; ++k) alternating = w[p + k] == (k % 2 == 0 ? a : b);
        if (!alternating) continue;
        Word v = w;
        for (unsigned k = 0; k < mab; ++k) v[p + k] = (k % 2 == 0 ? b : a);
        out.push_back(std::move(v));
    }
    return out;
}

/// Closure of `w` under braid moves, sorted (front() is the lex-least word).
inline std::vector<Word> braid_closure(const Word& w, const CoxeterMatrix& m) {
    std::set<Word> seen{w};
    std::vector<Word> frontier{w};
    while (!frontier.empty()) {
        std::vector<Word> next;
        for (const auto& u : frontier)
            for (auto& v : braid_neighbors(u, m))
                if (seen.insert(v).second) next.push_back(std::move(v));
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

inline bool has_square(const Word& w) {
    return std::adjacent_find(w.begin(), w.end()) != w.end();
}

/// Tits: a word is reduced iff no word braid-equivalent to it has two equal adjacent letters.
inline bool is_reduced(const Word& w, const CoxeterMatrix& m) {
    for (const auto& v : braid_closure(w, m))
        if (has_square(v)) return false;
    return true;
}

/// Lex-least word in the braid class of a reduced word.
inline Word canonical(const Word& reduced, const CoxeterMatrix& m) {
    return braid_closure(reduced, m).front();
}

inline std::string key(std::span<const std::uint8_t> bytes) {
    return {reinterpret_cast<const char*>(bytes.data()), bytes.size()};
}

}  // namespace words

class CoxeterSystem;
CoxeterSystem build_system(const CoxeterSpec& spec);

/// A finite Coxeter system with every element enumerated and both Cayley
/// tables filled. Immutable once built.
///
/// Element ids follow breadth-first order by length from the identity, with
/// ties broken by the canonical form (one-line notation for symmetric groups,
/// lex-least reduced word otherwise). Id 0 is the identity.
class CoxeterSystem {
public:
    const CoxeterSpec& spec() const { return spec_; }
    unsigned rank() const { return rank_; }
    std::size_t size() const { return elements_.size(); }
    bool is_symmetric() const { return spec_.kind == CoxeterSpec::Kind::symmetric; }
    /// Degree n of the symmetric realization.
    unsigned degree() const { return spec_.order; }
    const CoxeterMatrix& matrix() const { return matrix_; }
    unsigned coxeter_entry(Generator s, Generator t) const { return matrix_[s][t]; }
    GeneratorSet all_generators() const { return GeneratorSet::full(rank_); }

    const Element& element(ElementId w) const { return elements_[w]; }
    ElementId identity() const { return 0; }
    ElementId longest() const { return longest_; }
    ElementId generator(Generator s) const { return right(identity(), s); }

    /// w·s
    ElementId right(ElementId w, Generator s) const { return right_[std::size_t{w} * rank_ + s]; }
    /// s·w
    ElementId left(Generator s, ElementId w) const { return left_[std::size_t{w} * rank_ + s]; }

    unsigned length(ElementId w) const { return elements_[w].length; }

    /// R(w) = { s : l(s·w) < l(w) }.
    GeneratorSet recoil_set(ElementId w) const { return recoils_[w]; }

    /// D(w) = { s : l(w·s) < l(w) }.
    GeneratorSet descent_set(ElementId w) const {
        GeneratorSet d;
        for (Generator s = 0; s < rank_; ++s)
            if (length(right(w, s)) < length(w)) d.insert(s);
        return d;
    }

    /// u∘v; for permutations (u∘v)(k) = u(v(k)).
    ElementId multiply(ElementId u, ElementId v) const {
        if (is_symmetric()) {
            const auto& a = elements_[u].one_line;
            const auto& b = elements_[v].one_line;
            std::vector<std::uint8_t> c(a.size());
            for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[b[k] - 1];
            return index_.at(words::key(c));
        }
        return walk(u, elements_[v].word);
    }

    ElementId inverse(ElementId w) const {
        if (is_symmetric()) {
            const auto& a = elements_[w].one_line;
            std::vector<std::uint8_t> c(a.size());
            for (std::size_t k = 0; k < a.size(); ++k) c[a[k] - 1] = static_cast<std::uint8_t>(k + 1);
            return index_.at(words::key(c));
        }
        Word rev(elements_[w].word.rbegin(), elements_[w].word.rend());
        return walk(identity(), rev);
    }

    /// Right weak order: u ≤ w iff l(u) + l(u⁻¹w) = l(w).
    bool weak_leq(ElementId u, ElementId w) const {
        return length(u) + length(multiply(inverse(u), w)) == length(w);
    }

    /// Product s_{a1} s_{a2} ... of an arbitrary (not necessarily reduced) word.
    ElementId evaluate(std::span<const Generator> word) const { return walk(identity(), word); }

    /// Right-multiplies `start` by the letters of `word` in order.
    ElementId walk(ElementId start, std::span<const Generator> word) const {
        for (Generator s : word) {
            if (s >= rank_) throw std::out_of_range("generator index out of range");
            start = right(start, s);
        }
        return start;
    }

    bool is_generator(ElementId w) const { return length(w) == 1; }

    /// Lookup by one-line notation (symmetric realization only).
    std::optional<ElementId> find(std::span<const std::uint8_t> one_line) const {
        if (!is_symmetric()) return std::nullopt;
        auto it = index_.find(words::key(one_line));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    std::optional<ElementId> find_permutation(const std::vector<int>& one_line) const {
        std::vector<std::uint8_t> b;
        b.reserve(one_line.size());
        for (int x : one_line) {
            if (x < 1 || x > 255) return std::nullopt;
            b.push_back(static_cast<std::uint8_t>(x));
        }
        return find(b);
    }

    /// Human label: one-line digits ("2134"), letters for dihedral ("sts"),
    /// "s1s2" style for matrix groups, "e" for the identity of word realizations.
    std::string label(ElementId w) const {
        const Element& e = elements_[w];
        std::string out;
        if (is_symmetric()) {
            for (std::size_t k = 0; k < e.one_line.size(); ++k) {
                if (degree() > 9 && k > 0) out += ' ';
                out += std::to_string(e.one_line[k]);
            }
            return out;
        }
        if (e.word.empty()) return "e";
        for (Generator s : e.word) {
            if (spec_.kind == CoxeterSpec::Kind::dihedral) out += (s == 0 ? 's' : 't');
            else out += "s" + std::to_string(s + 1);
        }
        return out;
    }

    /// Inverse of label(), also accepting any word ("1,2,1" or "sts") for
    /// word realizations. Throws std::invalid_argument on bad input.
    ElementId parse(std::string_view text) const {
        if (is_symmetric()) {
            std::vector<int> vals;
            if (text.find(' ') != std::string_view::npos || text.find(',') != std::string_view::npos) {
                std::string tok;
                for (char c : std::string(text) + ' ') {
                    if (c == ' ' || c == ',') {
                        if (!tok.empty()) vals.push_back(std::stoi(tok));
                        tok.clear();
                    } else {
                        tok += c;
                    }
                }
            } else {
                for (char c : text) {
                    if (c < '0' || c > '9') throw std::invalid_argument("bad permutation '" + std::string(text) + "'");
                    vals.push_back(c - '0');
                }
            }
            if (auto id = find_permutation(vals)) return *id;
            throw std::invalid_argument("not a permutation of 1.." + std::to_string(degree()) + ": '" +
                                        std::string(text) + "'");
        }
        Word w;
        if (text == "e" || text.empty()) return identity();
        if (spec_.kind == CoxeterSpec::Kind::dihedral && text.find_first_not_of("st") == std::string_view::npos) {
            for (char c : text) w.push_back(c == 's' ? 0 : 1);
            return evaluate(w);
        }
        std::string tok;
        for (char c : std::string(text) + ',') {
            if (c == ',' || c == 's' || c == ' ') {
                if (!tok.empty()) {
                    const unsigned idx = static_cast<unsigned>(std::stoul(tok));
                    if (idx < 1 || idx > rank_) throw std::invalid_argument("generator out of range in '" + std::string(text) + "'");
                    w.push_back(static_cast<Generator>(idx - 1));
                }
                tok.clear();
            } else if (c >= '0' && c <= '9') {
                tok += c;
            } else {
                throw std::invalid_argument("bad word '" + std::string(text) + "'");
            }
        }
        return evaluate(w);
    }

private:
    friend CoxeterSystem build_system(const CoxeterSpec& spec);

    CoxeterSpec spec_;
    CoxeterMatrix matrix_;
    unsigned rank_ = 0;
    std::vector<Element> elements_;
    std::vector<ElementId> right_;
    std::vector<ElementId> left_;
    std::vector<GeneratorSet> recoils_;
    ElementId longest_ = 0;
    std::unordered_map<std::string, ElementId> index_;  // one-line key, symmetric only

    void enumerate_permutations();
    void enumerate_words();
    void finish();
};

/// Positional recoil test for a one-line permutation: i+1 appears before i.
inline GeneratorSet recoil_set_positional(std::span<const std::uint8_t> one_line) {
    std::vector<std::size_t> pos(one_line.size() + 1);
    for (std::size_t k = 0; k < one_line.size(); ++k) pos[one_line[k]] = k;
    GeneratorSet r;
    for (std::size_t i = 1; i < one_line.size(); ++i)
        if (pos[i + 1] < pos[i]) r.insert(static_cast<Generator>(i - 1));
    return r;
}

/// Positional descent test: σ_i > σ_{i+1}.
inline GeneratorSet descent_set_positional(std::span<const std::uint8_t> one_line) {
    GeneratorSet d;
    for (std::size_t i = 0; i + 1 < one_line.size(); ++i)
        if (one_line[i] > one_line[i + 1]) d.insert(static_cast<Generator>(i));
    return d;
}

inline unsigned inversion_count(std::span<const std::uint8_t> one_line) {
    unsigned inv = 0;
    for (std::size_t i = 0; i < one_line.size(); ++i)
        for (std::size_t j = i + 1; j < one_line.size(); ++j)
            if (one_line[i] > one_line[j]) ++inv;
    return inv;
}

inline void CoxeterSystem::enumerate_permutations() {
    const unsigned n = spec_.order;
    std::size_t factorial = 1;
    for (unsigned k = 2; k <= n; ++k) {
        factorial *= k;
        if (factorial > spec_.element_cap)
            throw CapExceeded("S" + std::to_string(n) + " exceeds element cap " + std::to_string(spec_.element_cap));
    }
    std::vector<std::vector<std::uint8_t>> level(1);
    for (unsigned k = 1; k <= n; ++k) level[0].push_back(static_cast<std::uint8_t>(k));
    unsigned len = 0;
    while (!level.empty()) {
        std::sort(level.begin(), level.end());
        std::vector<std::vector<std::uint8_t>> next;
        for (auto& p : level) {
            const auto id = static_cast<ElementId>(elements_.size());
            index_.emplace(words::key(p), id);
            for (std::size_t i = 0; i + 1 < p.size(); ++i) {
                if (p[i] > p[i + 1]) continue;
                auto q = p;
                std::swap(q[i], q[i + 1]);
                next.push_back(std::move(q));
            }
            elements_.push_back(Element{std::move(p), {}, len});
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        level = std::move(next);
        ++len;
    }
    right_.resize(elements_.size() * rank_);
    left_.resize(elements_.size() * rank_);
    for (ElementId w = 0; w < elements_.size(); ++w) {
        for (Generator s = 0; s < rank_; ++s) {
            auto r = elements_[w].one_line;
            std::swap(r[s], r[s + 1]);
            right_[std::size_t{w} * rank_ + s] = index_.at(words::key(r));
            auto l = elements_[w].one_line;
            for (auto& x : l) {
                if (x == s + 1) x = static_cast<std::uint8_t>(s + 2);
                else if (x == s + 2) x = static_cast<std::uint8_t>(s + 1);
            }
            left_[std::size_t{w} * rank_ + s] = index_.at(words::key(l));
        }
    }
    // Lex-least reduced word: smallest left descent first.
    for (ElementId w = 1; w < elements_.size(); ++w) {
        for (Generator s = 0; s < rank_; ++s) {
            const ElementId sw = left(s, w);
            if (elements_[sw].length < elements_[w].length) {
                Word word{s};
                word.insert(word.end(), elements_[sw].word.begin(), elements_[sw].word.end());
                elements_[w].word = std::move(word);
                break;
            }
        }
    }
}

// Level-by-level construction for word realizations. Level L is built from
// level L-1 as the products w·s with s an ascent of w. Two products coincide
// only through a dihedral relation: x = w·s also ends in t exactly when the
// alternating descent chain w, wt, wts, ... has length m(s,t) - 1, in which
// case x·t is reached by walking back down and up the other side of the
// 2m-gon. Left multiplication follows from s·(u'r) = (s·u')·r.
inline void CoxeterSystem::enumerate_words() {
    constexpr ElementId kUnset = UINT32_MAX;
    using Pair = std::pair<ElementId, Generator>;
    auto R = [&](ElementId w, Generator s) -> ElementId& { return right_[std::size_t{w} * rank_ + s]; };
    auto L = [&](ElementId w, Generator s) -> ElementId& { return left_[std::size_t{w} * rank_ + s]; };

    elements_.push_back(Element{{}, {}, 0});
    right_.assign(rank_, kUnset);
    left_.assign(rank_, kUnset);
    ElementId level_start = 0;
    ElementId level_end = 1;
    unsigned len = 0;
    while (true) {
        ++len;
        std::map<Pair, std::size_t> slot;
        std::vector<std::vector<Pair>> preds;
        for (ElementId w = level_start; w < level_end; ++w) {
            for (Generator s = 0; s < rank_; ++s) {
                if (R(w, s) != kUnset || slot.count({w, s})) continue;
                std::vector<Pair> list{{w, s}};
                for (Generator t = 0; t < rank_; ++t) {
                    const unsigned m = matrix_[s][t];
                    if (t == s || m == 0) continue;
                    ElementId u = w;
                    unsigned k = 0;
                    Generator next = t;
                    while (k + 1 < m) {
                        const ElementId d = R(u, next);
                        if (d == kUnset || elements_[d].length >= elements_[u].length) break;
                        u = d;
                        ++k;
                        next = next == t ? s : t;
                    }
                    if (k + 1 != m) continue;
                    // x·t = u · (alternating word of length m-1 ending in s)
                    Generator c = (m - 1) % 2 == 1 ? s : t;
                    for (unsigned j = 0; j + 1 < m; ++j) {
                        u = R(u, c);
                        c = c == s ? t : s;
                    }
                    list.push_back({u, t});
                }
                for (const auto& p : list) slot.emplace(p, preds.size());
                preds.push_back(std::move(list));
            }
        }
        if (preds.empty()) break;
        if (elements_.size() + preds.size() > spec_.element_cap)
            throw CapExceeded(spec_.label() + " exceeds element cap " + std::to_string(spec_.element_cap) +
                              " (infinite or too large group)");

        const auto base = static_cast<ElementId>(elements_.size());
        const std::size_t count = preds.size();
        elements_.resize(base + count);
        right_.resize((base + count) * rank_, kUnset);
        left_.resize((base + count) * rank_, kUnset);
        for (std::size_t i = 0; i < count; ++i) {
            const auto x = static_cast<ElementId>(base + i);
            elements_[x].length = len;
            for (const auto& [w, r] : preds[i]) {
                R(w, r) = x;
                R(x, r) = w;
            }
        }
        for (ElementId u = level_start; u < level_end; ++u) {
            for (Generator s = 0; s < rank_; ++s) {
                if (L(u, s) != kUnset) continue;
                ElementId z = kUnset;
                if (len == 1) {
                    z = R(u, s);
                } else {
                    Generator r = 0;
                    while (R(u, r) == kUnset || elements_[R(u, r)].length > elements_[u].length) ++r;
                    z = R(L(R(u, r), s), r);
                }
                L(u, s) = z;
                L(z, s) = u;
            }
        }
        for (std::size_t i = 0; i < count; ++i) {
            const auto x = static_cast<ElementId>(base + i);
            Generator s = 0;
            while (L(x, s) == kUnset) ++s;
            Word word{s};
            const Word& rest = elements_[L(x, s)].word;
            word.insert(word.end(), rest.begin(), rest.end());
            elements_[x].word = std::move(word);
        }

        // Renumber the new level by canonical word.
        std::vector<ElementId> order(count);
        for (std::size_t i = 0; i < count; ++i) order[i] = static_cast<ElementId>(base + i);
        std::sort(order.begin(), order.end(),
                  [&](ElementId a, ElementId b) { return elements_[a].word < elements_[b].word; });
        std::vector<ElementId> new_id(count);
        for (std::size_t k = 0; k < count; ++k) new_id[order[k] - base] = static_cast<ElementId>(base + k);
        auto remap = [&](ElementId v) { return v != kUnset && v >= base ? new_id[v - base] : v; };
        std::vector<Element> moved(count);
        std::vector<ElementId> moved_right(count * rank_);
        std::vector<ElementId> moved_left(count * rank_);
        for (std::size_t k = 0; k < count; ++k) {
            const ElementId old = order[k];
            moved[k] = std::move(elements_[old]);
            for (Generator s = 0; s < rank_; ++s) {
                moved_right[k * rank_ + s] = R(old, s);
                moved_left[k * rank_ + s] = L(old, s);
            }
        }
        for (std::size_t k = 0; k < count; ++k) {
            elements_[base + k] = std::move(moved[k]);
            for (Generator s = 0; s < rank_; ++s) {
                R(static_cast<ElementId>(base + k), s) = moved_right[k * rank_ + s];
                L(static_cast<ElementId>(base + k), s) = moved_left[k * rank_ + s];
            }
        }
        for (std::size_t i = std::size_t{level_start} * rank_; i < right_.size(); ++i) {
            right_[i] = remap(right_[i]);
            left_[i] = remap(left_[i]);
        }
        level_start = base;
        level_end = static_cast<ElementId>(base + count);
    }
    for (std::size_t i = 0; i < right_.size(); ++i)
        if (right_[i] == kUnset || left_[i] == kUnset) throw Error("incomplete Cayley table for " + spec_.label());
}

inline void CoxeterSystem::finish() {
    recoils_.resize(elements_.size());
    unsigned max_len = 0;
    for (ElementId w = 0; w < elements_.size(); ++w) {
        GeneratorSet r;
        for (Generator s = 0; s < rank_; ++s)
            if (length(left(s, w)) < length(w)) r.insert(s);
        recoils_[w] = r;
        if (elements_[w].length >= max_len) {
            max_len = elements_[w].length;
            longest_ = w;
        }
    }
}

/// Enumerates W breadth-first from the identity and fills both Cayley tables.
/// Throws InvalidSpec for malformed descriptors and CapExceeded when more
/// than `element_cap` elements appear.
inline CoxeterSystem build_system(const CoxeterSpec& spec) {
    spec.validate();
    CoxeterSystem sys;
    sys.spec_ = spec;
    sys.matrix_ = spec.coxeter_matrix();
    sys.rank_ = spec.rank();
    if (spec.kind == CoxeterSpec::Kind::symmetric) sys.enumerate_permutations();
    else sys.enumerate_words();
    sys.finish();
    return sys;
}

/// Exchange property: given a reduced word for w and a left descent s of w,
/// deletes one letter so the result is a reduced word for s·w. The smallest
/// valid deletion position is used.
inline Word apply_exchange(const CoxeterSystem& sys, const Word& word, Generator s) {
    if (s >= sys.rank()) throw std::out_of_range("generator index out of range");
    const ElementId w = sys.evaluate(word);
    if (sys.length(w) != word.size()) throw std::invalid_argument("apply_exchange: word is not reduced");
    const ElementId target = sys.left(s, w);
    if (sys.length(target) > sys.length(w))
        throw NotADescent("s" + std::to_string(s + 1) + " is not a left descent of " + sys.label(w));
    for (std::size_t i = 0; i < word.size(); ++i) {
        Word cand;
        cand.reserve(word.size() - 1);
        cand.insert(cand.end(), word.begin(), word.begin() + static_cast<std::ptrdiff_t>(i));
        cand.insert(cand.end(), word.begin() + static_cast<std::ptrdiff_t>(i) + 1, word.end());
        if (sys.evaluate(cand) == target) return cand;
    }
    throw Error("exchange property failed");  // unreachable in a Coxeter group
}

}  // namespace descalg
