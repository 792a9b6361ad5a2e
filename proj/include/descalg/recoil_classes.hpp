#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "descalg/coxeter.hpp"
#include "descalg/graph.hpp"

namespace descalg {

/// The recoil class Y_I with the graph induced from the right Cayley graph.
struct RecoilClass {
    GeneratorSet subset;
    /// Sorted element ids; graph vertices are positions in this list.
    std::vector<ElementId> members;
    LabeledGraph graph;
    ElementId alpha = 0;
    ElementId beta = 0;

    std::size_t size() const { return members.size(); }

    std::optional<std::uint32_t> position(ElementId w) const {
        auto it = std::lower_bound(members.begin(), members.end(), w);
        if (it == members.end() || *it != w) return std::nullopt;
        return static_cast<std::uint32_t>(it - members.begin());
    }

    bool contains(ElementId w) const { return position(w).has_value(); }
};

/// True iff R(w) = R(w·s).
inline bool same_class_edge(const CoxeterSystem& sys, ElementId w, Generator s) {
    return sys.recoil_set(w) == sys.recoil_set(sys.right(w, s));
}

/// Conjugation criterion: R(w·s) = R(w) iff w s w⁻¹ is not a simple generator.
inline bool same_class_edge_conjugation(const CoxeterSystem& sys, ElementId w, Generator s) {
    const ElementId conj = sys.multiply(sys.multiply(w, sys.generator(s)), sys.inverse(w));
    return !sys.is_generator(conj);
}

/// Positional criterion for permutations: |σ_i − σ_{i+1}| ≥ 2.
inline bool same_class_edge_positional(const CoxeterSystem& sys, ElementId w, Generator s) {
    if (!sys.is_symmetric()) throw std::logic_error("positional criterion needs the symmetric realization");
    const auto& p = sys.element(w).one_line;
    const int a = p[s];
    const int b = p[s + 1];
    return (a > b ? a - b : b - a) >= 2;
}

/// Full scan of W for { w : R(w) = I }, with induced class edges.
inline RecoilClass recoil_class(const CoxeterSystem& sys, GeneratorSet subset) {
    if (!subset.within_rank(sys.rank())) throw std::out_of_range("subset exceeds rank");
    RecoilClass c;
    c.subset = subset;
    for (ElementId w = 0; w < sys.size(); ++w)
        if (sys.recoil_set(w) == subset) c.members.push_back(w);
    c.graph.resize(c.members.size());
    for (std::uint32_t i = 0; i < c.members.size(); ++i) {
        for (Generator s = 0; s < sys.rank(); ++s) {
            if (auto j = c.position(sys.right(c.members[i], s))) c.graph[i].push_back({*j, s});
        }
    }
    if (!c.members.empty()) {
        auto by_length = [&](ElementId a, ElementId b) { return sys.length(a) < sys.length(b); };
        c.alpha = *std::min_element(c.members.begin(), c.members.end(), by_length);
        c.beta = *std::max_element(c.members.begin(), c.members.end(), by_length);
    }
    return c;
}

/// Every class, indexed by GeneratorSet::bits().
inline std::vector<RecoilClass> all_recoil_classes(const CoxeterSystem& sys) {
    std::vector<RecoilClass> out(std::size_t{1} << sys.rank());
    for (std::uint32_t b = 0; b < out.size(); ++b) out[b] = recoil_class(sys, GeneratorSet(b));
    return out;
}

/// α_I as a one-line permutation of 1..n: every maximal block of consecutive
/// positions joined by generators of I is reversed. Needs no enumeration.
inline std::vector<int> alpha_one_line(unsigned n, GeneratorSet subset) {
    std::vector<int> out(n);
    unsigned start = 0;
    while (start < n) {
        unsigned end = start;
        while (end + 1 < n && subset.contains(static_cast<Generator>(end))) ++end;
        for (unsigned k = start; k <= end; ++k) out[k] = static_cast<int>(end - (k - start) + 1);
        start = end + 1;
    }
    return out;
}

/// β_I = α_{Iᶜ}·w₀, i.e. α of the complement read backwards.
inline std::vector<int> beta_one_line(unsigned n, GeneratorSet subset) {
    auto a = alpha_one_line(n, subset.complement(n == 0 ? 0 : n - 1));
    std::reverse(a.begin(), a.end());
    return a;
}

/// (α_I, β_I). Closed form for permutations; otherwise the minimal and maximal
/// members found by scanning the class.
inline std::pair<ElementId, ElementId> class_extremes(const CoxeterSystem& sys, GeneratorSet subset) {
    if (sys.is_symmetric()) {
        return {*sys.find_permutation(alpha_one_line(sys.degree(), subset)),
                *sys.find_permutation(beta_one_line(sys.degree(), subset))};
    }
    const RecoilClass c = recoil_class(sys, subset);
    ElementId lo = c.members.front();
    ElementId hi = c.members.front();
    for (ElementId w : c.members) {
        bool below_all = true;
        bool above_all = true;
        for (ElementId v : c.members) {
            below_all = below_all && sys.weak_leq(w, v);
            above_all = above_all && sys.weak_leq(v, w);
        }
        if (below_all) lo = w;
        if (above_all) hi = w;
    }
    return {lo, hi};
}

}  // namespace descalg
