#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "descalg/covering.hpp"
#include "descalg/errors.hpp"
#include "descalg/recoil_classes.hpp"

namespace descalg {

/// square: s s; commuting: (s t)^2 with m(s,t) = 2; braid: (s t)^3 with
/// m(s,t) = 3; polygon: (s t)^m for m ≥ 4.
enum class LoopKind { square, commuting, braid, polygon };

inline const char* loop_kind_name(LoopKind k) {
    switch (k) {
        case LoopKind::square: return "square";
        case LoopKind::commuting: return "commuting";
        case LoopKind::braid: return "braid";
        case LoopKind::polygon: return "polygon";
    }
    return "?";
}

/// A closed walk base, base·w1, base·w1w2, ... inside one recoil class.
struct Loop {
    ElementId base = 0;
    Word word;
    LoopKind kind = LoopKind::square;
};

/// Vertices visited by the walk, including the start and the end.
inline std::vector<ElementId> walk_vertices(const CoxeterSystem& sys, ElementId base, const Word& word) {
    std::vector<ElementId> out{base};
    for (Generator s : word) out.push_back(sys.right(out.back(), s));
    return out;
}

/// Every prefix stays in the class and the walk closes.
inline bool is_loop_in_class(const CoxeterSystem& sys, const RecoilClass& cls, const Loop& loop) {
    const auto vs = walk_vertices(sys, loop.base, loop.word);
    if (vs.back() != loop.base) return false;
    return std::all_of(vs.begin(), vs.end(), [&](ElementId v) { return cls.contains(v); });
}

inline Word alternating_word(Generator s, Generator t, unsigned length) {
    Word w(length);
    for (unsigned k = 0; k < length; ++k) w[k] = (k % 2 == 0) ? s : t;
    return w;
}

/// Type A fast path: the hexagon σ, σs_i, σs_is_{i+1}, ... stays in the class
/// of σ iff the three values σ_i, σ_{i+1}, σ_{i+2} are pairwise at distance ≥ 2.
inline bool braid_loop_positional(const CoxeterSystem& sys, ElementId w, Generator i) {
    const auto& p = sys.element(w).one_line;
    auto far = [](int a, int b) { return (a > b ? a - b : b - a) >= 2; };
    return far(p[i], p[i + 1]) && far(p[i + 1], p[i + 2]) && far(p[i], p[i + 2]);
}

/// Relation loops of Y_K: one square loop per class edge (based at its lower
/// endpoint) and one loop per coset w⟨s,t⟩, s < t, lying entirely inside the
/// class, based at the coset's smallest element and traversed s, t, s, ...
inline std::vector<Loop> relation_loops(const CoxeterSystem& sys, const RecoilClass& cls) {
    std::vector<Loop> loops;
    for (std::uint32_t i = 0; i < cls.size(); ++i)
        for (const auto& e : cls.graph[i])
            if (i < e.to) loops.push_back({cls.members[i], {e.label, e.label}, LoopKind::square});

    for (Generator s = 0; s < sys.rank(); ++s) {
        for (Generator t = s + 1; t < sys.rank(); ++t) {
            const unsigned m = sys.coxeter_entry(s, t);
            if (m == 0) continue;
            const LoopKind kind = m == 2 ? LoopKind::commuting : m == 3 ? LoopKind::braid : LoopKind::polygon;
            const Word word = alternating_word(s, t, 2 * m);
            for (ElementId w : cls.members) {
                const auto vs = walk_vertices(sys, w, word);
                const bool inside = std::all_of(vs.begin(), vs.end(), [&](ElementId v) { return cls.contains(v); });
                if (inside && *std::min_element(vs.begin(), vs.end()) == w) loops.push_back({w, word, kind});
            }
        }
    }
    return loops;
}

/// Unique lift of the walk `word` from Z-vertex `start`; returns the visited
/// Z-vertices (word.size() + 1 of them).
inline std::vector<std::uint32_t> lift_path(const CoveringInstance& z, std::uint32_t start, const Word& word) {
    const CoxeterSystem& sys = *z.sys;
    std::vector<std::uint32_t> path{start};
    for (Generator s : word) {
        const ZVertex& cur = z.vertices[path.back()];
        const Lift l = unique_lift_edge(sys, cur.pi, cur.rho, s);
        auto next = z.find(l.pi, l.rho);
        if (!next) throw Error("lift left Z at " + sys.label(l.pi) + "|" + sys.label(l.rho));
        path.push_back(*next);
    }
    return path;
}

inline unsigned permutation_order(const std::vector<std::uint32_t>& perm) {
    std::vector<bool> seen(perm.size(), false);
    unsigned order = 1;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        unsigned len = 0;
        for (std::size_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            ++len;
        }
        order = std::lcm(order, len);
    }
    return order;
}

/// Permutation of the fiber over the loop's base induced by lifting the loop.
struct FiberAction {
    Loop loop;
    /// Z-vertices over the base, sorted.
    std::vector<std::uint32_t> fiber;
    /// permutation[i] = j when the lift from fiber[i] ends at fiber[j].
    std::vector<std::uint32_t> permutation;
    unsigned order = 1;

    bool is_identity() const { return order == 1; }
};

inline FiberAction loop_action(const CoveringInstance& z, const Loop& loop) {
    FiberAction act;
    act.loop = loop;
    act.fiber = z.fiber(loop.base);
    for (auto v : act.fiber) {
        const auto path = lift_path(z, v, loop.word);
        auto it = std::lower_bound(act.fiber.begin(), act.fiber.end(), path.back());
        if (it == act.fiber.end() || *it != path.back()) throw Error("lifted loop does not end in the base fiber");
        act.permutation.push_back(static_cast<std::uint32_t>(it - act.fiber.begin()));
    }
    act.order = permutation_order(act.permutation);
    return act;
}

struct MonodromyReport {
    GeneratorSet I, J, K;
    bool empty = true;
    std::size_t square_loops = 0;
    std::size_t commuting_loops = 0;
    std::size_t braid_loops = 0;
    std::size_t polygon_loops = 0;
    /// order → number of braid loops acting with that order
    std::map<unsigned, std::size_t> braid_orders;
    /// Measured only; no bound is asserted for m ≥ 4.
    std::map<unsigned, std::size_t> polygon_orders;
    bool squares_trivial = true;
    bool commuting_trivial = true;
    bool no_braid_loops = true;
    std::size_t target_cycle_rank = 0;
    /// When Y_K has no braid or polygon loop: λ = (1^a) and every component
    /// of Z maps isomorphically onto Y_K.
    std::optional<bool> trivial_cover;
};

/// Loop actions of every relation loop of Y_K. Throws OrderViolation if a
/// braid loop acts with order outside {1, 2}.
inline MonodromyReport monodromy_report(const CoveringInstance& z) {
    MonodromyReport rep;
    rep.I = z.I;
    rep.J = z.J;
    rep.K = z.K;
    rep.target_cycle_rank = cycle_rank(z.target_class.graph);
    if (z.empty()) return rep;
    rep.empty = false;
    const CoxeterSystem& sys = *z.sys;
    for (const Loop& loop : relation_loops(sys, z.target_class)) {
        const FiberAction act = loop_action(z, loop);
        switch (loop.kind) {
            case LoopKind::square:
                ++rep.square_loops;
                rep.squares_trivial = rep.squares_trivial && act.is_identity();
                break;
            case LoopKind::commuting:
                ++rep.commuting_loops;
                rep.commuting_trivial = rep.commuting_trivial && act.is_identity();
                break;
            case LoopKind::braid:
                ++rep.braid_loops;
                ++rep.braid_orders[act.order];
                if (act.order > 2)
                    throw OrderViolation("braid loop at " + sys.label(loop.base) + " acts with order " +
                                         std::to_string(act.order));
                break;
            case LoopKind::polygon:
                ++rep.polygon_loops;
                ++rep.polygon_orders[act.order];
                break;
        }
    }
    rep.no_braid_loops = rep.braid_loops == 0;
    if (rep.no_braid_loops && rep.polygon_loops == 0) {
        const auto lambda = multiplicity_partition(z);
        bool ok = lambda.parts.size() == z.degree() &&
                  std::all_of(lambda.parts.begin(), lambda.parts.end(), [](unsigned p) { return p == 1; });
        for (std::uint32_t c = 0; c < z.component_count && ok; ++c) ok = component_is_copy_of_target(z, c);
        rep.trivial_cover = ok;
    }
    return rep;
}

}  // namespace descalg
