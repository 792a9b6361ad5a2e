#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "descalg/coxeter.hpp"
#include "descalg/errors.hpp"
#include "descalg/graph.hpp"
#include "descalg/recoil_classes.hpp"

namespace descalg {

/// Which factor of (π, ρ) an edge of Z moves. Right moves are drawn blue,
/// left moves red.
enum class Side : std::uint8_t { left, right };

inline const char* side_name(Side s) { return s == Side::left ? "left" : "right"; }

struct ZVertex {
    ElementId pi;
    ElementId rho;
    ElementId sigma;  // pi∘rho
};

struct ZEdge {
    std::uint32_t to;
    Side side;
    /// Generator applied to the moving factor: ρ·moved or π·moved.
    Generator moved;
    /// Generator s with Π(to) = Π(from)·s.
    Generator base;
};

/// Result of lifting the edge σ -- σ·s to (π, ρ).
struct Lift {
    ElementId pi;
    ElementId rho;
    Side side;
    Generator moved;
};

/// The two candidate factorizations of (π∘ρ)·s that fix one factor, and
/// whether each stays in Y_{R(π)} × Y_{R(ρ)}.
struct LiftCandidates {
    bool right_valid = false;
    bool left_valid = false;
    ElementId right_rho = 0;
    ElementId left_pi = 0;
    /// ρ s ρ⁻¹
    ElementId conjugate = 0;
};

inline LiftCandidates lift_candidates(const CoxeterSystem& sys, ElementId pi, ElementId rho, Generator s) {
    LiftCandidates c;
    c.right_rho = sys.right(rho, s);
    c.right_valid = sys.recoil_set(c.right_rho) == sys.recoil_set(rho);
    c.conjugate = sys.multiply(sys.multiply(rho, sys.generator(s)), sys.inverse(rho));
    c.left_pi = sys.multiply(pi, c.conjugate);
    c.left_valid = sys.is_generator(c.conjugate) && sys.recoil_set(c.left_pi) == sys.recoil_set(pi);
    return c;
}

/// The unique factorization of (π∘ρ)·s that moves exactly one factor along a
/// same-class edge. Throws NotAClassEdge if σ·s leaves the recoil class of σ.
inline Lift unique_lift_edge(const CoxeterSystem& sys, ElementId pi, ElementId rho, Generator s) {
    const ElementId sigma = sys.multiply(pi, rho);
    if (sys.recoil_set(sigma) != sys.recoil_set(sys.right(sigma, s)))
        throw NotAClassEdge("edge " + sys.label(sigma) + " -- " + sys.label(sys.right(sigma, s)) +
                            " leaves the recoil class");
    const LiftCandidates c = lift_candidates(sys, pi, rho, s);
    if (c.right_valid == c.left_valid)
        throw Error("factorization of " + sys.label(sigma) + "·s" + std::to_string(s + 1) + " is not unique");
    if (c.right_valid) return {pi, c.right_rho, Side::right, s};
    return {c.left_pi, rho, Side::left, sys.element(c.conjugate).word.front()};
}

/// Z_IJK = {(π,ρ) ∈ Y_I × Y_J : π∘ρ ∈ Y_K} with the projection Π(π,ρ) = π∘ρ.
///
/// Edges are the edges of the product graph Y_I × Y_J that lie over an edge
/// of Y_K. Product edges whose ends project to non-adjacent elements are not
/// part of the covering; they are only counted in `off_cover_edges`.
struct CoveringInstance {
    const CoxeterSystem* sys = nullptr;
    GeneratorSet I, J, K;
    RecoilClass left_class, right_class, target_class;

    /// Sorted by (pi, rho).
    std::vector<ZVertex> vertices;
    std::vector<std::vector<ZEdge>> adjacency;
    std::size_t off_cover_edges = 0;

    /// fibers[p] lists the vertices over target_class.members[p].
    std::vector<std::vector<std::uint32_t>> fibers;
    std::vector<std::uint32_t> component;
    std::uint32_t component_count = 0;
    /// Per-component covering degree measured over target_class.members[0].
    std::vector<std::uint32_t> degrees;
    bool fibers_constant = true;
    bool component_degrees_constant = true;

    bool empty() const { return vertices.empty(); }
    std::size_t edge_count() const { return descalg::edge_count(adjacency); }

    std::optional<std::uint32_t> find(ElementId pi, ElementId rho) const {
        auto it = std::lower_bound(vertices.begin(), vertices.end(), std::pair{pi, rho},
                                   [](const ZVertex& v, const std::pair<ElementId, ElementId>& k) {
                                       return std::pair{v.pi, v.rho} < k;
                                   });
        if (it == vertices.end() || it->pi != pi || it->rho != rho) return std::nullopt;
        return static_cast<std::uint32_t>(it - vertices.begin());
    }

    /// Fiber over an element of Y_K (empty if σ is not in Y_K).
    const std::vector<std::uint32_t>& fiber(ElementId sigma) const {
        static const std::vector<std::uint32_t> none;
        auto p = target_class.position(sigma);
        return p ? fibers[*p] : none;
    }

    /// Size of the fiber over α_K; equals a_IJK when fibers are constant.
    std::size_t degree() const { return fibers.empty() ? 0 : fibers.front().size(); }
};

/// Builds Z from already constructed classes Y_I, Y_J, Y_K.
inline CoveringInstance build_fibered_graph(const CoxeterSystem& sys, const RecoilClass& yi, const RecoilClass& yj,
                                            const RecoilClass& yk) {
    CoveringInstance z;
    z.sys = &sys;
    z.I = yi.subset;
    z.J = yj.subset;
    z.K = yk.subset;
    z.left_class = yi;
    z.right_class = yj;
    z.target_class = yk;
    const GeneratorSet K = z.K;

    for (ElementId pi : z.left_class.members)
        for (ElementId rho : z.right_class.members) {
            const ElementId sigma = sys.multiply(pi, rho);
            if (sys.recoil_set(sigma) == K) z.vertices.push_back({pi, rho, sigma});
        }

    z.adjacency.resize(z.vertices.size());
    DisjointSets ds(z.vertices.size());
    for (std::uint32_t u = 0; u < z.vertices.size(); ++u) {
        const ZVertex& a = z.vertices[u];
        const auto pi_pos = *z.left_class.position(a.pi);
        const auto rho_pos = *z.right_class.position(a.rho);
        for (const auto& e : z.right_class.graph[rho_pos]) {
            if (auto v = z.find(a.pi, z.right_class.members[e.to])) {
                z.adjacency[u].push_back({*v, Side::right, e.label, e.label});
                ds.unite(u, *v);
            }
        }
        for (const auto& e : z.left_class.graph[pi_pos]) {
            auto v = z.find(z.left_class.members[e.to], a.rho);
            if (!v) continue;
            // Π(v) = Π(u)·(ρ⁻¹ t ρ); an edge of Y_K only when that is simple.
            const ElementId step =
                sys.multiply(sys.multiply(sys.inverse(a.rho), sys.generator(e.label)), a.rho);
            if (!sys.is_generator(step)) {
                if (u < *v) ++z.off_cover_edges;
                continue;
            }
            z.adjacency[u].push_back({*v, Side::left, e.label, sys.element(step).word.front()});
            ds.unite(u, *v);
        }
    }
    z.component = ds.labels(z.component_count);

    z.fibers.resize(z.target_class.size());
    for (std::uint32_t v = 0; v < z.vertices.size(); ++v)
        z.fibers[*z.target_class.position(z.vertices[v].sigma)].push_back(v);

    if (z.empty()) return z;
    for (const auto& f : z.fibers) z.fibers_constant = z.fibers_constant && f.size() == z.fibers.front().size();

    auto count_per_component = [&](const std::vector<std::uint32_t>& fiber) {
        std::vector<std::uint32_t> counts(z.component_count, 0);
        for (auto v : fiber) ++counts[z.component[v]];
        return counts;
    };
    z.degrees = count_per_component(z.fibers.front());
    for (const auto& f : z.fibers)
        if (count_per_component(f) != z.degrees) z.component_degrees_constant = false;
    return z;
}

inline CoveringInstance build_fibered_graph(const CoxeterSystem& sys, GeneratorSet I, GeneratorSet J, GeneratorSet K) {
    return build_fibered_graph(sys, recoil_class(sys, I), recoil_class(sys, J), recoil_class(sys, K));
}

struct CoveringReport {
    enum class Status { ok, empty_instance, violated };
    Status status = Status::ok;
    bool surjective = true;
    bool edges_preserved = true;
    bool unique_lifting = true;
    std::size_t lifts_checked = 0;
    /// One line per violation, each naming a witness.
    std::vector<std::string> violations;

    bool passed() const { return status == Status::ok; }
};

/// Checks the three covering axioms for Π: Z → Y_K: surjectivity, edge
/// preservation, and unique edge lifting at every vertex.
inline CoveringReport verify_covering(const CoveringInstance& z) {
    const CoxeterSystem& sys = *z.sys;
    CoveringReport rep;
    if (z.empty()) {
        rep.status = CoveringReport::Status::empty_instance;
        rep.surjective = false;
        rep.violations.push_back("Z is empty (a = 0); surjectivity is vacuously violated");
        return rep;
    }
    auto vertex_name = [&](std::uint32_t v) {
        return "(" + sys.label(z.vertices[v].pi) + "|" + sys.label(z.vertices[v].rho) + ")";
    };

    for (std::size_t p = 0; p < z.fibers.size(); ++p) {
        if (z.fibers[p].empty()) {
            rep.surjective = false;
            rep.violations.push_back("no vertex over " + sys.label(z.target_class.members[p]));
        }
    }

    for (std::uint32_t u = 0; u < z.vertices.size(); ++u) {
        const ZVertex& a = z.vertices[u];
        if (sys.recoil_set(a.pi) != z.I || sys.recoil_set(a.rho) != z.J || sys.multiply(a.pi, a.rho) != a.sigma ||
            sys.recoil_set(a.sigma) != z.K) {
            rep.edges_preserved = false;
            rep.violations.push_back("vertex " + vertex_name(u) + " is not in Z");
        }
        for (const auto& e : z.adjacency[u]) {
            const ElementId from = a.sigma;
            const ElementId to = z.vertices[e.to].sigma;
            bool adjacent = false;
            for (Generator s = 0; s < sys.rank() && !adjacent; ++s) adjacent = sys.right(from, s) == to;
            if (!adjacent || !z.target_class.contains(to)) {
                rep.edges_preserved = false;
                rep.violations.push_back("edge " + vertex_name(u) + " -- " + vertex_name(e.to) +
                                         " projects to a non-edge " + sys.label(from) + " -- " + sys.label(to));
            }
        }
    }

    for (std::size_t p = 0; p < z.target_class.size(); ++p) {
        for (const auto& down : z.target_class.graph[p]) {
            const ElementId w = z.target_class.members[p];
            const ElementId target = z.target_class.members[down.to];
            for (auto u : z.fibers[p]) {
                ++rep.lifts_checked;
                std::size_t hits = 0;
                for (const auto& e : z.adjacency[u])
                    if (z.vertices[e.to].sigma == target) ++hits;
                if (hits != 1) {
                    rep.unique_lifting = false;
                    rep.violations.push_back("vertex " + vertex_name(u) + " has " + std::to_string(hits) +
                                             " lifts of edge " + sys.label(w) + " -- " + sys.label(target));
                }
            }
        }
    }

    if (!(rep.surjective && rep.edges_preserved && rep.unique_lifting)) rep.status = CoveringReport::Status::violated;
    return rep;
}

/// λ^{IJK}: per-component covering degrees, weakly decreasing.
struct MultiplicityPartition {
    std::vector<unsigned> parts;

    unsigned sum() const {
        unsigned t = 0;
        for (unsigned p : parts) t += p;
        return t;
    }
    bool operator==(const MultiplicityPartition&) const = default;
};

inline MultiplicityPartition multiplicity_partition(const CoveringInstance& z) {
    MultiplicityPartition lambda;
    lambda.parts.assign(z.degrees.begin(), z.degrees.end());
    std::sort(lambda.parts.begin(), lambda.parts.end(), std::greater<>());
    return lambda;
}

/// Whether component `c` maps isomorphically onto Y_K under Π: bijective on
/// vertices and on edges.
inline bool component_is_copy_of_target(const CoveringInstance& z, std::uint32_t c) {
    std::vector<int> hit(z.target_class.size(), 0);
    std::size_t vertices = 0;
    std::size_t edge_ends = 0;
    for (std::uint32_t v = 0; v < z.vertices.size(); ++v) {
        if (z.component[v] != c) continue;
        ++vertices;
        edge_ends += z.adjacency[v].size();
        if (++hit[*z.target_class.position(z.vertices[v].sigma)] > 1) return false;
    }
    return vertices == z.target_class.size() && edge_ends / 2 == descalg::edge_count(z.target_class.graph);
}

}  // namespace descalg
