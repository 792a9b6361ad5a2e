#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "descalg/covering.hpp"
#include "descalg/descent_algebra.hpp"
#include "descalg/monodromy.hpp"
#include "descalg/recoil_classes.hpp"

namespace descalg {

struct CheckResult {
    explicit CheckResult(std::string n) : name(std::move(n)) {}

    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
    std::string witness;  // first failure

    void record(bool ok, const std::string& what) {
        if (ok) {
            ++passed;
        } else {
            if (failed == 0) witness = what;
            ++failed;
        }
    }
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool ok() const {
        for (const auto& c : checks)
            if (c.failed != 0) return false;
        return true;
    }
};

/// Groups up to this size get the quadratic weak-order interval scan.
inline constexpr std::size_t kIntervalScanLimit = 720;

/// Exhaustive invariant sweep over one group: Cayley tables, recoil classes,
/// every covering instance, the convolution oracle and loop monodromy.
inline VerificationReport verify_all(const CoxeterSystem& sys) {
    VerificationReport rep;
    const unsigned rank = sys.rank();
    const auto classes = all_recoil_classes(sys);
    const auto subsets = all_subsets(rank);

    CheckResult cayley{"cayley tables"};
    std::size_t identities = 0;
    std::size_t longest = 0;
    const unsigned max_len = sys.length(sys.longest());
    for (ElementId w = 0; w < sys.size(); ++w) {
        identities += sys.length(w) == 0;
        longest += sys.length(w) == max_len;
        for (Generator s = 0; s < rank; ++s) {
            const ElementId ws = sys.right(w, s);
            const ElementId sw = sys.left(s, w);
            const int dl = static_cast<int>(sys.length(ws)) - static_cast<int>(sys.length(w));
            cayley.record(sys.right(ws, s) == w && sys.left(s, sw) == w && (dl == 1 || dl == -1),
                          sys.label(w) + " / s" + std::to_string(s + 1));
        }
    }
    cayley.record(identities == 1 && longest == 1, "identity or longest element not unique");
    cayley.record(sys.recoil_set(sys.longest()) == sys.all_generators() &&
                      sys.descent_set(sys.longest()) == sys.all_generators(),
                  "R(w0) or D(w0) is not S");
    rep.checks.push_back(cayley);

    CheckResult duality{"recoil/descent duality"};
    for (ElementId w = 0; w < sys.size(); ++w) {
        bool ok = sys.recoil_set(w) == sys.descent_set(sys.inverse(w));
        if (sys.is_symmetric()) ok = ok && recoil_set_positional(sys.element(w).one_line) == sys.recoil_set(w);
        duality.record(ok, sys.label(w));
    }
    rep.checks.push_back(duality);

    CheckResult partition{"class partition"};
    std::size_t total = 0;
    for (const auto& c : classes) {
        total += c.size();
        partition.record(!c.members.empty(), "empty class Y_" + c.subset.to_string());
    }
    partition.record(total == sys.size(), "class sizes do not sum to |W|");
    rep.checks.push_back(partition);

    CheckResult interval{"weak-order interval"};
    CheckResult connected{"class connectivity"};
    for (const auto& c : classes) {
        connected.record(component_count(c.graph) == 1, "Y_" + c.subset.to_string());
        if (sys.size() > kIntervalScanLimit) {
            ++interval.skipped;
            continue;
        }
        const auto [alpha, beta] = class_extremes(sys, c.subset);
        bool ok = alpha == c.alpha && beta == c.beta;
        for (ElementId w = 0; w < sys.size() && ok; ++w)
            ok = (sys.weak_leq(alpha, w) && sys.weak_leq(w, beta)) == c.contains(w);
        interval.record(ok, "Y_" + c.subset.to_string());
    }
    rep.checks.push_back(interval);
    rep.checks.push_back(connected);

    CheckResult criteria{"same-class edge criteria"};
    CheckResult dichotomy{"ascent dichotomy"};
    for (ElementId w = 0; w < sys.size(); ++w) {
        for (Generator s = 0; s < rank; ++s) {
            const bool same = same_class_edge(sys, w, s);
            bool ok = same == same_class_edge_conjugation(sys, w, s);
            if (sys.is_symmetric()) ok = ok && same == same_class_edge_positional(sys, w, s);
            criteria.record(ok, sys.label(w) + " / s" + std::to_string(s + 1));

            const ElementId ws = sys.right(w, s);
            if (sys.length(ws) < sys.length(w)) continue;
            const ElementId conj = sys.multiply(sys.multiply(w, sys.generator(s)), sys.inverse(w));
            if (sys.is_generator(conj)) {
                GeneratorSet expect = sys.recoil_set(w);
                expect.insert(sys.element(conj).word.front());
                dichotomy.record(sys.recoil_set(ws) == expect && expect != sys.recoil_set(w),
                                 sys.label(w) + " / s" + std::to_string(s + 1));
            } else {
                dichotomy.record(sys.recoil_set(ws) == sys.recoil_set(w), sys.label(w) + " / s" + std::to_string(s + 1));
            }
        }
    }
    rep.checks.push_back(criteria);
    rep.checks.push_back(dichotomy);

    CheckResult covering{"covering axioms"};
    CheckResult lifts{"unique edge lifting"};
    CheckResult fibers{"fiber constancy"};
    CheckResult oracle{"convolution oracle"};
    CheckResult counting{"counting identity"};
    CheckResult lambda_sum{"partition sums"};
    CheckResult trivial_loops{"square/commuting loops trivial"};
    CheckResult braid_order{"braid loop orders"};
    CheckResult trivial_cover{"no-braid trivial cover"};

    for (GeneratorSet I : subsets) {
        for (GeneratorSet J : subsets) {
            const std::string ij = "I=" + I.to_string() + " J=" + J.to_string();
            AlgebraElement via_cover{Basis::Y, rank, {}};
            std::size_t weighted = 0;
            for (GeneratorSet K : subsets) {
                const std::string ijk = ij + " K=" + K.to_string();
                const auto z = build_fibered_graph(sys, classes[I.bits()], classes[J.bits()], classes[K.bits()]);
                const auto cov = verify_covering(z);
                if (z.empty()) {
                    ++covering.skipped;
                    continue;
                }
                covering.record(cov.passed(), ijk + (cov.violations.empty() ? "" : ": " + cov.violations.front()));
                fibers.record(z.fibers_constant && z.component_degrees_constant, ijk);

                bool lift_ok = true;
                for (std::uint32_t u = 0; u < z.vertices.size() && lift_ok; ++u) {
                    const auto& x = z.vertices[u];
                    for (Generator s = 0; s < rank && lift_ok; ++s) {
                        if (!z.target_class.contains(sys.right(x.sigma, s))) continue;
                        const auto c = lift_candidates(sys, x.pi, x.rho, s);
                        lift_ok = c.right_valid != c.left_valid;
                        if (!lift_ok) break;
                        const Lift l = unique_lift_edge(sys, x.pi, x.rho, s);
                        const auto v = z.find(l.pi, l.rho);
                        lift_ok = v.has_value() && std::any_of(z.adjacency[u].begin(), z.adjacency[u].end(),
                                                               [&](const ZEdge& e) { return e.to == *v; });
                    }
                }
                lifts.record(lift_ok, ijk);

                const std::size_t a = z.degree();
                via_cover.add(K, static_cast<std::int64_t>(a));
                weighted += a * z.target_class.size();
                lambda_sum.record(multiplicity_partition(z).sum() == a, ijk);

                try {
                    const auto mono = monodromy_report(z);
                    trivial_loops.record(mono.squares_trivial && mono.commuting_trivial, ijk);
                    braid_order.record(true, ijk);
                    if (mono.trivial_cover) trivial_cover.record(*mono.trivial_cover, ijk);
                } catch (const OrderViolation& e) {
                    braid_order.record(false, ijk + ": " + e.what());
                }
            }
            try {
                oracle.record(via_cover == convolution_oracle(sys, I, J), ij);
            } catch (const ClassInconstant& e) {
                oracle.record(false, ij + ": " + e.what());
            }
            counting.record(weighted == classes[I.bits()].size() * classes[J.bits()].size(), ij);
        }
    }
    for (auto* c : {&covering, &lifts, &fibers, &oracle, &counting, &lambda_sum, &trivial_loops, &braid_order,
                    &trivial_cover})
        rep.checks.push_back(*c);

    CheckResult mobius{"Möbius round trip"};
    for (GeneratorSet I : subsets) {
        const auto y = AlgebraElement::basis_element(Basis::Y, rank, I);
        const auto x = AlgebraElement::basis_element(Basis::X, rank, I);
        mobius.record(y_from_x(x_from_y(y)) == y && x_from_y(y_from_x(x)) == x, "Y_" + I.to_string());
    }
    rep.checks.push_back(mobius);
    return rep;
}

}  // namespace descalg
