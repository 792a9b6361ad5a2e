#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "descalg/covering.hpp"
#include "descalg/recoil_classes.hpp"

namespace descalg {

enum class Basis { Y, X };

/// Integer combination of Y_I (or X_I), zero coefficients omitted.
struct AlgebraElement {
    Basis basis = Basis::Y;
    unsigned rank = 0;
    std::map<GeneratorSet, std::int64_t> coeffs;

    static AlgebraElement basis_element(Basis b, unsigned rank, GeneratorSet I, std::int64_t c = 1) {
        AlgebraElement e{b, rank, {}};
        e.add(I, c);
        return e;
    }

    void add(GeneratorSet I, std::int64_t c) {
        if (c == 0) return;
        auto& slot = coeffs[I];
        slot += c;
        if (slot == 0) coeffs.erase(I);
    }

    std::int64_t operator[](GeneratorSet I) const {
        auto it = coeffs.find(I);
        return it == coeffs.end() ? 0 : it->second;
    }

    bool operator==(const AlgebraElement&) const = default;
};

/// Y-coordinates to X-coordinates. From Y_I = Σ_{J⊆I} (−1)^{|I|−|J|} X_J the
/// X-coefficient of J is Σ_{I⊇J} (−1)^{|I|−|J|} c_I.
inline AlgebraElement x_from_y(const AlgebraElement& y) {
    if (y.basis != Basis::Y) throw std::invalid_argument("x_from_y expects a Y-basis element");
    AlgebraElement x{Basis::X, y.rank, {}};
    for (const auto& [I, c] : y.coeffs) {
        // Enumerate subsets J of I.
        const std::uint32_t full = I.bits();
        for (std::uint32_t sub = full;; sub = (sub - 1) & full) {
            const GeneratorSet J(sub);
            const bool odd = (I.size() - J.size()) % 2 == 1;
            x.add(J, odd ? -c : c);
            if (sub == 0) break;
        }
    }
    return x;
}

/// X-coordinates to Y-coordinates: X_I = Σ_{J⊆I} Y_J.
inline AlgebraElement y_from_x(const AlgebraElement& x) {
    if (x.basis != Basis::X) throw std::invalid_argument("y_from_x expects an X-basis element");
    AlgebraElement y{Basis::Y, x.rank, {}};
    for (const auto& [I, c] : x.coeffs) {
        const std::uint32_t full = I.bits();
        for (std::uint32_t sub = full;; sub = (sub - 1) & full) {
            y.add(GeneratorSet(sub), c);
            if (sub == 0) break;
        }
    }
    return y;
}

/// a_IJK as the constant fiber size of Z_IJK → Y_K.
inline std::size_t structure_constant(const CoveringInstance& z) {
    if (!z.fibers_constant)
        throw FiberInconstant("fiber sizes differ over Y_" + z.K.to_string() + " for I=" + z.I.to_string() +
                              " J=" + z.J.to_string());
    return z.degree();
}

inline std::size_t structure_constant(const CoxeterSystem& sys, GeneratorSet I, GeneratorSet J, GeneratorSet K) {
    return structure_constant(build_fibered_graph(sys, I, J, K));
}

/// Y_I Y_J = Σ_K a_IJK Y_K with every a_IJK read off a covering.
inline AlgebraElement product_expand(const CoxeterSystem& sys, const std::vector<RecoilClass>& classes, GeneratorSet I,
                                     GeneratorSet J) {
    AlgebraElement out{Basis::Y, sys.rank(), {}};
    for (const auto& yk : classes) {
        const auto z = build_fibered_graph(sys, classes[I.bits()], classes[J.bits()], yk);
        out.add(yk.subset, static_cast<std::int64_t>(structure_constant(z)));
    }
    return out;
}

inline AlgebraElement product_expand(const CoxeterSystem& sys, GeneratorSet I, GeneratorSet J) {
    return product_expand(sys, all_recoil_classes(sys), I, J);
}

/// Independent route: multiply out Y_I·Y_J in the group algebra, tally each
/// group element, and read one count per recoil class. Throws ClassInconstant
/// if a class receives different counts.
inline AlgebraElement convolution_oracle(const CoxeterSystem& sys, GeneratorSet I, GeneratorSet J) {
    std::vector<ElementId> left, right;
    for (ElementId w = 0; w < sys.size(); ++w) {
        if (sys.recoil_set(w) == I) left.push_back(w);
        if (sys.recoil_set(w) == J) right.push_back(w);
    }
    std::vector<std::int64_t> tally(sys.size(), 0);
    for (ElementId u : left)
        for (ElementId v : right) ++tally[sys.multiply(u, v)];

    std::map<GeneratorSet, std::int64_t> per_class;
    for (ElementId w = 0; w < sys.size(); ++w) {
        const GeneratorSet K = sys.recoil_set(w);
        auto [it, fresh] = per_class.emplace(K, tally[w]);
        if (!fresh && it->second != tally[w])
            throw ClassInconstant("Y_" + I.to_string() + " Y_" + J.to_string() + " is not constant on Y_" +
                                  K.to_string() + " (witness " + sys.label(w) + ")");
    }
    AlgebraElement out{Basis::Y, sys.rank(), {}};
    for (const auto& [K, c] : per_class) out.add(K, c);
    return out;
}

/// Product of two elements through the Y-basis; the result is expressed in
/// the basis of `a`.
inline AlgebraElement multiply(const CoxeterSystem& sys, const std::vector<RecoilClass>& classes,
                               const AlgebraElement& a, const AlgebraElement& b) {
    const AlgebraElement ya = a.basis == Basis::Y ? a : y_from_x(a);
    const AlgebraElement yb = b.basis == Basis::Y ? b : y_from_x(b);
    AlgebraElement out{Basis::Y, sys.rank(), {}};
    for (const auto& [I, ci] : ya.coeffs)
        for (const auto& [J, cj] : yb.coeffs)
            for (const auto& [K, a_ijk] : product_expand(sys, classes, I, J).coeffs) out.add(K, ci * cj * a_ijk);
    return a.basis == Basis::Y ? out : x_from_y(out);
}

/// X_I X_J = Σ_K b_IJK X_K, computed through the Y-basis.
inline AlgebraElement x_product(const CoxeterSystem& sys, GeneratorSet I, GeneratorSet J) {
    const auto classes = all_recoil_classes(sys);
    return multiply(sys, classes, AlgebraElement::basis_element(Basis::X, sys.rank(), I),
                    AlgebraElement::basis_element(Basis::X, sys.rank(), J));
}

struct TableRow {
    GeneratorSet I, J, K;
    std::size_t a = 0;
    MultiplicityPartition lambda;
    std::size_t components = 0;

    bool operator==(const TableRow&) const = default;
};

/// Nonzero structure constants, sorted by (I, J, K). Rows with a = 0 are omitted.
struct StructureTable {
    std::string group;
    unsigned rank = 0;
    std::vector<TableRow> rows;
};

/// Rows for the requested (I, J) pairs; every pair is checked against the
/// convolution oracle (throws OracleMismatch on disagreement).
inline StructureTable structure_table(const CoxeterSystem& sys, const std::vector<GeneratorSet>& lefts,
                                      const std::vector<GeneratorSet>& rights, bool cross_check = true) {
    const auto classes = all_recoil_classes(sys);
    StructureTable t{sys.spec().label(), sys.rank(), {}};
    for (GeneratorSet I : lefts) {
        for (GeneratorSet J : rights) {
            AlgebraElement via_cover{Basis::Y, sys.rank(), {}};
            std::vector<TableRow> rows;
            for (GeneratorSet K : all_subsets(sys.rank())) {
                const auto z = build_fibered_graph(sys, classes[I.bits()], classes[J.bits()], classes[K.bits()]);
                const std::size_t a = structure_constant(z);
                if (a == 0) continue;
                via_cover.add(K, static_cast<std::int64_t>(a));
                rows.push_back({I, J, K, a, multiplicity_partition(z), z.component_count});
            }
            if (cross_check && via_cover != convolution_oracle(sys, I, J))
                throw OracleMismatch("covering and convolution disagree for I=" + I.to_string() + " J=" +
                                     J.to_string());
            t.rows.insert(t.rows.end(), rows.begin(), rows.end());
        }
    }
    return t;
}

/// All 4^rank products Y_I Y_J.
inline StructureTable full_table(const CoxeterSystem& sys) {
    const auto subsets = all_subsets(sys.rank());
    return structure_table(sys, subsets, subsets);
}

}  // namespace descalg
