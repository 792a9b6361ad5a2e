#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "descalg/descent_algebra.hpp"
#include "oracle.hpp"

using namespace descalg;

namespace {

const CoxeterSystem& s4() {
    static const CoxeterSystem sys = build_system(CoxeterSpec::symmetric(4));
    return sys;
}

GeneratorSet subset(const CoxeterSystem& sys, const char* text) {
    return GeneratorSet::parse(text, sys.rank(), sys.spec().kind == CoxeterSpec::Kind::dihedral);
}

std::set<int> one_based(GeneratorSet g) {
    std::set<int> out;
    for (unsigned i : g.one_based()) out.insert(static_cast<int>(i));
    return out;
}

AlgebraElement y_sum(const CoxeterSystem& sys, std::initializer_list<std::pair<const char*, std::int64_t>> terms) {
    AlgebraElement e{Basis::Y, sys.rank(), {}};
    for (const auto& [text, c] : terms) e.add(subset(sys, text), c);
    return e;
}

}  // namespace

TEST(StructureConstant, SymmetricFourFixtures) {
    const auto& sys = s4();
    EXPECT_EQ(structure_constant(sys, subset(sys, "1"), subset(sys, "3"), subset(sys, "1,3")), 1u);
    EXPECT_EQ(structure_constant(sys, subset(sys, "1"), subset(sys, "3"), subset(sys, "2")), 0u);
    EXPECT_EQ(product_expand(sys, subset(sys, "1"), subset(sys, "3")),
              y_sum(sys, {{"", 1}, {"1", 1}, {"1,3", 1}}));
    EXPECT_EQ(product_expand(sys, subset(sys, "2"), subset(sys, "3")),
              y_sum(sys, {{"", 1}, {"1", 1}, {"1,2", 1}, {"2", 1}, {"2,3", 1}}));
}

TEST(StructureConstant, SymmetricFiveDegreeTwo) {
    const auto sys = build_system(CoxeterSpec::symmetric(5));
    EXPECT_EQ(structure_constant(sys, subset(sys, "2,3"), subset(sys, "3,4"), subset(sys, "1,3")), 2u);
    const auto brute = oracle::product(5, {2, 3}, {3, 4});
    EXPECT_EQ(brute.at({1, 3}), 2);
}

TEST(StructureConstant, DihedralSix) {
    const auto sys = build_system(CoxeterSpec::dihedral(6));
    EXPECT_EQ(product_expand(sys, subset(sys, "s"), subset(sys, "t")),
              y_sum(sys, {{"", 2}, {"s", 2}, {"t", 2}, {"s,t", 3}}));
}

TEST(StructureConstant, SymmetricThree) {
    const auto sys = build_system(CoxeterSpec::symmetric(3));
    EXPECT_EQ(product_expand(sys, subset(sys, "1"), subset(sys, "1")), y_sum(sys, {{"", 1}, {"2", 1}, {"1,2", 1}}));
}

TEST(StructureConstant, LongestTimesLongest) {
    for (const auto& spec : {CoxeterSpec::symmetric(4), CoxeterSpec::dihedral(5)}) {
        const auto sys = build_system(spec);
        const auto S = sys.all_generators();
        EXPECT_EQ(product_expand(sys, S, S), AlgebraElement::basis_element(Basis::Y, sys.rank(), GeneratorSet()));
    }
}

TEST(StructureConstant, InconstantFibersThrow) {
    const auto& sys = s4();
    auto z = build_fibered_graph(sys, subset(sys, "1"), subset(sys, "3"), subset(sys, "1,3"));
    z.fibers_constant = false;
    EXPECT_THROW(structure_constant(z), FiberInconstant);
}

TEST(ConvolutionOracle, MatchesBruteForce) {
    for (int n = 3; n <= 5; ++n) {
        const auto sys = build_system(CoxeterSpec::symmetric(static_cast<unsigned>(n)));
        for (GeneratorSet I : all_subsets(sys.rank()))
            for (GeneratorSet J : all_subsets(sys.rank())) {
                AlgebraElement expect{Basis::Y, sys.rank(), {}};
                for (const auto& [K, c] : oracle::product(n, one_based(I), one_based(J))) {
                    GeneratorSet g;
                    for (int k : K) g.insert(static_cast<Generator>(k - 1));
                    expect.add(g, c);
                }
                EXPECT_EQ(convolution_oracle(sys, I, J), expect);
                EXPECT_EQ(product_expand(sys, I, J), expect) << "I=" << I.to_string() << " J=" << J.to_string();
            }
    }
}

TEST(ConvolutionOracle, AgreesWithCoveringOnWordGroups) {
    for (const auto& spec : {CoxeterSpec::dihedral(7), CoxeterSpec::matrix({{1, 4, 2}, {4, 1, 3}, {2, 3, 1}})}) {
        const auto sys = build_system(spec);
        const auto classes = all_recoil_classes(sys);
        for (GeneratorSet I : all_subsets(sys.rank()))
            for (GeneratorSet J : all_subsets(sys.rank()))
                EXPECT_EQ(product_expand(sys, classes, I, J), convolution_oracle(sys, I, J));
    }
}

TEST(BasisChange, XTopIsSumOfAllY) {
    const unsigned rank = 3;
    const auto y = y_from_x(AlgebraElement::basis_element(Basis::X, rank, GeneratorSet::full(rank)));
    EXPECT_EQ(y.coeffs.size(), 8u);
    for (GeneratorSet I : all_subsets(rank)) EXPECT_EQ(y[I], 1);
    // Y_{1,2} = X_{1,2} - X_1 - X_2 + X_∅
    const auto x = x_from_y(AlgebraElement::basis_element(Basis::Y, rank, GeneratorSet::parse("1,2", rank)));
    EXPECT_EQ(x[GeneratorSet::parse("1,2", rank)], 1);
    EXPECT_EQ(x[GeneratorSet::parse("1", rank)], -1);
    EXPECT_EQ(x[GeneratorSet::parse("2", rank)], -1);
    EXPECT_EQ(x[GeneratorSet()], 1);
    EXPECT_EQ(x.coeffs.size(), 4u);
}

TEST(BasisChange, RoundTripOnRandomVectors) {
    const unsigned rank = 4;
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (int trial = 0; trial < 100; ++trial) {
        AlgebraElement y{Basis::Y, rank, {}};
        AlgebraElement x{Basis::X, rank, {}};
        for (GeneratorSet I : all_subsets(rank)) {
            y.add(I, coeff(rng));
            x.add(I, coeff(rng));
        }
        EXPECT_EQ(y_from_x(x_from_y(y)), y);
        EXPECT_EQ(x_from_y(y_from_x(x)), x);
    }
}

TEST(BasisChange, WrongBasisThrows) {
    EXPECT_THROW(x_from_y(AlgebraElement{Basis::X, 2, {}}), std::invalid_argument);
    EXPECT_THROW(y_from_x(AlgebraElement{Basis::Y, 2, {}}), std::invalid_argument);
}

// X_I is the sum of w over {w : R(w) ⊆ I}; check X_I X_J directly in the group algebra.
TEST(Multiply, XBasisAgreesWithGroupAlgebra) {
    const auto& sys = s4();
    for (GeneratorSet I : all_subsets(sys.rank()))
        for (GeneratorSet J : all_subsets(sys.rank())) {
            std::vector<std::int64_t> tally(sys.size(), 0);
            for (ElementId u = 0; u < sys.size(); ++u) {
                if (!sys.recoil_set(u).is_subset_of(I)) continue;
                for (ElementId v = 0; v < sys.size(); ++v)
                    if (sys.recoil_set(v).is_subset_of(J)) ++tally[sys.multiply(u, v)];
            }
            AlgebraElement in_y{Basis::Y, sys.rank(), {}};
            for (const auto& c : all_recoil_classes(sys)) in_y.add(c.subset, tally[c.members.front()]);
            EXPECT_EQ(y_from_x(x_product(sys, I, J)), in_y);
        }
}

TEST(Multiply, IsAssociative) {
    const auto& sys = s4();
    const auto classes = all_recoil_classes(sys);
    const auto a = y_sum(sys, {{"1", 2}, {"2,3", -1}});
    const auto b = y_sum(sys, {{"3", 1}, {"", 4}});
    const auto c = y_sum(sys, {{"1,2", 1}, {"2", 1}});
    EXPECT_EQ(multiply(sys, classes, multiply(sys, classes, a, b), c),
              multiply(sys, classes, a, multiply(sys, classes, b, c)));
}

TEST(Table, SymmetricThreeRows) {
    const auto sys = build_system(CoxeterSpec::symmetric(3));
    const auto t = full_table(sys);
    EXPECT_EQ(t.group, "S3");
    const auto one = GeneratorSet::single(0);
    const auto it = std::find_if(t.rows.begin(), t.rows.end(), [&](const TableRow& r) {
        return r.I == one && r.J == one && r.K.empty();
    });
    ASSERT_NE(it, t.rows.end());
    EXPECT_EQ(it->a, 1u);
    for (const auto& r : t.rows) {
        EXPECT_GT(r.a, 0u);
        EXPECT_EQ(r.lambda.sum(), r.a);
    }
    EXPECT_TRUE(std::is_sorted(t.rows.begin(), t.rows.end(), [](const TableRow& x, const TableRow& y) {
        return std::tie(x.I, x.J, x.K) < std::tie(y.I, y.J, y.K);
    }));
}

TEST(Table, ContainsFixtureRows) {
    const auto& sys = s4();
    const auto t = full_table(sys);
    auto has = [&](const char* i, const char* j, const char* k, std::size_t a) {
        return std::any_of(t.rows.begin(), t.rows.end(), [&](const TableRow& r) {
            return r.I == subset(sys, i) && r.J == subset(sys, j) && r.K == subset(sys, k) && r.a == a;
        });
    };
    EXPECT_TRUE(has("1", "3", "1,3", 1));
    EXPECT_TRUE(has("2", "3", "2,3", 1));
    EXPECT_FALSE(has("1", "3", "2", 0));

    const auto i6 = build_system(CoxeterSpec::dihedral(6));
    const auto t6 = full_table(i6);
    const auto row = std::find_if(t6.rows.begin(), t6.rows.end(), [&](const TableRow& r) {
        return r.I == GeneratorSet::single(0) && r.J == GeneratorSet::single(1) && r.K == GeneratorSet::full(2);
    });
    ASSERT_NE(row, t6.rows.end());
    EXPECT_EQ(row->a, 3u);
}

TEST(Table, MatrixA3EqualsS4) {
    const auto a3 = build_system(CoxeterSpec::matrix({{1, 3, 2}, {3, 1, 3}, {2, 3, 1}}));
    const auto ta = full_table(a3);
    const auto ts = full_table(s4());
    EXPECT_EQ(ta.rows, ts.rows);
}
