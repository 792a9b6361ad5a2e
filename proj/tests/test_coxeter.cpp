#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "descalg/coxeter.hpp"
#include "descalg/io.hpp"
#include "oracle.hpp"

using namespace descalg;

namespace {

const CoxeterMatrix kA3{{1, 3, 2}, {3, 1, 3}, {2, 3, 1}};
const CoxeterMatrix kB3{{1, 4, 2}, {4, 1, 3}, {2, 3, 1}};
const CoxeterMatrix kH3{{1, 5, 2}, {5, 1, 3}, {2, 3, 1}};

const CoxeterSystem& s4() {
    static const CoxeterSystem sys = build_system(CoxeterSpec::symmetric(4));
    return sys;
}

oracle::Perm simple_transposition(int n, int i) {
    oracle::Perm p(n);
    for (int k = 0; k < n; ++k) p[k] = k + 1;
    std::swap(p[i], p[i + 1]);
    return p;
}

}  // namespace

TEST(BuildSystem, SymmetricFour) {
    const auto& sys = s4();
    EXPECT_EQ(sys.size(), 24u);
    EXPECT_EQ(sys.rank(), 3u);
    EXPECT_EQ(sys.label(sys.identity()), "1234");
    EXPECT_EQ(sys.label(sys.longest()), "4321");
}

TEST(BuildSystem, DihedralSixHasLongestOfLengthSix) {
    const auto sys = build_system(CoxeterSpec::dihedral(6));
    EXPECT_EQ(sys.size(), 12u);
    EXPECT_EQ(sys.length(sys.longest()), 6u);
    EXPECT_EQ(sys.longest(), sys.parse("ststst"));
    EXPECT_EQ(sys.longest(), sys.parse("tststs"));
}

TEST(BuildSystem, DihedralOrders) {
    for (unsigned m = 2; m <= 10; ++m) EXPECT_EQ(build_system(CoxeterSpec::dihedral(m)).size(), 2 * m);
}

TEST(BuildSystem, SmallestSymmetricGroups) {
    const auto s1 = build_system(CoxeterSpec::symmetric(1));
    EXPECT_EQ(s1.size(), 1u);
    EXPECT_EQ(s1.rank(), 0u);
    EXPECT_EQ(s1.longest(), s1.identity());
    EXPECT_EQ(build_system(CoxeterSpec::symmetric(2)).size(), 2u);
}

TEST(BuildSystem, MatrixGroupOrders) {
    EXPECT_EQ(build_system(CoxeterSpec::matrix(kA3)).size(), 24u);
    EXPECT_EQ(build_system(CoxeterSpec::matrix(kB3)).size(), 48u);
    const auto h3 = build_system(CoxeterSpec::matrix(kH3));
    EXPECT_EQ(h3.size(), 120u);
    EXPECT_EQ(h3.length(h3.longest()), 15u);
}

TEST(BuildSystem, RankFourOrders) {
    const CoxeterMatrix d4{{1, 3, 2, 2}, {3, 1, 3, 3}, {2, 3, 1, 2}, {2, 3, 2, 1}};
    const CoxeterMatrix f4{{1, 3, 2, 2}, {3, 1, 4, 2}, {2, 4, 1, 3}, {2, 2, 3, 1}};
    const CoxeterMatrix h4{{1, 5, 2, 2}, {5, 1, 3, 2}, {2, 3, 1, 3}, {2, 2, 3, 1}};
    EXPECT_EQ(build_system(CoxeterSpec::matrix(d4)).size(), 192u);
    const auto f = build_system(CoxeterSpec::matrix(f4));
    EXPECT_EQ(f.size(), 1152u);
    EXPECT_EQ(f.length(f.longest()), 24u);
    const auto h = build_system(CoxeterSpec::matrix(h4));
    EXPECT_EQ(h.size(), 14400u);
    EXPECT_EQ(h.length(h.longest()), 60u);
}

TEST(BuildSystem, IdsAreBreadthFirstWithLexTies) {
    const auto& sys = s4();
    for (ElementId w = 1; w < sys.size(); ++w) {
        const auto& a = sys.element(w - 1);
        const auto& b = sys.element(w);
        EXPECT_TRUE(a.length < b.length || (a.length == b.length && a.one_line < b.one_line));
    }
    const auto b3 = build_system(CoxeterSpec::matrix(kB3));
    for (ElementId w = 1; w < b3.size(); ++w) {
        const auto& a = b3.element(w - 1);
        const auto& b = b3.element(w);
        EXPECT_TRUE(a.length < b.length || (a.length == b.length && a.word < b.word));
    }
}

TEST(BuildSystem, InfiniteGroupHitsCap) {
    EXPECT_THROW(build_system(CoxeterSpec::matrix({{1, 3, 3}, {3, 1, 3}, {3, 3, 1}}, 500)), CapExceeded);
    EXPECT_THROW(build_system(CoxeterSpec::matrix({{1, 0}, {0, 1}}, 100)), CapExceeded);
    EXPECT_THROW(build_system(CoxeterSpec::symmetric(6, 100)), CapExceeded);
}

TEST(BuildSystem, RejectsMalformedMatrices) {
    EXPECT_THROW(build_system(CoxeterSpec::matrix({{1, 3}, {2, 1}})), InvalidSpec);
    EXPECT_THROW(build_system(CoxeterSpec::matrix({{2, 3}, {3, 1}})), InvalidSpec);
    EXPECT_THROW(build_system(CoxeterSpec::matrix({{1, 1}, {1, 1}})), InvalidSpec);
    EXPECT_THROW(build_system(CoxeterSpec::matrix({{1, 3, 2}, {3, 1}})), InvalidSpec);
    EXPECT_THROW(build_system(CoxeterSpec::matrix({})), InvalidSpec);
    EXPECT_THROW(build_system(CoxeterSpec::dihedral(1)), InvalidSpec);
}

// Matrix-built A3 against S4: map each element through its reduced word into
// brute-force permutations and compare the full multiplication tables.
TEST(BuildSystem, MatrixA3IsomorphicToS4) {
    const auto a3 = build_system(CoxeterSpec::matrix(kA3));
    std::vector<oracle::Perm> image(a3.size());
    std::set<oracle::Perm> distinct;
    for (ElementId w = 0; w < a3.size(); ++w) {
        oracle::Perm p = simple_transposition(4, 0);
        p = oracle::compose(p, p);  // identity
        for (Generator s : a3.element(w).word) p = oracle::compose(p, simple_transposition(4, s));
        image[w] = p;
        distinct.insert(p);
    }
    EXPECT_EQ(distinct.size(), 24u);
    for (ElementId u = 0; u < a3.size(); ++u)
        for (ElementId v = 0; v < a3.size(); ++v)
            ASSERT_EQ(image[a3.multiply(u, v)], oracle::compose(image[u], image[v]));
    // Edge-labeled Cayley graphs agree too.
    const auto& s4sys = s4();
    for (ElementId w = 0; w < a3.size(); ++w) {
        const ElementId x = *s4sys.find_permutation(image[w]);
        for (Generator s = 0; s < 3; ++s)
            EXPECT_EQ(image[a3.right(w, s)], oracle::Perm(s4sys.element(s4sys.right(x, s)).one_line.begin(),
                                                          s4sys.element(s4sys.right(x, s)).one_line.end()));
    }
}

TEST(Multiply, FigureProducts) {
    const auto& sys = s4();
    EXPECT_EQ(sys.label(sys.multiply(sys.parse("2134"), sys.parse("1243"))), "2143");
    EXPECT_EQ(sys.label(sys.multiply(sys.parse("2314"), sys.parse("1423"))), "2431");
    const ElementId w = sys.parse("3142");
    EXPECT_EQ(sys.multiply(sys.identity(), w), w);
    EXPECT_EQ(sys.multiply(w, sys.identity()), w);
}

TEST(Multiply, AgreesWithOracleComposition) {
    const auto sys = build_system(CoxeterSpec::symmetric(5));
    std::mt19937 rng(11);
    std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(sys.size() - 1));
    for (int trial = 0; trial < 500; ++trial) {
        const ElementId u = pick(rng);
        const ElementId v = pick(rng);
        const oracle::Perm pu(sys.element(u).one_line.begin(), sys.element(u).one_line.end());
        const oracle::Perm pv(sys.element(v).one_line.begin(), sys.element(v).one_line.end());
        EXPECT_EQ(sys.multiply(u, v), *sys.find_permutation(oracle::compose(pu, pv)));
        // Word walk gives the same product as one-line composition.
        EXPECT_EQ(sys.walk(u, sys.element(v).word), sys.multiply(u, v));
    }
}

TEST(Inverse, Examples) {
    const auto& sys = s4();
    EXPECT_EQ(sys.label(sys.inverse(sys.parse("2314"))), "3124");
    EXPECT_EQ(oracle::invert(oracle::parse("2314")), oracle::parse("3124"));
    EXPECT_EQ(sys.inverse(sys.identity()), sys.identity());
    EXPECT_EQ(sys.inverse(sys.longest()), sys.longest());
    EXPECT_EQ(sys.multiply(sys.longest(), sys.longest()), sys.identity());
}

TEST(Inverse, IsTwoSidedInEveryRealization) {
    for (const auto& spec : {CoxeterSpec::symmetric(4), CoxeterSpec::dihedral(7), CoxeterSpec::matrix(kB3)}) {
        const auto sys = build_system(spec);
        for (ElementId w = 0; w < sys.size(); ++w) {
            EXPECT_EQ(sys.multiply(w, sys.inverse(w)), sys.identity());
            EXPECT_EQ(sys.multiply(sys.inverse(w), w), sys.identity());
            EXPECT_EQ(sys.length(sys.inverse(w)), sys.length(w));
        }
        EXPECT_EQ(sys.multiply(sys.longest(), sys.longest()), sys.identity());
    }
}

TEST(Length, Examples) {
    const auto& sys = s4();
    EXPECT_EQ(sys.length(sys.parse("2314")), 2u);
    EXPECT_EQ(oracle::inversions(oracle::parse("2314")), 2);
    EXPECT_EQ(sys.length(sys.identity()), 0u);
    EXPECT_EQ(sys.length(sys.longest()), 6u);
}

TEST(Length, EqualsInversionCount) {
    const auto sys = build_system(CoxeterSpec::symmetric(5));
    for (ElementId w = 0; w < sys.size(); ++w) {
        const oracle::Perm p(sys.element(w).one_line.begin(), sys.element(w).one_line.end());
        EXPECT_EQ(static_cast<int>(sys.length(w)), oracle::inversions(p));
        EXPECT_EQ(sys.element(w).word.size(), sys.length(w));
    }
}

TEST(RecoilSet, Examples) {
    const auto& sys = s4();
    EXPECT_EQ(sys.recoil_set(sys.parse("2341")).to_string(), "1");
    EXPECT_TRUE(sys.recoil_set(sys.identity()).empty());
    EXPECT_EQ(sys.recoil_set(sys.longest()), sys.all_generators());
}

TEST(RecoilSet, PositionalAndLengthCriteriaAgree) {
    for (unsigned n = 2; n <= 6; ++n) {
        const auto sys = build_system(CoxeterSpec::symmetric(n));
        for (ElementId w = 0; w < sys.size(); ++w) {
            EXPECT_EQ(recoil_set_positional(sys.element(w).one_line), sys.recoil_set(w));
            const oracle::Perm p(sys.element(w).one_line.begin(), sys.element(w).one_line.end());
            std::set<int> r;
            for (unsigned i : sys.recoil_set(w).one_based()) r.insert(static_cast<int>(i));
            EXPECT_EQ(r, oracle::recoils(p));
        }
    }
}

TEST(DescentSet, Examples) {
    const auto s3 = build_system(CoxeterSpec::symmetric(3));
    EXPECT_EQ(s3.descent_set(s3.parse("132")).to_string(), "2");
    EXPECT_TRUE(s3.descent_set(s3.identity()).empty());
    const auto& sys = s4();
    EXPECT_EQ(sys.descent_set(sys.parse("2413")).to_string(), "2");
    EXPECT_EQ(oracle::descents(oracle::parse("2413")), (std::set<int>{2}));
}

TEST(DescentSet, IsRecoilSetOfInverse) {
    for (const auto& spec : {CoxeterSpec::symmetric(5), CoxeterSpec::dihedral(5), CoxeterSpec::matrix(kH3)}) {
        const auto sys = build_system(spec);
        for (ElementId w = 0; w < sys.size(); ++w) {
            EXPECT_EQ(sys.descent_set(w), sys.recoil_set(sys.inverse(w)));
            if (sys.is_symmetric()) {
                EXPECT_EQ(sys.descent_set(w), descent_set_positional(sys.element(w).one_line));
            }
        }
    }
}

TEST(WeakOrder, Examples) {
    const auto& sys = s4();
    for (ElementId w = 0; w < sys.size(); ++w) {
        EXPECT_TRUE(sys.weak_leq(sys.identity(), w));
        EXPECT_EQ(sys.weak_leq(sys.longest(), w), w == sys.longest());
        EXPECT_TRUE(sys.weak_leq(w, sys.longest()));
    }
    EXPECT_TRUE(sys.weak_leq(sys.parse("2134"), sys.parse("2341")));
    EXPECT_EQ(sys.length(sys.multiply(sys.inverse(sys.parse("2134")), sys.parse("2341"))), 2u);
}

TEST(WeakOrder, IsPartialOrder) {
    const auto sys = build_system(CoxeterSpec::matrix(kB3));
    for (ElementId u = 0; u < sys.size(); ++u)
        for (ElementId v = 0; v < sys.size(); ++v) {
            if (u != v && sys.weak_leq(u, v)) {
                EXPECT_FALSE(sys.weak_leq(v, u));
            }
        }
}

TEST(CayleyTables, Invariants) {
    for (const auto& spec : {CoxeterSpec::symmetric(5), CoxeterSpec::dihedral(8), CoxeterSpec::matrix(kH3)}) {
        const auto sys = build_system(spec);
        std::size_t zero_length = 0;
        std::size_t max_length = 0;
        for (ElementId w = 0; w < sys.size(); ++w) {
            zero_length += sys.length(w) == 0;
            max_length += sys.length(w) == sys.length(sys.longest());
            for (Generator s = 0; s < sys.rank(); ++s) {
                EXPECT_EQ(sys.right(sys.right(w, s), s), w);
                EXPECT_EQ(sys.left(s, sys.left(s, w)), w);
                const int d = static_cast<int>(sys.length(sys.right(w, s))) - static_cast<int>(sys.length(w));
                EXPECT_TRUE(d == 1 || d == -1);
                EXPECT_EQ(sys.left(s, w), sys.multiply(sys.generator(s), w));
            }
        }
        EXPECT_EQ(zero_length, 1u);
        EXPECT_EQ(max_length, 1u);
        EXPECT_EQ(sys.recoil_set(sys.longest()), sys.all_generators());
        EXPECT_EQ(sys.descent_set(sys.longest()), sys.all_generators());
    }
}

// The stored word is the lex-least reduced word: greedy smallest left descent
// for permutations, braid-closure minimum for word realizations. Both must
// coincide with the braid-closure minimum.
TEST(Words, CanonicalWordIsLexLeastInBraidClass) {
    for (const auto& spec : {CoxeterSpec::symmetric(4), CoxeterSpec::matrix(kB3), CoxeterSpec::dihedral(5)}) {
        const auto sys = build_system(spec);
        for (ElementId w = 0; w < sys.size(); ++w) {
            const Word& word = sys.element(w).word;
            EXPECT_EQ(words::canonical(word, sys.matrix()), word);
            EXPECT_TRUE(words::is_reduced(word, sys.matrix()));
            EXPECT_EQ(sys.evaluate(word), w);
        }
    }
}

TEST(Words, TitsReducedness) {
    const CoxeterMatrix a2{{1, 3}, {3, 1}};
    EXPECT_TRUE(words::is_reduced({0, 1, 0}, a2));
    EXPECT_FALSE(words::is_reduced({0, 1, 0, 1}, a2));  // braid to 1,0,1,1
    EXPECT_FALSE(words::is_reduced({0, 0}, a2));
    EXPECT_EQ(words::braid_closure({0, 1, 0}, a2).size(), 2u);
    const CoxeterMatrix i6{{1, 6}, {6, 1}};
    EXPECT_EQ(words::braid_closure({0, 1, 0, 1, 0, 1}, i6).size(), 2u);
}

TEST(Exchange, Examples) {
    const auto s3 = build_system(CoxeterSpec::symmetric(3));
    // 321 = s1 s2 s1; s1·321 = s2 s1.
    const Word w0{0, 1, 0};
    ASSERT_EQ(s3.evaluate(w0), s3.parse("321"));
    const Word got = apply_exchange(s3, w0, 0);
    EXPECT_EQ(got, (Word{1, 0}));
    EXPECT_EQ(s3.evaluate(got), s3.left(0, s3.parse("321")));

    EXPECT_EQ(apply_exchange(s3, Word{0}, 0), Word{});

    const auto i6 = build_system(CoxeterSpec::dihedral(6));
    const Word ststst{0, 1, 0, 1, 0, 1};
    EXPECT_EQ(apply_exchange(i6, ststst, 0), (Word{1, 0, 1, 0, 1}));
    EXPECT_EQ(i6.recoil_set(i6.evaluate(Word{1, 0, 1, 0, 1})), GeneratorSet::single(1));
}

TEST(Exchange, NotADescent) {
    const auto s3 = build_system(CoxeterSpec::symmetric(3));
    EXPECT_THROW(apply_exchange(s3, Word{0}, 1), NotADescent);
    EXPECT_THROW(apply_exchange(s3, Word{0, 0}, 0), std::invalid_argument);
}

TEST(Exchange, DeletesExactlyOneLetterForEveryDescent) {
    for (const auto& spec : {CoxeterSpec::symmetric(5), CoxeterSpec::matrix(kB3)}) {
        const auto sys = build_system(spec);
        std::mt19937 rng(3);
        for (ElementId w = 0; w < sys.size(); ++w) {
            // A random reduced word of w, not just the canonical one.
            auto closure = words::braid_closure(sys.element(w).word, sys.matrix());
            const Word& word = closure[std::uniform_int_distribution<std::size_t>(0, closure.size() - 1)(rng)];
            for (Generator s : sys.recoil_set(w).indices()) {
                const Word out = apply_exchange(sys, word, static_cast<Generator>(s));
                ASSERT_EQ(out.size() + 1, word.size());
                EXPECT_EQ(sys.evaluate(out), sys.left(static_cast<Generator>(s), w));
            }
        }
    }
}

TEST(Labels, ParseRoundTrip) {
    for (const auto& spec : {CoxeterSpec::symmetric(4), CoxeterSpec::dihedral(6), CoxeterSpec::matrix(kB3)}) {
        const auto sys = build_system(spec);
        for (ElementId w = 0; w < sys.size(); ++w) EXPECT_EQ(sys.parse(sys.label(w)), w);
    }
    EXPECT_THROW(s4().parse("1224"), std::invalid_argument);
    EXPECT_THROW(s4().parse("12345"), std::invalid_argument);
}
