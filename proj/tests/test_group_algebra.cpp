#include <gtest/gtest.h>

#include <random>
#include <set>

#include "cellkernel/group_algebra.hpp"
#include "cellkernel/linalg.hpp"

using namespace cellkernel;

namespace {

template <class Ring>
GroupAlgElem<Ring> random_element(int d, std::mt19937& gen, const Ring& ring) {
    const auto group = all_permutations(d);
    std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
    std::uniform_int_distribution<long> coeff(-3, 3);
    GroupAlgElem<Ring> a(d, ring);
    for (int k = 0; k < 5; ++k) a.add_term(group[pick(gen)], ring.from_int(coeff(gen)));
    return a;
}

GroupAlgElem<IntegerRing> sum_of(const std::vector<Permutation>& ws, bool signed_sum) {
    GroupAlgElem<IntegerRing> a(ws.front().degree(), IntegerRing{});
    for (const auto& w : ws) a.add_term(w, signed_sum ? w.sign() : 1);
    return a;
}

}  // namespace

TEST(GroupAlgebra, RingAxioms) {
    std::mt19937 gen(11);
    const RationalRing q;
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_element(4, gen, q), b = random_element(4, gen, q), c = random_element(4, gen, q);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(GroupAlgElem<RationalRing>::identity(4, q) * a, a);
    }
    EXPECT_THROW(GroupAlgElem<RationalRing>::identity(3, q) * GroupAlgElem<RationalRing>::identity(4, q), DomainError);
}

TEST(GroupAlgebra, ProductFollowsComposition) {
    const IntegerRing z;
    const auto v = Permutation::parse("[2,3,1]"), w = Permutation::parse("[2,1,3]");
    const auto prod = GroupAlgElem<IntegerRing>::basis(v, z) * GroupAlgElem<IntegerRing>::basis(w, z);
    EXPECT_EQ(prod, GroupAlgElem<IntegerRing>::basis(v * w, z));
}

TEST(GroupAlgebra, YoungSums) {
    const IntegerRing z;
    auto expected = GroupAlgElem<IntegerRing>::identity(3, z);
    expected.add_term(Permutation::parse("[2,1,3]"), 1);
    EXPECT_EQ(x_element(Partition({2, 1}), 3, z), expected);
    expected = GroupAlgElem<IntegerRing>::identity(3, z);
    expected.add_term(Permutation::parse("[2,1,3]"), -1);
    EXPECT_EQ(y_element(Partition({2, 1}), 3, z), expected);
}

TEST(Murphy, DegreeTwoBasis) {
    const auto basis = murphy_basis(2, MurphyKind::y, IntegerRing{});
    ASSERT_EQ(basis.size(), 2u);
    auto e_minus_s = GroupAlgElem<IntegerRing>::identity(2, IntegerRing{});
    e_minus_s.add_term(Permutation::parse("[2,1]"), -1);
    EXPECT_EQ(basis[0].shape, Partition({2}));
    EXPECT_EQ(basis[0].element, e_minus_s);
    EXPECT_EQ(basis[1].shape, Partition({1, 1}));
    EXPECT_EQ(basis[1].element, GroupAlgElem<IntegerRing>::identity(2, IntegerRing{}));
}

TEST(Murphy, DiagonalElementsAreRowStabilizerSums) {
    for (int d = 1; d <= 5; ++d)
        for (const auto& l : partitions_of(d))
            for (const auto& t : standard_tableaux(l)) {
                std::vector<int> row_of(static_cast<std::size_t>(d) + 1);
                for (std::size_t i = 0; i < t.rows().size(); ++i)
                    for (int k : t.rows()[i]) row_of[k] = static_cast<int>(i);
                std::vector<Permutation> stab;
                for (const auto& w : all_permutations(d)) {
                    bool keeps = true;
                    for (int k = 1; k <= d; ++k) keeps = keeps && row_of[w(k)] == row_of[k];
                    if (keeps) stab.push_back(w);
                }
                EXPECT_EQ(murphy_element(MurphyKind::x, t, t, IntegerRing{}), sum_of(stab, false));
                EXPECT_EQ(murphy_element(MurphyKind::y, t, t, IntegerRing{}), sum_of(stab, true));
            }
    const auto t = row_reading_tableau(Partition({3, 2}));
    EXPECT_EQ(murphy_element(MurphyKind::y, t, t, IntegerRing{}), y_element(Partition({3, 2}), 5, IntegerRing{}));
}

TEST(Murphy, InvolutionsPermuteTheBasis) {
    const IntegerRing z;
    for (int d = 1; d <= 5; ++d) {
        const auto xs = murphy_basis(d, MurphyKind::x, z);
        const auto ys = murphy_basis(d, MurphyKind::y, z);
        ASSERT_EQ(xs.size(), factorial(d));
        std::set<std::string> ys_set, signed_xs;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            // the sign map takes x_st to y_st up to sgn d(s) sgn d(t)
            const mpz_class eps = d_of(xs[i].s).sign() * d_of(xs[i].t).sign();
            EXPECT_EQ(sign_involution(xs[i].element), eps * ys[i].element);
            EXPECT_EQ(star_involution(xs[i].element), murphy_element(MurphyKind::x, xs[i].t, xs[i].s, z));
            EXPECT_EQ(star_involution(ys[i].element), murphy_element(MurphyKind::y, ys[i].t, ys[i].s, z));
            ys_set.insert(ys[i].element.to_json().dump());
            signed_xs.insert((eps * sign_involution(xs[i].element)).to_json().dump());
        }
        EXPECT_EQ(ys_set, signed_xs);
    }
}

TEST(Murphy, BasisIsLinearlyIndependent) {
    for (int d = 1; d <= 5; ++d) {
        Matrix<RationalRing> m(0, factorial(d), RationalRing{});
        for (const auto& e : murphy_basis(d, MurphyKind::y, RationalRing{})) m.append_row(e.element.coefficient_vector());
        EXPECT_EQ(rank(m), factorial(d));
    }
}

TEST(Murphy, RejectsMismatchedShapes) {
    EXPECT_THROW(murphy_element(MurphyKind::x, Tableau::parse("[[1,2],[3]]"), Tableau::parse("[[1,2,3]]"), IntegerRing{}),
                 DomainError);
}

TEST(CellIdeal, UpwardClosure) {
    EXPECT_TRUE(is_upward_closed(5, fewer_rows_than(3)));
    EXPECT_FALSE(is_upward_closed(4, [](const Partition& l) { return l == Partition({2, 2}); }));
    EXPECT_THROW(cell_ideal_y(4, [](const Partition& l) { return l == Partition({2, 2}); }, IntegerRing{}), DomainError);
    EXPECT_EQ(cell_ideal_y(5, fewer_rows_than(3), IntegerRing{}).size(), 42u);
}

TEST(GroupAlgebra, JsonRoundTrip) {
    std::mt19937 gen(3);
    const auto a = random_element(4, gen, RationalRing{});
    EXPECT_EQ(GroupAlgElem<RationalRing>::from_json(a.to_json(), RationalRing{}), a);
    const PrimeField f3(3);
    const auto b = random_element(3, gen, f3);
    EXPECT_EQ(GroupAlgElem<PrimeField>::from_json(b.to_json(), f3), b);
    EXPECT_THROW(GroupAlgElem<PrimeField>::from_json(a.to_json(), f3), ParseError);
}
