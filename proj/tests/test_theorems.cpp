#include <gtest/gtest.h>

#include "cellkernel/theorems.hpp"

using namespace cellkernel;

namespace {

Instance inst(int n, int r, bool half, RingSpec ring) { return Instance(n, r, half, std::move(ring)); }

}  // namespace

TEST(KernelCellIdeal, Examples) {
    auto rep = check_kernel_cell_ideal(inst(3, 1, false, RationalRing{}));
    EXPECT_TRUE(rep.pass);
    EXPECT_EQ(rep.ranks["kernel"], 1);
    rep = check_kernel_cell_ideal(inst(4, 2, false, IntegerRing{}));
    EXPECT_TRUE(rep.pass);
    EXPECT_EQ(rep.ranks["kernel"], 1);
    rep = check_kernel_cell_ideal(inst(5, 2, false, PrimeField(2)));
    EXPECT_TRUE(rep.pass);
    EXPECT_EQ(rep.ranks["kernel"], 42);
    EXPECT_THROW(check_kernel_cell_ideal(inst(3, 2, false, IntegerRing{})), DomainError);
}

TEST(KernelCellIdeal, PredictedRanks) {
    EXPECT_EQ(predicted_kernel_rank(3, 1), 1u);
    EXPECT_EQ(predicted_kernel_rank(4, 1), 14u);
    EXPECT_EQ(predicted_kernel_rank(5, 1), 103u);
    EXPECT_EQ(predicted_kernel_rank(5, 2), 42u);
    EXPECT_EQ(predicted_kernel_rank(5, 3), 1u);
}

TEST(KernelCellIdeal, FailureCarriesWitness) {
    CheckReport rep{"x"};
    rep.finish(false);
    EXPECT_TRUE(rep.witness.has_value());
    EXPECT_TRUE(rep.to_json().contains("witness"));
    CheckReport ok{"y"};
    ok.finish(true, "unused");
    EXPECT_FALSE(ok.to_json().contains("witness"));
}

TEST(CellIdealAnnihilates, Grid) {
    for (const auto& ring : {RingSpec{IntegerRing{}}, RingSpec{PrimeField(3)}})
        EXPECT_TRUE(check_cell_ideal_annihilates(inst(5, 1, false, ring)).pass);
}

TEST(AnnihilatorTransfer, Examples) {
    EXPECT_TRUE(check_annihilator_transfer(inst(4, 2, false, RationalRing{})).pass);
    const auto rep = check_annihilator_transfer(inst(5, 3, false, RationalRing{}));
    EXPECT_TRUE(rep.pass);
    EXPECT_EQ(rep.ranks["kernel"], 1);
    const auto half = check_annihilator_transfer(inst(5, 2, true, RationalRing{}));
    EXPECT_TRUE(half.pass);
    EXPECT_EQ(half.ranks["alpha"], "2,1,1");
    EXPECT_EQ(half.ranks["annihilator"], 1);
}

TEST(RankIndependence, AcrossRings) {
    const auto rep = check_rank_independence(5, 1, false);
    EXPECT_TRUE(rep.pass);
    EXPECT_EQ(rep.ranks["Z"], 103);
    EXPECT_EQ(rep.ranks["F2"], 103);
}

TEST(WhenZero, Examples) {
    auto rep = check_when_zero(3, Partition({3}), TensorIndex({1}));
    EXPECT_TRUE(rep.pass);
    EXPECT_TRUE(rep.ranks["annihilated"].get<bool>());
    rep = check_when_zero(3, Partition({1, 1, 1}), TensorIndex({2, 3}));
    EXPECT_TRUE(rep.pass);
    EXPECT_FALSE(rep.ranks["annihilated"].get<bool>());
    rep = check_when_zero(4, Partition({2, 2}), TensorIndex({1, 2}));
    EXPECT_TRUE(rep.pass);
    EXPECT_EQ(rep.ranks["stabilizer_order"], 2);
    EXPECT_TRUE(rep.ranks["annihilated"].get<bool>());
    EXPECT_THROW(check_when_zero(3, Partition({3}), TensorIndex({1, 1})), DomainError);
}

TEST(HookEmbedding, Examples) {
    auto rep = check_hook_embedding(3, 1, Partition({3}));
    ASSERT_TRUE(rep.pass);
    // z x_(2,1) = x_(3) for the returned z; one valid choice is e + (1 3) + (2 3)
    const IntegerRing z;
    auto known = GroupAlgElem<IntegerRing>::identity(3, z);
    known.add_term(Permutation::transposition(3, 1, 3), 1);
    known.add_term(Permutation::transposition(3, 2, 3), 1);
    EXPECT_EQ(known * x_element(Partition({2, 1}), 3, z), x_element(Partition({3}), 3, z));
    rep = check_hook_embedding(4, 2, Partition({2, 2}));
    EXPECT_TRUE(rep.pass);
    rep = check_hook_embedding(4, 2, alpha(4, 2));
    EXPECT_TRUE(rep.pass);
    EXPECT_THROW(check_hook_embedding(4, 1, Partition({2, 2})), DomainError);
}

TEST(Char0Semisimple, Examples) {
    EXPECT_EQ(check_char0_semisimple(inst(3, 1, false, RationalRing{})).ranks["kernel"], 1);
    EXPECT_EQ(check_char0_semisimple(inst(4, 2, false, RationalRing{})).ranks["kernel"], 1);
    const auto rep = check_char0_semisimple(inst(5, 2, false, RationalRing{}));
    EXPECT_TRUE(rep.pass);
    EXPECT_EQ(rep.ranks["kernel"], 42);
    EXPECT_EQ(rep.ranks["image"], 78);
    EXPECT_THROW(check_char0_semisimple(inst(5, 2, false, IntegerRing{})), DomainError);
}

TEST(Decomposition, Examples) {
    auto rep = check_decomposition(inst(3, 2, false, RationalRing{}));
    EXPECT_TRUE(rep.pass);
    EXPECT_EQ(rep.ranks["dimension"], 9);
    rep = check_decomposition(inst(3, 2, true, RationalRing{}));
    EXPECT_TRUE(rep.pass);
    EXPECT_EQ(rep.ranks["dimension"], 9);
    rep = check_decomposition(inst(2, 3, false, RationalRing{}));
    EXPECT_TRUE(rep.pass);
    EXPECT_EQ(rep.ranks["orbit_total"], 8);
}

TEST(Faithful, Examples) {
    EXPECT_TRUE(check_faithful(inst(3, 2, false, RationalRing{})).pass);
    auto rep = check_faithful(inst(3, 1, false, RationalRing{}));
    EXPECT_TRUE(rep.pass);
    EXPECT_EQ(rep.ranks["kernel"], 1);
    rep = check_faithful(inst(4, 2, true, RationalRing{}));
    EXPECT_TRUE(rep.pass);
    EXPECT_EQ(rep.ranks["kernel"], 0);
}

TEST(SchurWeyl, Examples) {
    auto rep = check_schur_weyl(inst(2, 2, false, RationalRing{}));
    EXPECT_TRUE(rep.pass);
    EXPECT_EQ(rep.ranks["commutant"], 2);
    rep = check_schur_weyl(inst(3, 1, false, RationalRing{}));
    EXPECT_TRUE(rep.pass);
    EXPECT_EQ(rep.ranks["commutant"], 5);
    EXPECT_TRUE(check_schur_weyl(inst(3, 2, false, PrimeField(2))).pass);
    EXPECT_THROW(check_schur_weyl(inst(3, 1, false, IntegerRing{})), DomainError);
    EXPECT_THROW(check_schur_weyl(inst(10, 2, false, RationalRing{})), SizeLimitError);
}

TEST(HModuleIsos, Examples) {
    const auto rep = check_h_module_isos(4);
    EXPECT_TRUE(rep.pass);
    EXPECT_EQ(rep.ranks["orbits"]["2"]["orbit"], 12);
    EXPECT_EQ(rep.ranks["orbits"]["2"]["stabilizer"], 2);
    EXPECT_EQ(rep.ranks["orbits"]["3"]["stabilizer"], 1);
    EXPECT_EQ(rep.ranks["orbits"]["4"]["orbit"], 24);
}

TEST(MurphyStructure, UnimodularAndTwoSided) {
    for (int d = 1; d <= 5; ++d) EXPECT_TRUE(check_murphy_unimodular(d).pass) << d;
    EXPECT_TRUE(check_cell_ideal_two_sided(5, 2, IntegerRing{}).pass);
    EXPECT_TRUE(check_cell_ideal_two_sided(4, 1, PrimeField(2)).pass);
}

TEST(GeneralMu, AllShapesOfFour) {
    for (const auto& mu : partitions_of(4)) {
        EXPECT_TRUE(check_general_mu(4, mu, RationalRing{}).pass) << mu;
        EXPECT_TRUE(check_general_mu(4, mu, PrimeField(2)).pass) << mu;
    }
}

TEST(DiagramChecks, Soundness) {
    EXPECT_TRUE(check_diagram_associativity(3, 50, 1).pass);
    EXPECT_TRUE(check_half_closure(2).pass);
    EXPECT_TRUE(check_permutation_homomorphism(3).pass);
}
