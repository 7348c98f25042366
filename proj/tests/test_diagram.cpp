#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "cellkernel/diagram.hpp"

using namespace cellkernel;

namespace {

// Stacking oracle: graph search over the 3r nodes instead of union-find.
std::pair<int, std::string> stack_oracle(const Diagram& x, const Diagram& y) {
    const int r = x.strands();
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(3 * r));
    auto link = [&](int a, int b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    };
    for (int i = 0; i < 2 * r; ++i)
        for (int j = 0; j < 2 * r; ++j) {
            if (x.block_of(i) == x.block_of(j)) link(i, j);
            if (y.block_of(i) == y.block_of(j)) link(r + i, r + j);
        }
    std::vector<int> comp(static_cast<std::size_t>(3 * r), -1);
    int ncomp = 0;
    for (int s = 0; s < 3 * r; ++s) {
        if (comp[s] != -1) continue;
        std::vector<int> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            int a = stack.back();
            stack.pop_back();
            for (int b : adj[a])
                if (comp[b] == -1) comp[b] = ncomp, stack.push_back(b);
        }
        ++ncomp;
    }
    std::vector<bool> outer(static_cast<std::size_t>(ncomp), false);
    for (int i = 0; i < r; ++i) outer[comp[i]] = outer[comp[2 * r + i]] = true;
    int m = 0;
    for (int c = 0; c < ncomp; ++c) m += !outer[c];
    std::vector<int> labels;
    for (int i = 0; i < r; ++i) labels.push_back(comp[i]);
    for (int i = 0; i < r; ++i) labels.push_back(comp[2 * r + i]);
    return {m, Diagram::from_labels(r, labels).to_string()};
}

}  // namespace

TEST(Diagrams, BellCounts) {
    const std::vector<std::size_t> bell{1, 2, 15, 203, 4140};
    for (int r = 1; r <= 4; ++r) EXPECT_EQ(all_diagrams(r).size(), bell[r]);
    EXPECT_EQ(half_diagrams(1).size(), 5u);
    EXPECT_EQ(half_diagrams(2).size(), 52u);
    EXPECT_EQ(half_diagrams(3).size(), 877u);
}

TEST(Diagrams, ParseAndCanonicalForm) {
    const auto x = Diagram::parse("2',1 | 2,1'");
    EXPECT_EQ(x.to_string(), "1,2'|2,1'");
    for (const auto& d : all_diagrams(3)) EXPECT_EQ(Diagram::parse(d.to_string(), 3), d);
    EXPECT_THROW(Diagram::parse("1|1"), ParseError);
    EXPECT_THROW(Diagram::parse("1|x'"), ParseError);
    EXPECT_THROW(Diagram::parse("1,1'|2"), ParseError);
    EXPECT_THROW(Diagram::parse("1,2", 1), ParseError);
}

TEST(Diagrams, FigureOneProduct) {
    const auto x = Diagram::parse("1|2,3,3'|4,1'|5,5'|2'|4'");
    const auto y = Diagram::parse("1,3,3',4'|2,1'|4|5,2',5'");
    const auto [m, z] = multiply_diagrams(x, y);
    EXPECT_EQ(m, 1);
    EXPECT_EQ(z, Diagram::parse("1|2,3,4,3',4'|5,2',5'|1'"));
}

TEST(Diagrams, SmallProducts) {
    const auto a = Diagram::parse("1|1'");
    const auto [m, z] = multiply_diagrams(a, a);
    EXPECT_EQ(m, 1);
    EXPECT_EQ(z, a);
    for (const auto& x : all_diagrams(3)) {
        EXPECT_EQ(multiply_diagrams(Diagram::identity(3), x).diagram, x);
        EXPECT_EQ(multiply_diagrams(x, Diagram::identity(3)).middle_components, 0);
    }
    EXPECT_THROW(multiply_diagrams(a, Diagram::identity(2)), DomainError);
}

TEST(Diagrams, ProductMatchesGraphOracle) {
    const auto d2 = all_diagrams(2);
    for (const auto& x : d2)
        for (const auto& y : d2) {
            const auto [m, z] = multiply_diagrams(x, y);
            EXPECT_EQ(std::make_pair(m, z.to_string()), stack_oracle(x, y));
        }
    std::mt19937 gen(5);
    const auto d4 = all_diagrams(4);
    std::uniform_int_distribution<std::size_t> pick(0, d4.size() - 1);
    for (int k = 0; k < 500; ++k) {
        const auto& x = d4[pick(gen)];
        const auto& y = d4[pick(gen)];
        const auto [m, z] = multiply_diagrams(x, y);
        EXPECT_EQ(std::make_pair(m, z.to_string()), stack_oracle(x, y));
    }
}

TEST(Diagrams, PermutationDiagrams) {
    EXPECT_EQ(permutation_to_diagram(Permutation::identity(3)), Diagram::identity(3));
    EXPECT_EQ(permutation_to_diagram(Permutation::transposition(2, 1, 2)).to_string(), "1,2'|2,1'");
    const auto group = all_permutations(3);
    for (const auto& s : group)
        for (const auto& t : group) {
            const auto [m, z] = multiply_diagrams(permutation_to_diagram(s), permutation_to_diagram(t));
            EXPECT_EQ(m, 0);
            EXPECT_EQ(z, permutation_to_diagram(t * s));
        }
}

TEST(Diagrams, HalfDiagrams) {
    EXPECT_TRUE(is_half_diagram(Diagram::identity(3)));
    EXPECT_TRUE(is_half_diagram(Diagram::parse("1,2'|2,1'|3,3'")));
    EXPECT_FALSE(is_half_diagram(Diagram::parse("1,1'|2|2'")));
}

TEST(DiagramAlgebra, DeltaWeightsAndAssociativity) {
    const IntegerRing z;
    const auto a = DiagramAlgElem<IntegerRing>::basis(Diagram::parse("1|1'"), 4, z);
    auto expected = DiagramAlgElem<IntegerRing>(1, 4, z);
    expected.add_term(Diagram::parse("1|1'"), 4);
    EXPECT_EQ(a * a, expected);

    std::mt19937 gen(9);
    const auto d3 = all_diagrams(3);
    std::uniform_int_distribution<std::size_t> pick(0, d3.size() - 1);
    std::uniform_int_distribution<long> coeff(-2, 2);
    auto random_elem = [&] {
        DiagramAlgElem<IntegerRing> e(3, 5, z);
        for (int k = 0; k < 3; ++k) e.add_term(d3[pick(gen)], coeff(gen));
        return e;
    };
    for (int k = 0; k < 30; ++k) {
        const auto x = random_elem(), y = random_elem(), w = random_elem();
        EXPECT_EQ((x * y) * w, x * (y * w));
        EXPECT_EQ(x * (y + w), x * y + x * w);
    }
    EXPECT_THROW(a * DiagramAlgElem<IntegerRing>::basis(Diagram::parse("1|1'"), 3, z), DomainError);
}
