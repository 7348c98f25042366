#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "cellkernel/combinatorics.hpp"

using namespace cellkernel;

namespace {

// Brute-force oracles: fill the shape with 1..d in every possible way.
std::vector<Tableau> all_fillings(const Partition& lambda) {
    std::vector<int> values(static_cast<std::size_t>(lambda.size()));
    std::iota(values.begin(), values.end(), 1);
    std::vector<Tableau> out;
    do {
        std::vector<std::vector<int>> rows;
        std::size_t k = 0;
        for (int len : lambda.parts()) {
            rows.emplace_back(values.begin() + k, values.begin() + k + len);
            k += len;
        }
        out.emplace_back(std::move(rows));
    } while (std::next_permutation(values.begin(), values.end()));
    return out;
}

std::uint64_t hook_length_count(const Partition& lambda) {
    const auto t = transpose(lambda);
    std::uint64_t denom = 1;
    for (int i = 0; i < lambda.rows(); ++i)
        for (int j = 0; j < lambda[i]; ++j) denom *= (lambda[i] - j - 1) + (t[j] - i - 1) + 1;
    return factorial(lambda.size()) / denom;
}

int inversions(const Permutation& w) {
    int c = 0;
    for (int i = 1; i <= w.degree(); ++i)
        for (int j = i + 1; j <= w.degree(); ++j) c += w(i) > w(j);
    return c;
}

}  // namespace

TEST(Partitions, CountsMatchPartitionNumbers) {
    const std::vector<std::size_t> p{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int d = 0; d <= 10; ++d) EXPECT_EQ(partitions_of(d).size(), p[d]) << d;
}

TEST(Partitions, ReverseLexOrder) {
    std::vector<std::string> got;
    for (const auto& l : partitions_of(4)) got.push_back(l.to_string());
    EXPECT_EQ(got, (std::vector<std::string>{"4", "3,1", "2,2", "2,1,1", "1,1,1,1"}));
    ASSERT_EQ(partitions_of(0).size(), 1u);
    EXPECT_EQ(partitions_of(0)[0].rows(), 0);
}

TEST(Partitions, RejectsNonPartitions) {
    EXPECT_THROW(Partition({1, 2}), DomainError);
    EXPECT_THROW(Partition({2, 0}), DomainError);
    EXPECT_THROW(Partition::parse("3,x"), ParseError);
    EXPECT_EQ(Partition::parse("3,1,1"), Partition({3, 1, 1}));
}

TEST(Partitions, TransposeIsInvolution) {
    EXPECT_EQ(transpose(Partition({3, 1})), Partition({2, 1, 1}));
    for (int d = 0; d <= 8; ++d)
        for (const auto& l : partitions_of(d)) EXPECT_EQ(transpose(transpose(l)), l);
}

TEST(Dominance, Examples) {
    EXPECT_TRUE(dominates(Partition({3, 1}), Partition({2, 2})));
    EXPECT_FALSE(dominates(Partition({2, 2}), Partition({3, 1})));
    EXPECT_FALSE(dominates(Partition({3, 1, 1, 1}), Partition({2, 2, 2})));
    EXPECT_FALSE(dominates(Partition({2, 2, 2}), Partition({3, 1, 1, 1})));
    EXPECT_THROW(dominates(Partition({2}), Partition({1})), DomainError);
}

TEST(Dominance, TransposeReversesOrder) {
    for (int d = 1; d <= 7; ++d)
        for (const auto& a : partitions_of(d))
            for (const auto& b : partitions_of(d)) EXPECT_EQ(dominates(a, b), dominates(transpose(b), transpose(a)));
}

TEST(Hooks, AlphaAndHookSet) {
    EXPECT_EQ(alpha(5, 2), Partition({3, 1, 1}));
    const auto hooks = hook_set(6, 3);
    ASSERT_EQ(hooks.size(), 3u);
    EXPECT_EQ(hooks.back(), alpha(6, 3));
    for (const auto& h : hooks) EXPECT_TRUE(dominates(h, alpha(6, 3)));
    EXPECT_THROW(alpha(3, 3), DomainError);
    EXPECT_THROW(hook_set(3, 2), DomainError);
}

TEST(Hooks, FewerRowsIffNotDominatingAlphaTranspose) {
    // lambda has fewer than d - r rows exactly when lambda^t does not dominate alpha(d,r)
    for (int d = 3; d <= 8; ++d)
        for (int r = 1; r + 1 < d; ++r)
            for (const auto& l : partitions_of(d))
                EXPECT_EQ(l.rows() < d - r, !dominates(transpose(l), alpha(d, r)));
}

TEST(Stirling, RecurrenceAndBell) {
    const std::vector<std::size_t> bell{1, 1, 2, 5, 15, 52, 203, 877, 4140};
    for (int m = 0; m <= 8; ++m) {
        const auto rgs = restricted_growth_strings(m);
        EXPECT_EQ(rgs.size(), bell[m]);
        std::uint64_t total = 0;
        for (int l = 0; l <= m; ++l) {
            std::size_t count = 0;
            for (const auto& a : rgs) count += (m == 0 ? 0 : *std::max_element(a.begin(), a.end()) + 1) == l;
            EXPECT_EQ(stirling2(m, l), count) << m << "," << l;
            total += stirling2(m, l);
            if (m > 0 && l > 0) EXPECT_EQ(stirling2(m, l), l * stirling2(m - 1, l) + stirling2(m - 1, l - 1));
        }
        EXPECT_EQ(total, bell[m]);
    }
    EXPECT_EQ(stirling2(2, 5), 0u);
}

TEST(Stirling, FallingFactorialIdentity) {
    for (int n = 1; n <= 6; ++n)
        for (int r = 1; r <= 5; ++r) {
            std::uint64_t sum = 0, power = 1;
            for (int l = 1; l <= r; ++l) sum += stirling2(r, l) * falling_factorial(n, l);
            for (int k = 0; k < r; ++k) power *= n;
            EXPECT_EQ(sum, power);
        }
}

TEST(Permutations, CompositionConvention) {
    const auto v = Permutation::parse("[2,3,1]");
    const auto w = Permutation::transposition(3, 1, 2);
    const auto vw = v * w;
    for (int k = 1; k <= 3; ++k) EXPECT_EQ(vw(k), v(w(k)));
    EXPECT_EQ(vw, Permutation::parse("[3,2,1]"));
}

TEST(Permutations, GroupAxiomsSignAndRank) {
    const auto group = all_permutations(5);
    ASSERT_EQ(group.size(), 120u);
    for (std::size_t i = 0; i < group.size(); ++i) {
        const auto& w = group[i];
        EXPECT_EQ(w.rank(), i);
        EXPECT_TRUE((w * w.inverse()).is_identity());
        EXPECT_EQ(w.sign(), inversions(w) % 2 ? -1 : 1);
        EXPECT_EQ(Permutation::parse(w.to_string()), w);
    }
    for (std::size_t i = 0; i < group.size(); i += 7)
        for (std::size_t j = 0; j < group.size(); j += 11)
            EXPECT_EQ((group[i] * group[j]).sign(), group[i].sign() * group[j].sign());
    EXPECT_THROW(Permutation::parse("[1,1]"), ParseError);
    EXPECT_THROW(all_permutations(9), SizeLimitError);
}

TEST(Tableaux, StandardTableauxMatchBruteForce) {
    for (int d = 1; d <= 6; ++d) {
        std::uint64_t sum_sq = 0;
        for (const auto& l : partitions_of(d)) {
            const auto tabs = standard_tableaux(l);
            std::set<std::string> brute, got;
            for (const auto& t : all_fillings(l))
                if (t.is_standard()) brute.insert(t.to_string());
            for (const auto& t : tabs) got.insert(t.to_string());
            EXPECT_EQ(got, brute) << l;
            EXPECT_EQ(tabs.size(), got.size());
            EXPECT_EQ(tabs.size(), hook_length_count(l));
            EXPECT_EQ(tabs.front(), row_reading_tableau(l));
            for (std::size_t i = 1; i < tabs.size(); ++i) EXPECT_LT(tabs[i - 1].row_indices(), tabs[i].row_indices());
            sum_sq += tabs.size() * tabs.size();
        }
        EXPECT_EQ(sum_sq, factorial(d));
    }
}

TEST(Tableaux, Examples) {
    const auto tabs = standard_tableaux(Partition({2, 1}));
    ASSERT_EQ(tabs.size(), 2u);
    EXPECT_EQ(tabs[0].to_string(), "[[1,2],[3]]");
    EXPECT_EQ(tabs[1].to_string(), "[[1,3],[2]]");
    EXPECT_EQ(standard_tableaux(Partition({3, 2})).size(), 5u);
    EXPECT_EQ(standard_tableaux(Partition({4})).size(), 1u);
    EXPECT_THROW(Tableau::parse("[[1,1],[2]]"), DomainError);
}

TEST(Tableaux, DOfReproducesTableau) {
    EXPECT_EQ(d_of(Tableau::parse("[[1,3],[2]]")), Permutation::parse("[1,3,2]"));
    for (int d = 1; d <= 5; ++d)
        for (const auto& l : partitions_of(d)) {
            EXPECT_TRUE(d_of(row_reading_tableau(l)).is_identity());
            for (const auto& t : standard_tableaux(l)) EXPECT_EQ(row_reading_tableau(l).permuted(d_of(t)), t);
        }
    EXPECT_THROW(d_of(Tableau::parse("[[2,1],[3]]")), DomainError);
}

TEST(YoungSubgroups, MatchRowStabilizerFilter) {
    for (int d = 1; d <= 5; ++d)
        for (const auto& l : partitions_of(d)) {
            const auto rows = composition_rows(l);
            std::vector<int> row_of(static_cast<std::size_t>(d) + 1);
            for (std::size_t i = 0; i < rows.size(); ++i)
                for (int k : rows[i]) row_of[k] = static_cast<int>(i);
            std::vector<Permutation> brute;
            for (const auto& w : all_permutations(d)) {
                bool keeps = true;
                for (int k = 1; k <= d; ++k) keeps = keeps && row_of[w(k)] == row_of[k];
                if (keeps) brute.push_back(w);
            }
            EXPECT_EQ(young_subgroup(l, d), brute) << l;
        }
    EXPECT_EQ(young_subgroup(WeakComposition({2, 0, 1}), 3).size(), 2u);
    EXPECT_THROW(young_subgroup(Partition({2, 1}), 4), DomainError);
}
