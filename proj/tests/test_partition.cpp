#include <doctest.h>

#include "oracles.hpp"
#include "w2q/partition.hpp"

using namespace w2q;

TEST_CASE("partition construction") {
    CHECK(Partition{{4, 3}}.n() == 7);
    CHECK(Partition{}.n() == 0);
    CHECK(Partition{{3, 0, 0}} == Partition{{3}});  // trailing zeros dropped
    CHECK_THROWS_AS((Partition{{1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS((Partition{{2, -1}}), std::invalid_argument);
    CHECK(Partition{{6, 3, 3}}.to_string() == "(6,3,3)");
    CHECK(Partition{}.to_string() == "()");
}

TEST_CASE("conjugate") {
    CHECK(conjugate(Partition{{4, 3}}) == Partition{{2, 2, 2, 1}});
    CHECK(conjugate(Partition{}) == Partition{});
    // (k,1^l) with k=3, l=2 is self-conjugate
    CHECK(conjugate(Partition{{3, 1, 1}}) == Partition{{3, 1, 1}});

    SUBCASE("involution on all partitions of n <= 30") {
        for (int n : {8, 17, 30})
            for (const Partition& p : oracle::all_partitions(n)) CHECK(conjugate(conjugate(p)) == p);
    }
}

TEST_CASE("regular and restricted") {
    CHECK_FALSE(is_p_regular(Partition{{2, 2, 2}}, 3));
    CHECK_FALSE(is_p_regular(Partition{{6, 1, 1, 1, 1, 1}}, 5));  // (p+1,1^p) for p=5
    CHECK(is_p_regular(Partition{{6, 3, 3, 3, 2, 2}}, 5));
    CHECK(is_p_regular(Partition{}, 3));

    CHECK_FALSE(is_p_restricted(Partition{{6, 1}}, 5));
    CHECK(is_p_restricted(Partition{{2, 2, 1}}, 3));
    CHECK(is_p_restricted(Partition{{6, 2, 1, 1, 1}}, 5));  // (p+1,2,1^(p-2)) for p=5

    SUBCASE("restricted iff conjugate regular, n <= 20") {
        for (int n = 0; n <= 20; ++n)
            for (const Partition& p : oracle::all_partitions(n))
                for (int prime : {3, 5, 7})
                    CHECK(is_p_restricted(p, prime) == is_p_regular(conjugate(p), prime));
    }
}

TEST_CASE("lex order") {
    CHECK(lex_cmp(Partition{{5, 2}}, Partition{{4, 3}}) == std::strong_ordering::greater);
    CHECK(lex_cmp(Partition{{4, 3}}, Partition{{4, 3}}) == std::strong_ordering::equal);
    // <j>-shapes beat <i,j>-shapes: (10,1,1,1,1) vs (6,6,2) at n = 14
    CHECK(lex_cmp(Partition{{10, 1, 1, 1, 1}}, Partition{{6, 6, 2}}) == std::strong_ordering::greater);
    CHECK_THROWS_AS(lex_cmp(Partition{{2}}, Partition{{2, 1}}), std::invalid_argument);
}

TEST_CASE("dominance") {
    CHECK(dominance_leq(Partition{{1, 1, 1, 1}}, Partition{{4}}));
    CHECK_FALSE(dominance_leq(Partition{{3, 3}}, Partition{{4, 1, 1}}));
    CHECK_FALSE(dominance_leq(Partition{{4, 1, 1}}, Partition{{3, 3}}));
    CHECK(dominance_leq(Partition{{3, 2}}, Partition{{3, 2}}));
    CHECK_THROWS_AS(dominance_leq(Partition{{2}}, Partition{{1}}), std::invalid_argument);

    SUBCASE("dominance implies lex, n <= 15") {
        for (int n = 1; n <= 15; ++n) {
            auto parts = oracle::all_partitions(n);
            for (const Partition& a : parts)
                for (const Partition& b : parts)
                    if (dominance_leq(a, b)) CHECK(lex_cmp(a, b) <= 0);
        }
    }
}

TEST_CASE("hook lengths") {
    auto h = hook_lengths(Partition{{6, 3, 3, 3, 2, 2}});
    CHECK(h[0] == std::vector<int>{11, 10, 7, 3, 2, 1});
    CHECK(hook_lengths(Partition{{1}}) == std::vector<std::vector<int>>{{1}});
    CHECK(hook_lengths(Partition{{4, 1}})[0][0] == 5);

    SUBCASE("hook multiset invariant under conjugation, n <= 20") {
        for (int n : {9, 14, 20})
            for (const Partition& p : oracle::all_partitions(n)) {
                std::multiset<int> a, b;
                for (const auto& row : hook_lengths(p)) a.insert(row.begin(), row.end());
                for (const auto& row : hook_lengths(conjugate(p))) b.insert(row.begin(), row.end());
                CHECK(a == b);
            }
    }
}
