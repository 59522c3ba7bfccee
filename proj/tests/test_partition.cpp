#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hilie/partition.hpp"
#include "test_util.hpp"

using namespace hilie;
using hilie_test::P;

namespace {

// Euler's pentagonal-number recurrence, independent of the iterator.
std::vector<BigInt> partition_counts(int nmax) {
    std::vector<BigInt> p(static_cast<size_t>(nmax) + 1);
    p[0] = 1;
    for (int n = 1; n <= nmax; ++n) {
        BigInt total = 0;
        for (int k = 1;; ++k) {
            long long g1 = static_cast<long long>(k) * (3 * k - 1) / 2;
            long long g2 = static_cast<long long>(k) * (3 * k + 1) / 2;
            if (g1 > n && g2 > n) break;
            int sign = (k % 2) ? 1 : -1;
            if (g1 <= n) total += sign * p[static_cast<size_t>(n - g1)];
            if (g2 <= n) total += sign * p[static_cast<size_t>(n - g2)];
        }
        p[static_cast<size_t>(n)] = total;
    }
    return p;
}

} // namespace

TEST_CASE("parse_partition") {
    CHECK(parse_partition("5,3,1") == P({5, 3, 1}));
    CHECK(parse_partition("2^3,1^2") == P({2, 2, 2, 1, 1}));
    CHECK(parse_partition("4, 2^2 ,1") == P({4, 2, 2, 1}));
    CHECK(parse_partition("1,5,3") == P({5, 3, 1})); // canonicalized
    CHECK(parse_partition("") == Partition());
    CHECK_THROWS_AS(parse_partition("3,0,1"), ParseError);
    CHECK_THROWS_AS(parse_partition("3,,1"), ParseError);
    CHECK_THROWS_AS(parse_partition("a,b"), ParseError);
    CHECK_THROWS_AS(parse_partition("2^0"), ParseError);
    CHECK_THROWS_AS(parse_partition("2^-1"), ParseError);
}

TEST_CASE("conjugate") {
    CHECK(conjugate(P({3, 1})) == P({2, 1, 1}));
    CHECK(conjugate(Partition()) == Partition());
    CHECK(conjugate(P({2, 2})) == P({2, 2}));

    for (long long n = 0; n <= 20; ++n) {
        for_each_partition(n, [&](const Partition& lam) {
            CHECK(conjugate(conjugate(lam)) == lam);
            CHECK(conjugate(lam).n() == n);
        });
    }
}

TEST_CASE("z_of") {
    CHECK(z_of(P({2, 1})) == 2);
    CHECK(z_of(P({1, 1, 1})) == 6);
    CHECK(z_of(P({3})) == 3);
    CHECK(z_of(Partition()) == 1);

    // Conjugacy classes partition S_n: sum of n!/z over lambda |- n is n!.
    for (long long n = 1; n <= 12; ++n) {
        BigInt nf = factorial(n);
        BigInt total = 0;
        for_each_partition(n, [&](const Partition& lam) { total += nf / z_of(lam); });
        CHECK(total == nf);
    }
}

TEST_CASE("partitions_of order and counts") {
    std::vector<Partition> four = all_partitions(4);
    REQUIRE(four.size() == 5);
    CHECK(four[0] == P({4}));
    CHECK(four[1] == P({3, 1}));
    CHECK(four[2] == P({2, 2}));
    CHECK(four[3] == P({2, 1, 1}));
    CHECK(four[4] == P({1, 1, 1, 1}));

    CHECK(all_partitions(0).size() == 1);
    CHECK(all_partitions(0)[0] == Partition());
    CHECK(all_partitions(10).size() == 42);

    auto expected = partition_counts(60);
    for (long long n = 0; n <= 60; ++n) {
        BigInt count = 0;
        Partition prev;
        bool first = true;
        PartitionCursor cur(n);
        while (auto p = cur.next()) {
            count += 1;
            if (!first) CHECK(canonical_less(prev, *p));
            prev = *p;
            first = false;
        }
        CHECK(count == expected[static_cast<size_t>(n)]);
    }
}

TEST_CASE("is_balanced") {
    CHECK(is_balanced(P({3, 3, 3}), Rat(2)));
    CHECK_FALSE(is_balanced(P({9}), Rat(2)));
    CHECK(is_balanced(Partition(), Rat(1, 100)));
    // Boundary is decided exactly: max = 2, c*sqrt(n) = 1*2.
    CHECK(is_balanced(P({2, 2}), Rat(1)));
    CHECK_FALSE(is_balanced(P({2, 1, 1}), Rat(1)));
    CHECK_THROWS_AS(is_balanced(P({2}), Rat(0)), std::invalid_argument);
}

TEST_CASE("disjoint_union") {
    CHECK(disjoint_union(P({5, 3}), P({2, 1})) == P({5, 3, 2, 1}));
    CHECK(disjoint_union(P({3}), P({3})) == P({3, 3}));
    CHECK(disjoint_union(P({5, 1}), Partition()) == P({5, 1}));

    for (long long a = 0; a <= 6; ++a) {
        for (long long b = 0; b <= 6; ++b) {
            for (const auto& mu : all_partitions(a)) {
                for (const auto& tau : all_partitions(b)) {
                    Partition u = disjoint_union(mu, tau);
                    CHECK(u == disjoint_union(tau, mu));
                    CHECK(u.n() == a + b);
                }
            }
        }
    }
}

TEST_CASE("containment and skew shapes") {
    CHECK(P({3, 2}).contains(P({2, 2})));
    CHECK_FALSE(P({3, 2}).contains(P({1, 1, 1})));
    CHECK(P({3, 2}).contains(Partition()));
    CHECK_NOTHROW(SkewShape(P({3, 2}), P({1})));
    CHECK_THROWS_AS(SkewShape(P({2, 1}), P({2, 2})), std::invalid_argument);
}

TEST_CASE("canonical order is total on mixed sizes") {
    CHECK(canonical_less(P({2}), P({2, 1})));       // smaller size first
    CHECK(canonical_less(P({3}), P({2, 1})));       // same size: reverse-lex
    CHECK_FALSE(canonical_less(P({2, 1}), P({3})));
}
