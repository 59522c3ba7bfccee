#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "hilie/characters.hpp"
#include "hilie/tableaux.hpp"
#include "hilie/verify.hpp"
#include "test_util.hpp"

using namespace hilie;
using hilie_test::P;

TEST_CASE("mn_char fixtures") {
    CHECK(mn_char(P({2, 1}), P({1, 1, 1})) == 2);
    CHECK(mn_char(P({2, 1}), P({3})) == -1);
    CHECK(mn_char(P({2, 1}), P({2, 1})) == 0);
    CHECK_THROWS_AS(mn_char(P({2, 1}), P({2})), std::invalid_argument);

    // Trivial character: all values 1.
    for (long long n = 1; n <= 7; ++n) {
        for_each_partition(n, [&](const Partition& mu) {
            CHECK(mn_char(P({static_cast<int>(n)}), mu) == 1);
        });
    }
}

TEST_CASE("frobenius oracle fixtures") {
    CHECK(frobenius_char_oracle(P({2, 1}), P({2, 1})) == 0);
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> ones(static_cast<size_t>(n), 1);
        CHECK(frobenius_char_oracle(P(ones), P(ones)) == 1);
    }
    CHECK_THROWS_AS(frobenius_char_oracle(P({9}), P({9})), std::invalid_argument);
}

TEST_CASE("mn_char equals frobenius oracle for n <= 6") {
    CHECK(all_pass(verify_mn_oracle(6)));
}

TEST_CASE("char_table n=3 content") {
    auto t = char_table(3);
    REQUIRE(t->order().size() == 3);
    CHECK(t->order()[0] == P({3}));
    CHECK(t->order()[1] == P({2, 1}));
    CHECK(t->order()[2] == P({1, 1, 1}));

    // chi^(3) = (1,1,1); chi^(2,1) = (2,0,-1) against (1^3),(2,1),(3);
    // chi^(1^3) = (1,-1,1).
    for (const auto& mu : t->order()) CHECK(t->value(P({3}), mu) == 1);
    CHECK(t->value(P({2, 1}), P({1, 1, 1})) == 2);
    CHECK(t->value(P({2, 1}), P({2, 1})) == 0);
    CHECK(t->value(P({2, 1}), P({3})) == -1);
    CHECK(t->value(P({1, 1, 1}), P({1, 1, 1})) == 1);
    CHECK(t->value(P({1, 1, 1}), P({2, 1})) == -1);
    CHECK(t->value(P({1, 1, 1}), P({3})) == 1);
}

TEST_CASE("char_table n=1") {
    auto t = char_table(1);
    REQUIRE(t->order().size() == 1);
    CHECK(t->value(P({1}), P({1})) == 1);
}

TEST_CASE("orthogonality exact for n <= 10") {
    for (long long n = 1; n <= 10; ++n) {
        auto t = char_table(n);
        const auto& parts = t->order();
        size_t p = parts.size();
        // Columns: sum_nu chi(mu) chi(tau) = z_mu [mu == tau].
        for (size_t a = 0; a < p; ++a) {
            for (size_t b = a; b < p; ++b) {
                BigInt total = 0;
                for (size_t i = 0; i < p; ++i) total += t->at(i, a) * t->at(i, b);
                CHECK(total == (a == b ? z_of(parts[a]) : BigInt(0)));
            }
        }
        // Rows: sum_mu chi^nu chi^rho / z_mu = [nu == rho].
        for (size_t i = 0; i < p; ++i) {
            for (size_t j = i; j < p; ++j) {
                Rat total = 0;
                for (size_t a = 0; a < p; ++a)
                    total += Rat(t->at(i, a) * t->at(j, a), z_of(parts[a]));
                CHECK(total == (i == j ? Rat(1) : Rat(0)));
            }
        }
    }
}

TEST_CASE("identity column is the hook-length dimension") {
    for (long long n = 1; n <= 12; ++n) {
        auto t = char_table(n);
        for (const auto& nu : t->order()) CHECK(t->dim(nu) == f_hook(nu));
    }
}

TEST_CASE("omega twist: conjugate row flips by sign of the class") {
    for (long long n = 1; n <= 10; ++n) {
        auto t = char_table(n);
        for (const auto& nu : t->order()) {
            Partition nuc = conjugate(nu);
            for (const auto& mu : t->order()) {
                BigInt expect = t->value(nu, mu);
                if ((n - mu.length()) % 2) expect = -expect;
                CHECK(t->value(nuc, mu) == expect);
            }
        }
    }
}

TEST_CASE("file cache round trip, warm load, corruption recovery") {
    auto dir = std::filesystem::temp_directory_path() / "hilie-test-cache-rt";
    std::filesystem::remove_all(dir);
    set_cache_directory(dir);
    clear_char_table_registry();

    auto fresh = char_table(5);
    CHECK_FALSE(fresh->from_cache());
    auto file = dir / "chartab-v1-n5.json";
    CHECK(std::filesystem::exists(file));

    clear_char_table_registry();
    auto warm = char_table(5);
    CHECK(warm->from_cache());
    for (const auto& nu : fresh->order())
        for (const auto& mu : fresh->order()) CHECK(warm->value(nu, mu) == fresh->value(nu, mu));

    // Registry hit: same underlying table object, no reload.
    auto again = char_table(5);
    CHECK(again.get() == warm.get());

    {
        std::ofstream out(file);
        out << "{\"version\":1,\"garbage\":true}";
    }
    clear_char_table_registry();
    auto recovered = char_table(5);
    CHECK_FALSE(recovered->from_cache());
    clear_char_table_registry();
    CHECK(char_table(5)->from_cache()); // overwritten with a valid file

    // Restore the shared test cache dir for other cases.
    hilie_test::CacheDirGuard restore;
    clear_char_table_registry();
}
