#include "sympair/partition.hpp"

#include "doctest.h"
#include "oracles.hpp"

using namespace sympair;

TEST_CASE("transpose of basic shapes") {
    CHECK(transpose(Partition({2, 2})) == Partition({2, 2}));
    CHECK(transpose(Partition({3, 1, 1, 1})) == Partition({4, 1, 1}));
    CHECK(transpose(Partition({3, 1, 1, 1})) == oracles::transpose_brute(Partition({3, 1, 1, 1})));
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> ones(static_cast<size_t>(n), 1);
        CHECK(transpose(Partition({n})) == Partition(ones));
    }
}

TEST_CASE("transpose is an involution and matches brute force, n <= 12") {
    for (int n = 0; n <= 12; ++n)
        for (const Partition& p : partitions_of(n)) {
            CHECK(transpose(transpose(p)) == p);
            CHECK(transpose(p) == oracles::transpose_brute(p));
        }
}

TEST_CASE("dominance order examples") {
    CHECK(dominance_le(Partition({2, 2}), Partition({3, 1})));
    CHECK_FALSE(dominance_le(Partition({3, 1}), Partition({2, 2})));
    CHECK(dominance_le(Partition({2, 1}), Partition({2, 1})));
    CHECK_THROWS_AS(dominance_le(Partition({2}), Partition({1, 1, 1})), std::invalid_argument);
}

TEST_CASE("dominance is a partial order, n <= 10") {
    for (int n = 1; n <= 10; ++n) {
        auto ps = partitions_of(n);
        for (const auto& a : ps) CHECK(dominance_le(a, a));
        for (const auto& a : ps)
            for (const auto& b : ps)
                if (dominance_le(a, b) && dominance_le(b, a)) CHECK(a == b);
        if (n > 8) continue;  // transitivity is cubic; smaller range suffices
        for (const auto& a : ps)
            for (const auto& b : ps) {
                if (!dominance_le(a, b)) continue;
                for (const auto& c : ps)
                    if (dominance_le(b, c)) CHECK(dominance_le(a, c));
            }
    }
}

TEST_CASE("evenness by parity matches the ad(h) eigenvalue oracle") {
    CHECK(is_even(Partition({2, 2, 2})));
    CHECK(is_even(Partition({3, 1, 1, 1})));
    CHECK_FALSE(is_even(Partition({2, 1})));
    for (int n = 1; n <= 8; ++n)
        for (const Partition& p : partitions_of(n))
            CHECK(is_even(p) == !oracles::has_weight_one_eigenvector(p));
}

TEST_CASE("orbit dimension formula") {
    CHECK(dim_g_orbit(Partition({2, 2})) == 8);
    CHECK(dim_g_orbit(Partition({2, 1, 1, 1, 1})) == 10);
    CHECK(dim_g_orbit(Partition({3, 1, 1, 1})) == 18);
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> ones(static_cast<size_t>(n), 1);
        CHECK(dim_g_orbit(Partition(ones)) == 0);
    }
}

TEST_CASE("orbit dimension is even, n <= 12") {
    for (int n = 1; n <= 12; ++n)
        for (const Partition& p : partitions_of(n)) CHECK(dim_g_orbit(p) % 2 == 0);
}

TEST_CASE("orbit dimension equals the ad-map rank oracle, n <= 6") {
    for (int n = 1; n <= 6; ++n)
        for (const Partition& p : partitions_of(n))
            CHECK(dim_g_orbit(p) == oracles::adjoint_rank(oracles::standard_nilpotent(p)));
}

TEST_CASE("Richardson type of a Levi") {
    CHECK(richardson_of_levi(Composition({2, 2})) == Partition({2, 2}));
    CHECK(richardson_of_levi(Composition({3, 3})) == Partition({2, 2, 2}));
    CHECK(richardson_of_levi(Composition({1, 1, 1, 1})) == Partition({4}));
    CHECK(richardson_of_levi(Composition({1, 3, 1, 1})) == Partition({4, 1, 1}));
}

TEST_CASE("Richardson type matches a generic nilradical element, n <= 5") {
    Rng rng(2024);
    for (int n = 1; n <= 5; ++n) {
        // all compositions of n
        std::vector<std::vector<int>> comps;
        std::vector<int> cur;
        std::function<void(int)> rec = [&](int rest) {
            if (rest == 0) {
                comps.push_back(cur);
                return;
            }
            for (int k = 1; k <= rest; ++k) {
                cur.push_back(k);
                rec(rest - k);
                cur.pop_back();
            }
        };
        rec(n);
        for (const auto& blocks : comps) {
            Composition c(blocks);
            ExactMatrix z = oracles::generic_nilradical_element(c, rng);
            CHECK(z.jordan_type() == richardson_of_levi(c));
        }
    }
}

TEST_CASE("even types are the Richardson types of their own Levi, n <= 8") {
    for (int n = 1; n <= 8; ++n)
        for (const Partition& p : partitions_of(n)) {
            if (!is_even(p)) continue;
            CHECK(richardson_of_levi(oracles::h_eigenvalue_multiplicities(p)) == p);
        }
}

TEST_CASE("partition parsing and serialization") {
    CHECK(Partition::parse("[3,1,1,1]") == Partition({3, 1, 1, 1}));
    CHECK(Partition::parse(" [ 2, 2 ] ") == Partition({2, 2}));
    CHECK(Partition::parse("4,1") == Partition({4, 1}));
    CHECK(Partition::parse("[]") == Partition());
    CHECK_THROWS_AS(Partition::parse("[3,0]"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("[3,x]"), std::invalid_argument);
    Partition p({3, 1, 1, 1});
    CHECK(p.str() == "[3,1,1,1]");
    CHECK(Partition::parse(p.str()) == p);
    CHECK(Partition::from_json(p.to_json()) == p);
}

TEST_CASE("partitions are stored sorted") {
    CHECK(Partition({1, 3, 1, 1}) == Partition({3, 1, 1, 1}));
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
}

TEST_CASE("partitions_of enumerates the right counts") {
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(10).size() == 42);
    CHECK(partitions_of(6).front() == Partition({6}));
    CHECK(partitions_of(6).back() == Partition({1, 1, 1, 1, 1, 1}));
}
