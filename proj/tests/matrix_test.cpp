#include "sympair/matrix.hpp"

#include "doctest.h"
#include "oracles.hpp"

using namespace sympair;

namespace {

ExactMatrix from_ints(int rows, int cols, std::initializer_list<long> vals) {
    ExactMatrix m(rows, cols);
    auto it = vals.begin();
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = GaussRat(*it++);
    return m;
}

}  // namespace

TEST_CASE("GaussRat arithmetic and formatting") {
    GaussRat i = GaussRat::i();
    CHECK(i * i == GaussRat(-1));
    GaussRat z(make_rat(1, 2), make_rat(-3, 4));
    CHECK((z * z.conj()).str() == "13/16");
    CHECK(z.str() == "1/2-3/4i");
    CHECK((GaussRat(1) + i).str() == "1+i");
    CHECK((GaussRat(0) - i).str() == "-i");
    CHECK(GaussRat().str() == "0");
    CHECK((z / z) == GaussRat(1));
    CHECK(gaussrat_from_json(to_json(z)) == z);
}

TEST_CASE("rank of small matrices") {
    CHECK(ExactMatrix::identity(4).rank() == 4);
    CHECK(ExactMatrix(3, 5).rank() == 0);
    ExactMatrix m = from_ints(3, 3, {1, 2, 3, 2, 4, 6, 1, 0, 1});
    CHECK(m.rank() == 2);
}

TEST_CASE("inverse round trip on random integer matrices") {
    Rng rng(7);
    for (int n = 1; n <= 5; ++n)
        for (int trial = 0; trial < 5; ++trial) {
            ExactMatrix m(n, n);
            do {
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        m.at(i, j) = GaussRat(rng.next_int(-9, 9), rng.next_int(-9, 9));
            } while (m.rank() < n);
            CHECK(m * m.inverse() == ExactMatrix::identity(n));
        }
    CHECK_THROWS_AS(ExactMatrix(2, 2).inverse(), std::domain_error);
}

TEST_CASE("characteristic polynomial") {
    // rotation generator: t^2 + 1
    ExactMatrix r = from_ints(2, 2, {0, 1, -1, 0});
    auto c = r.char_poly();
    REQUIRE(c.size() == 2);
    CHECK(c[0] == GaussRat(0));
    CHECK(c[1] == GaussRat(1));
    // diag(1,2,3): t^3 - 6t^2 + 11t - 6
    ExactMatrix d = from_ints(3, 3, {1, 0, 0, 0, 2, 0, 0, 0, 3});
    auto cd = d.char_poly();
    CHECK(cd[0] == GaussRat(-6));
    CHECK(cd[1] == GaussRat(11));
    CHECK(cd[2] == GaussRat(-6));
    // nilpotent: pure power
    auto cn = oracles::standard_nilpotent(Partition({3, 2})).char_poly();
    for (const auto& coeff : cn) CHECK(coeff == GaussRat(0));
}

TEST_CASE("jordan type of standard nilpotents, n <= 8") {
    for (int n = 1; n <= 8; ++n)
        for (const Partition& p : partitions_of(n))
            CHECK(oracles::standard_nilpotent(p).jordan_type() == p);
    CHECK(ExactMatrix(3, 3).jordan_type() == Partition({1, 1, 1}));
    CHECK_THROWS_AS(ExactMatrix::identity(2).jordan_type(), std::domain_error);
}

TEST_CASE("commutator and powers") {
    ExactMatrix x = oracles::standard_nilpotent(Partition({2, 2}));
    CHECK(commutator(x, x).is_zero());
    CHECK(x.pow(2).is_zero());
    CHECK_FALSE(x.pow(1).is_zero());
}

TEST_CASE("matrix serialization round trip") {
    ExactMatrix m(2, 2);
    m.at(0, 1) = GaussRat(make_rat(22, 7), make_rat(-1, 3));
    m.at(1, 0) = GaussRat(Rat("123456789123456789123456789"), Rat(1));
    CHECK(ExactMatrix::from_json(m.to_json()) == m);
}
