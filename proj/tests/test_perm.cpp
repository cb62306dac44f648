#include <catch2/catch_amalgamated.hpp>

#include "orbispec/perm.hpp"

using namespace orbispec;

TEST_CASE("composition convention (p*q)(i) = p(q(i))") {
    Perm p = Perm::parse("(1 2)", 3);
    Perm q = Perm::parse("(2 3)", 3);
    Perm pq = p * q;
    // q sends 2->3, p fixes 3: so (p*q)(2)=3 (1-based: point 2 -> point 3)
    CHECK(pq(1) == 2);
    CHECK(pq(0) == 1);
    CHECK(pq(2) == 0);
}

TEST_CASE("conjugation relabels cycles through the conjugator") {
    // aba^{-1} with a=(1 2), b=(2 3) is (1 3)
    Perm a = Perm::parse("(1 2)", 3);
    Perm b = Perm::parse("(2 3)", 3);
    Perm c = b.conjugated_by(a);
    CHECK(c == Perm::parse("(1 3)", 3));
}

TEST_CASE("cycle notation round trip") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        Perm p = Perm::random(9, rng);
        CHECK(Perm::parse(p.str(), 9) == p);
    }
    CHECK(Perm::parse("()", 5).is_identity());
    CHECK(Perm::parse("id", 5).is_identity());
    CHECK_THROWS_AS(Perm::parse("(1 1 2)", 4), parse_error);
    CHECK_THROWS_AS(Perm::parse("(0 1)", 4), parse_error);
}

TEST_CASE("order and fixed points") {
    Perm p = Perm::parse("(1 2 3)(4 5)", 6);
    CHECK(p.order() == 6);
    CHECK(p.fixed_points() == 1);
    CHECK(p.inverse() * p == Perm::identity(6));
}

TEST_CASE("random involutions square to identity") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 30; ++t) {
        Perm p = Perm::random_involution(10, rng);
        CHECK(p.is_involution());
    }
}
