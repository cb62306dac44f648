#include <catch2/catch_amalgamated.hpp>

#include "orbispec/quiltsearch.hpp"

using namespace orbispec;

TEST_CASE("too few sheets give no transplantable pairs") {
    for (int n : {1, 2, 3}) {
        auto quilts = enumerate_pairs(n);
        CHECK(quilts.empty());
    }
}

TEST_CASE("sheet-count guard") {
    EnumerateOptions opt;
    opt.max_sheets = 5;
    CHECK_THROWS_AS(enumerate_pairs(6, opt), resource_limit_error);
}

TEST_CASE("size-7 catalog: one quilt with three pairs") {
    auto quilts = enumerate_pairs(7);
    REQUIRE(quilts.size() == 1);
    const QuiltGraph& q = quilts[0];
    CHECK(q.size() == 3);
    CHECK(q.group_order == 168);

    for (const auto& node : q.nodes) {
        CHECK(node.rep.left.is_transitive());
        CHECK(node.rep.right.is_transitive());
        CHECK(is_transplantable(node.rep));
        CHECK_FALSE(is_permutation_isomorphic(node.rep));
    }

    // braiding moves between distinct canonical forms on this quilt
    const TranspPair& seed = q.nodes[0].rep;
    CHECK(canonical_form(braid_left(seed)) != canonical_form(seed));

    // the transplantation matrix is 0/1 with constant row and column sums
    auto T = transplantation_matrix(seed);
    REQUIRE(T.has_value());
    const auto& M = *T;
    std::int64_t row0 = 0;
    for (int j = 0; j < 7; ++j) row0 += M[0][j];
    for (int i = 0; i < 7; ++i) {
        std::int64_t rs = 0, cs = 0;
        for (int j = 0; j < 7; ++j) {
            CHECK((M[i][j] == 0 || M[i][j] == 1));
            rs += M[i][j];
            cs += M[j][i];
        }
        CHECK(rs == row0);
        CHECK(cs == row0);
    }

    // intertwining relation T P(w) = Q(w) T for random words
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 100; ++trial) {
        int len = 1 + int(rng() % 8);
        std::string word;
        for (int k = 0; k < len; ++k) word.push_back(char('a' + rng() % 3));
        Perm pw = seed.left.word_image(word);
        Perm qw = seed.right.word_image(word);
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j) {
                // (T P(w))_{ij} = T_{i, P(w)(j)}, (Q(w) T)_{ij} = T_{Q(w)^{-1}(i), j}
                CHECK(M[i][pw(j)] == M[qw.inverse()(i)][j]);
            }
    }
}

TEST_CASE("quilt report lists pairs with braid words") {
    auto quilts = enumerate_pairs(7);
    std::ostringstream os;
    write_quilt_report(os, quilts);
    std::string text = os.str();
    CHECK(text.find("quilt 7") != std::string::npos);
    CHECK(text.find("7(1)") != std::string::npos);
    CHECK(text.find("7(3)") != std::string::npos);
}
