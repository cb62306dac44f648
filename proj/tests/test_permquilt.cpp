#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "orbispec/permquilt.hpp"

using namespace orbispec;

namespace {

InvolutionTriple triple(const std::string& a, const std::string& b,
                        const std::string& c, int n) {
    return InvolutionTriple(Perm::parse(a, n), Perm::parse(b, n), Perm::parse(c, n));
}

TranspPair random_pair(int n, std::mt19937_64& rng) {
    auto t = [&] {
        return InvolutionTriple(Perm::random_involution(n, rng),
                                Perm::random_involution(n, rng),
                                Perm::random_involution(n, rng));
    };
    return TranspPair(t(), t());
}

TranspPair relabel_sides(const TranspPair& p, std::mt19937_64& rng) {
    auto relab = [&](const InvolutionTriple& t) {
        Perm s = Perm::random(t.n, rng);
        return InvolutionTriple(t.a().conjugated_by(s), t.b().conjugated_by(s),
                                t.c().conjugated_by(s));
    };
    return TranspPair(relab(p.left), relab(p.right));
}

}  // namespace

TEST_CASE("braid_left hand example") {
    auto t = triple("(1 2)", "(2 3)", "()", 3);
    auto lt = braid_left(t);
    CHECK(lt.a() == Perm::parse("(1 3)", 3));
    CHECK(lt.b() == Perm::parse("(1 2)", 3));
    CHECK(lt.c().is_identity());
}

TEST_CASE("braid_right hand example") {
    auto t = triple("()", "(1 2)", "(2 3)", 3);
    auto rt = braid_right(t);
    CHECK(rt.a().is_identity());
    CHECK(rt.b() == Perm::parse("(2 3)", 3));
    CHECK(rt.c() == Perm::parse("(1 3)", 3));
}

TEST_CASE("braids fix the all-identity triple") {
    auto t = triple("()", "()", "()", 4);
    TranspPair p(t, t);
    CHECK(braid_left(p) == p);
    CHECK(braid_right(p) == p);
}

TEST_CASE("braid_left has period dividing 2 when a and b commute") {
    auto t = triple("(1 2)", "(3 4)", "()", 4);
    TranspPair p(t, t);
    TranspPair q = p;
    for (int i = 0; i < 6; ++i) q = braid_left(q);
    CHECK(q == p);
}

TEST_CASE("braid inverses undo braids on random pairs") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
        TranspPair p = random_pair(6, rng);
        CHECK(braid_left_inv(braid_left(p)) == p);
        CHECK(braid_right_inv(braid_right(p)) == p);
        CHECK(braid_left(braid_left_inv(p)) == p);
        CHECK(braid_right(braid_right_inv(p)) == p);
    }
}

TEST_CASE("canonical form is invariant under the declared symmetries") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        TranspPair p = random_pair(6, rng);
        std::string key = canonical_form(p);
        CHECK(canonical_form(swap_sides(p)) == key);
        CHECK(canonical_form(relabel_sides(p, rng)) == key);
        const auto& sigmas = letter_perms();
        const auto& sigma = sigmas[rng() % sigmas.size()];
        TranspPair lp(apply_letter_perm(p.left, sigma),
                      apply_letter_perm(p.right, sigma));
        CHECK(canonical_form(lp) == key);
    }
}

TEST_CASE("braids preserve involutions, degree, transitivity and transplantability") {
    std::mt19937_64 rng(512);
    for (int trial = 0; trial < 15; ++trial) {
        TranspPair p = random_pair(5, rng);
        bool tr = is_transplantable(p);
        bool iso = is_permutation_isomorphic(p);
        bool trans = p.left.is_transitive();
        using BraidFn = TranspPair (*)(const TranspPair&);
        for (BraidFn braid : {BraidFn(braid_left), BraidFn(braid_right)}) {
            TranspPair q = braid(p);
            q.left.validate();
            q.right.validate();
            CHECK(q.n() == p.n());
            CHECK(q.left.is_transitive() == trans);
            CHECK(is_transplantable(q) == tr);
            CHECK(is_permutation_isomorphic(q) == iso);
        }
    }
}

TEST_CASE("transplantability basics") {
    auto t = triple("(1 2)", "(2 3)", "()", 3);
    CHECK(is_transplantable(TranspPair(t, t)));

    auto id2 = triple("()", "()", "()", 2);
    auto sw2 = triple("(1 2)", "()", "()", 2);
    CHECK_FALSE(is_transplantable(TranspPair(id2, sw2)));
}

TEST_CASE("transplantability closure cap raises") {
    auto t = triple("(1 2)(3 4)(5 6)", "(2 3)(4 5)(6 7)", "(1 7)(2 6)(3 5)", 7);
    CHECK_THROWS_AS(is_transplantable(TranspPair(t, t), 3), resource_limit_error);
}

TEST_CASE("permutation isomorphism finds relabelings") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = Perm::random_involution(7, rng);
        auto b = Perm::random_involution(7, rng);
        auto c = Perm::random_involution(7, rng);
        InvolutionTriple t(a, b, c);
        CHECK(is_permutation_isomorphic(TranspPair(t, t)));
        Perm s = Perm::random(7, rng);
        InvolutionTriple rt(a.conjugated_by(s), b.conjugated_by(s), c.conjugated_by(s));
        CHECK(is_permutation_isomorphic(TranspPair(t, rt)));
    }
}

TEST_CASE("transplantation matrix: identity-on-one-sheet pair has none") {
    auto t = triple("()", "()", "()", 1);
    CHECK_FALSE(transplantation_matrix(TranspPair(t, t)).has_value());
}

TEST_CASE("pair file round trip") {
    std::mt19937_64 rng(77);
    TranspPair p = random_pair(7, rng);
    std::string text = pair_to_string(p);
    std::istringstream in(text);
    TranspPair q = parse_pair_file(in);
    CHECK(p == q);

    std::istringstream bad("n=3\n(1 2\n");
    CHECK_THROWS_AS(parse_pair_file(bad), parse_error);
}

TEST_CASE("explore_quilt on the trivial seed") {
    auto t = triple("()", "()", "()", 1);
    QuiltGraph g = explore_quilt(TranspPair(t, t));
    CHECK(g.size() == 1);
    CHECK(g.nodes[0].word.empty());
}

TEST_CASE("explore_quilt nodes do not depend on expansion tie-breaking") {
    std::mt19937_64 rng(123);
    TranspPair p = random_pair(4, rng);
    QuiltGraph g = explore_quilt(p, 50000);
    // closure from any member reproduces the same node set
    std::set<std::string> keys;
    for (auto& node : g.nodes) keys.insert(node.key);
    for (int k = 0; k < std::min(3, g.size()); ++k) {
        QuiltGraph h = explore_quilt(g.nodes[k].rep, 50000);
        std::set<std::string> keys2;
        for (auto& node : h.nodes) keys2.insert(node.key);
        CHECK(keys2 == keys);
    }
}

TEST_CASE("explore_quilt max_nodes abort") {
    std::mt19937_64 rng(5151);
    TranspPair p = random_pair(6, rng);
    QuiltGraph g = explore_quilt(p, 1000000);
    if (g.size() > 1) CHECK_THROWS_AS(explore_quilt(p, 1), resource_limit_error);
}
