#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "precy/lincomb.hpp"
#include "precy/orientation.hpp"
#include "precy/rational.hpp"
#include "precy/sparse.hpp"

using namespace precy;

TEST_CASE("rational parse and format round trip") {
    CHECK(format_scalar(parse_scalar("3/4")) == "3/4");
    CHECK(format_scalar(parse_scalar("-1/8")) == "-1/8");
    CHECK(format_scalar(parse_scalar("6/4")) == "3/2");
    CHECK(format_scalar(parse_scalar("7")) == "7");
    CHECK(parse_scalar("1/2") + parse_scalar("1/3") == parse_scalar("5/6"));
    CHECK_THROWS(parse_scalar("1/0"));
    CHECK_THROWS(parse_scalar("x"));
}

TEST_CASE("lincomb cancels to zero") {
    LinComb<int> a;
    a.add(3, Scalar(2));
    a.add(3, Scalar(-2));
    CHECK(a.is_zero());
    a.add(1, Scalar(1, 2));
    a.add(2, Scalar(5));
    LinComb<int> b = a;
    b -= a;
    CHECK(b.is_zero());
    CHECK(a.coeff(1) == Scalar(1, 2));
}

TEST_CASE("koszul signs") {
    // identity permutation
    CHECK(koszul_sign({0, 1, 2}, {1, 1, 1}) == 1);
    // swapping two odd symbols
    CHECK(koszul_sign({1, 0}, {1, 1}) == -1);
    // swapping odd with even
    CHECK(koszul_sign({1, 0}, {1, 0}) == 1);
    // three odd elements reversed: three inversions
    CHECK(koszul_sign({2, 1, 0}, {1, 1, 1}) == -1);
}

TEST_CASE("reorder_sign composes to identity") {
    // symbols 0..4, parities: edges at d=0 are odd (weight d-1), vertices even
    std::vector<int> parity = {1, 1, 0, 0, 1};
    std::vector<int> w1 = {0, 1, 2, 3, 4};
    std::vector<int> w2 = {4, 1, 3, 2, 0};
    int s12 = reorder_sign(w1, w2, parity);
    int s21 = reorder_sign(w2, w1, parity);
    CHECK(s12 * s21 == 1);
    // swapping two odd symbols in place is odd
    CHECK(reorder_sign({0, 1}, {1, 0}, {1, 1}) == -1);
    // swapping even symbols is even
    CHECK(reorder_sign({2, 3}, {3, 2}, parity) == 1);
}

TEST_CASE("sparse rank of triangle boundary matrix") {
    // del: edges (01),(12),(02) -> vertices; rank 2 over Q
    SparseMat m(3, 3); // rows vertices, cols edges
    // col 0 = (01): v1 - v0; col 1 = (12): v2 - v1; col 2 = (02): v2 - v0
    m.set(0, 0, Scalar(-1));
    m.set(1, 0, Scalar(1));
    m.set(1, 1, Scalar(-1));
    m.set(2, 1, Scalar(1));
    m.set(0, 2, Scalar(-1));
    m.set(2, 2, Scalar(1));
    CHECK(m.rank() == 2);
    auto ns = m.nullspace();
    REQUIRE(ns.size() == 1);
    // kernel spanned by (1,1,-1): the fundamental cycle
    const auto& v = ns[0];
    CHECK(v[0] * Scalar(-1) == v[2]);
    CHECK(v[0] == v[1]);
}

TEST_CASE("sparse solve exactness") {
    SparseMat m(2, 2);
    m.set(0, 0, Scalar(1, 3));
    m.set(0, 1, Scalar(2));
    m.set(1, 1, Scalar(5, 7));
    auto x = m.solve({Scalar(1), Scalar(10)});
    REQUIRE(x.has_value());
    CHECK((*x)[1] == Scalar(14));
    CHECK((*x)[0] == (Scalar(1) - Scalar(2) * Scalar(14)) / Scalar(1, 3));
    // inconsistent system
    SparseMat z(2, 1);
    z.set(0, 0, Scalar(1));
    z.set(1, 0, Scalar(1));
    CHECK(!z.solve({Scalar(1), Scalar(2)}).has_value());
}
