#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "precy/necklace.hpp"

using namespace precy;

TEST_CASE("necklace normal form cancels inverse pairs") {
    Necklace n = parse_necklace("01*10");
    CHECK(n.is_identity());
    CHECK(n.src() == 0);
    Necklace m = parse_necklace("10*01");
    CHECK(m.is_identity());
    CHECK(m.src() == 1);
    // cancellation inside a longer word
    Necklace w = compose(parse_necklace("01"), parse_necklace("12*21*10"));
    CHECK(w.is_identity());
    CHECK(w.src() == 0);
}

TEST_CASE("two-sided cancellation keeps context") {
    // x*(01)*(10)*y = x*y
    Necklace x = parse_necklace("20");
    Necklace mid = parse_necklace("01*10");
    Necklace y = parse_necklace("02");
    Necklace all = compose(compose(x, mid), y);
    CHECK(all == compose(x, y));
}

TEST_CASE("degrees") {
    CHECK(parse_necklace("01").stored_deg() == 0);
    CHECK(parse_necklace("10").stored_deg() == 0);
    CHECK(parse_necklace("012").stored_deg() == -1);
    CHECK(parse_necklace("012").hom_deg() == 1);
    CHECK(parse_necklace("01*12").hom_deg() == 0);
    CHECK(Necklace::identity(1).hom_deg() == 0);
}

TEST_CASE("differential of a 2-simplex") {
    // d(012) = (01)*(12) - (02)
    Morph d = differential(parse_necklace("012"));
    CHECK(d.coeff(parse_necklace("01*12")) == Scalar(1));
    CHECK(d.coeff(parse_necklace("02")) == Scalar(-1));
    CHECK(d.size() == 2);
}

TEST_CASE("differential vanishes on edges, inverses, identities") {
    CHECK(differential(parse_necklace("01")).is_zero());
    CHECK(differential(parse_necklace("21")).is_zero());
    CHECK(differential(Necklace::identity(0)).is_zero());
}

TEST_CASE("Leibniz for the path product") {
    // d((01)*(123)) = (01)*d(123)   (left factor closed, degree 0)
    OrderedComplex K;
    K.vertices = {0, 1, 2, 3};
    K.simplices = {{0}, {1}, {2}, {3}, {0, 1}, {1, 2}, {2, 3}, {1, 3}, {1, 2, 3}};
    Necklace lhs = compose(parse_necklace("01"), parse_necklace("123"));
    Morph d = differential(lhs);
    Morph expect = compose(Morph(parse_necklace("01")), differential(parse_necklace("123")));
    CHECK(d == expect);
    CHECK(d.coeff(parse_necklace("01*13")) == Scalar(-1));
    CHECK(d.coeff(parse_necklace("01*12*23")) == Scalar(1));
}

TEST_CASE("d squared is zero on a 3-simplex") {
    Morph dd = differential(differential(parse_necklace("0123")));
    CHECK(dd.is_zero());
}

TEST_CASE("differential reduces after splitting") {
    // (10)*(012) -> d gives (10)*(01)*(12) - (10)*(02) = (12)... wait
    // (10)*(01) = e1 so the first term reduces to a bare (12)
    Morph d = differential(compose(parse_necklace("10"), parse_necklace("012")));
    CHECK(d.coeff(parse_necklace("12")) == Scalar(1));
    CHECK(d.coeff(compose(parse_necklace("10"), parse_necklace("02"))) == Scalar(-1));
}

TEST_CASE("circle basis enumeration and orientation split") {
    OrderedComplex K = make_circle();
    auto hom00 = enumerate_basis(K, 0, 0, 6);
    // identity, plus loops of length 3 and 6 in both directions
    CHECK(hom00.size() == 5);
    int ccw = 0, cw = 0, ids = 0;
    for (const auto& n : hom00) {
        switch (classify_orientation(n)) {
            case Orient::Identity: ids++; break;
            case Orient::CCW: ccw++; break;
            case Orient::CW: cw++; break;
        }
    }
    CHECK(ids == 1);
    CHECK(ccw == 2);
    CHECK(cw == 2);

    // from 0 to 1 with at most 4 beads: (01), the clockwise detour (02)*(21),
    // and (01) prolonged by one full ccw loop
    auto hom01 = enumerate_basis(K, 0, 1, 4);
    for (const auto& n : hom01) {
        CHECK(n.src() == 0);
        CHECK(n.tgt() == 1);
        CHECK(((circle_displacement(n) % 3) + 3) % 3 == 1);
    }
    CHECK(hom01.size() == 3);
}

TEST_CASE("classified examples match the worked lists") {
    CHECK(classify_orientation(parse_necklace("01")) == Orient::CCW);
    CHECK(classify_orientation(compose(parse_necklace("01"), parse_necklace("12"))) == Orient::CCW);
    CHECK(classify_orientation(parse_necklace("20")) == Orient::CCW);
    CHECK(classify_orientation(parse_necklace("10")) == Orient::CW);
    CHECK(classify_orientation(parse_necklace("21")) == Orient::CW);
    CHECK(classify_orientation(parse_necklace("02")) == Orient::CW);
    // full clockwise loop at 1: 1 -> 0 -> 2 -> 1
    Necklace loop_cw = compose(compose(parse_necklace("10"), parse_necklace("02")),
                               parse_necklace("21"));
    CHECK(classify_orientation(loop_cw) == Orient::CW);
    CHECK(circle_displacement(loop_cw) == -3);
    // and the counterclockwise loop at 1: 1 -> 2 -> 0 -> 1
    Necklace loop_ccw = compose(compose(parse_necklace("12"), parse_necklace("20")),
                                parse_necklace("01"));
    CHECK(classify_orientation(loop_ccw) == Orient::CCW);
}

TEST_CASE("serialization round trips") {
    for (const char* s : {"01", "10", "01*12", "012", "02*21*10", "e2"}) {
        CHECK(to_string(parse_necklace(s)) == s);
    }
}
