#include <doctest.h>

#include <random>

#include "hns/image.hpp"
#include "oracles.hpp"

using hns::BoundingBox;

TEST_SUITE("image") {

TEST_CASE("iou of identical boxes is 1") {
    const BoundingBox a{10.0, 12.0, 5.0, 7.0};
    CHECK(hns::iou(a, a) == 1.0);
}

TEST_CASE("iou of disjoint boxes is 0") {
    const BoundingBox a{0.0, 0.0, 4.0, 4.0};
    const BoundingBox b{100.0, 0.0, 4.0, 4.0};
    CHECK(hns::iou(a, b) == 0.0);
    // touching edges count as empty intersection
    const BoundingBox c = BoundingBox::from_corner(0, 0, 10, 10);
    const BoundingBox d = BoundingBox::from_corner(10, 0, 10, 10);
    CHECK(hns::iou(c, d) == 0.0);
}

TEST_CASE("iou half-overlap example") {
    const BoundingBox a = BoundingBox::from_corner(0, 0, 10, 10);
    const BoundingBox b = BoundingBox::from_corner(5, 0, 10, 10);
    const double expected = oracle::iou_cells(0, 0, 10, 10, 5, 0, 10, 10);
    CHECK(expected == 50.0 / 150.0);
    CHECK(hns::iou(a, b) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(hns::iou(a, b) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("iou matches unit-cell oracle and is symmetric on random boxes") {
    auto g = oracle::rng(11);
    std::uniform_int_distribution<int> pos(-20, 60);
    std::uniform_int_distribution<int> len(1, 40);
    for (int i = 0; i < 300; ++i) {
        const int ax = pos(g), ay = pos(g), aw = len(g), ah = len(g);
        const int bx = pos(g), by = pos(g), bw = len(g), bh = len(g);
        const BoundingBox a = BoundingBox::from_corner(ax, ay, aw, ah);
        const BoundingBox b = BoundingBox::from_corner(bx, by, bw, bh);
        const double v = hns::iou(a, b);
        const double w = oracle::iou_cells(ax, ay, aw, ah, bx, by, bw, bh);
        CHECK(v == doctest::Approx(w).epsilon(1e-12));
        CHECK(hns::iou(b, a) == v);
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
    }
}

TEST_CASE("center_distance basics") {
    const BoundingBox a{0.0, 0.0, 1.0, 1.0};
    CHECK(hns::center_distance(a, a) == 0.0);
    const BoundingBox b{3.0, 4.0, 1.0, 1.0};
    CHECK(hns::center_distance(a, b) == 5.0);
    const BoundingBox c{20.0, 0.0, 1.0, 1.0};
    CHECK(hns::center_distance(a, c) == 20.0);
}

TEST_CASE("box validity and corner conversion") {
    CHECK(BoundingBox{0, 0, 1, 1}.valid());
    CHECK_FALSE(BoundingBox{0, 0, 0, 1}.valid());
    CHECK_FALSE(BoundingBox{0, 0, 1, -2}.valid());
    const BoundingBox b = BoundingBox::from_corner(2, 4, 10, 6);
    CHECK(b.cx == 7.0);
    CHECK(b.cy == 7.0);
    CHECK(b.x0() == 2.0);
    CHECK(b.y1() == 10.0);
    CHECK(b.area() == 60.0);
}

}  // TEST_SUITE
