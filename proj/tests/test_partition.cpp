#include <doctest.h>

#include <set>
#include <stdexcept>

#include "qs/partition.hpp"

using namespace qs;

TEST_CASE("parse and print") {
    CHECK(Partition::parse("3,1") == Partition{3, 1});
    CHECK(Partition::parse("0").empty());
    CHECK(Partition::parse("-").empty());
    CHECK(Partition::parse("2,0,0") == Partition{2});
    CHECK(Partition{2, 1, 1}.str() == "2,1,1");
    CHECK(Partition{}.str() == "0");
    CHECK_THROWS_AS(Partition::parse("1,2"), std::domain_error);
    CHECK(Partition::parse("1,-2").is_generalized());
    CHECK(SkewShape::parse("2,1/1").inner == Partition{1});
}

TEST_CASE("size, length, differences") {
    Partition p{4, 2, 2, 0};
    CHECK(p.size() == 8);
    CHECK(p.length() == 3);
    CHECK(p.differences() == std::vector<int>{2, 0});
    auto g = Partition::generalized({3, 0, -1});
    CHECK(g.differences() == std::vector<int>{3, 1});
    CHECK(g.size() == 2);
}

TEST_CASE("transpose") {
    CHECK(transpose(Partition{}) == Partition{});
    CHECK(transpose(Partition{2, 1}) == Partition{2, 1});
    CHECK(transpose(Partition{3, 1}) == Partition{2, 1, 1});
    CHECK_THROWS_AS(transpose(Partition::generalized({1, -1})), std::domain_error);
    for (const auto& p : enumerate_box({4, 3})) {
        CHECK(transpose(transpose(p)) == p);
        CHECK(Box{3, 4}.contains(transpose(p)));
    }
}

TEST_CASE("complement") {
    CHECK(complement(Partition{}, {2, 2}) == Partition{2, 2});
    CHECK(complement(Partition{2, 1}, {2, 2}) == Partition{1});
    CHECK(complement(Partition{3, 3}, {2, 3}) == Partition{});
    CHECK_THROWS_AS(complement(Partition{3}, {2, 2}), std::domain_error);
    const Box box{3, 3};
    for (const auto& a : enumerate_box(box)) {
        CHECK(complement(complement(a, box), box) == a);
        CHECK(complement(a, box).size() == 9 - a.size());
        for (const auto& b : enumerate_box(box))
            CHECK(contains(b, a) == contains(complement(a, box), complement(b, box)));
    }
}

TEST_CASE("contains") {
    CHECK(contains(Partition{2, 1}, Partition{1, 1}));
    CHECK_FALSE(contains(Partition{2, 1}, Partition{3}));
    CHECK(contains(Partition{3, 2, 1}, Partition{2, 2}));
    CHECK_FALSE(contains(Partition{2}, Partition{1, 1}));
}

TEST_CASE("enumerate_box") {
    CHECK(enumerate_box({1, 1}) == std::vector<Partition>{Partition{}, Partition{1}});
    CHECK(enumerate_box({0, 5}) == std::vector<Partition>{Partition{}});
    auto b22 = enumerate_box({2, 2});
    REQUIRE(b22.size() == 6);
    std::vector<int> hist(5, 0);
    for (const auto& p : b22) ++hist[static_cast<std::size_t>(p.size())];
    CHECK(hist == std::vector<int>{1, 1, 2, 1, 1});
    // graded, then lexicographic: (1,1) before (2)
    CHECK(b22[2] == Partition{1, 1});
    CHECK(b22[3] == Partition{2});
    for (int d = 0; d <= 8; ++d)
        for (int l = 0; l <= 8; ++l) {
            auto all = enumerate_box({d, l});
            CHECK(all.size() == Box{d, l}.cardinality());
            CHECK(std::set<Partition>(all.begin(), all.end()).size() == all.size());
            for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] < all[i]);
        }
}

TEST_CASE("oslash") {
    CHECK(oslash(Partition{}, {2, 3}, Partition{}, {2, 1}) == Partition{3, 3});
    CHECK(oslash(Partition{1}, {1, 1}, Partition{}, {1, 1}) == Partition{1, 1});
    CHECK(oslash(Partition{2, 1}, {2, 2}, Partition{1}, {1, 1}) == Partition{3, 2, 1});
    CHECK_THROWS_AS(oslash(Partition{3}, {2, 2}, Partition{}, {1, 1}), std::domain_error);
    const Box b1{2, 2}, b2{2, 1};
    std::set<Partition> seen;
    for (const auto& l : enumerate_box(b1))
        for (const auto& n : enumerate_box(b2)) {
            auto p = oslash(l, b1, n, b2);
            CHECK(p.size() == l.size() + n.size() + b2.d * b1.l);
            CHECK(Box{4, 3}.contains(p));
            seen.insert(p);
        }
    CHECK(seen.size() == b1.cardinality() * b2.cardinality());
}

TEST_CASE("shifts and stacking") {
    CHECK(shifted(Partition{2, 1}, 1, 3) == Partition{3, 2, 1});
    CHECK(shifted(Partition{2}, -1, 2).is_generalized());
    CHECK(negated(Partition{3, 1}, 3) == Partition::generalized({0, -1, -3}));
    CHECK(stack_rows(Partition{1}, 2, 3) == Partition{3, 3, 1});
    for (const auto& p : enumerate_box({2, 3})) {
        Partition t = transpose(p);
        std::vector<int> cols(3, 0);
        for (int j = 0; j < 3; ++j) cols[static_cast<std::size_t>(j)] = t[static_cast<std::size_t>(j)] + 2;
        CHECK(stack_rows(p, 2, 3) == transpose(Partition(cols)));
    }
}
