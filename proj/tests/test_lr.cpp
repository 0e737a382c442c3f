#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "qs/lr_oracle.hpp"
#include "qs/lr.hpp"

using namespace qs;

TEST_CASE("lr_coefficient examples") {
    for (const auto& l : enumerate_box({3, 3})) CHECK(lr_coefficient(Partition{}, l, l) == 1);
    CHECK(lr_coefficient(Partition{1}, Partition{1}, Partition{2}) == 1);
    CHECK(lr_coefficient(Partition{1}, Partition{1}, Partition{1, 1}) == 1);
    CHECK(lr_coefficient(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}) == 2);
    CHECK(lr_coefficient(Partition{2, 1}, Partition{2, 1}, Partition{4, 2}) == 1);
    CHECK(lr_coefficient(Partition{1}, Partition{1}, Partition{3}) == 0);
    CHECK(lr_coefficient(Partition{2}, Partition{1}, Partition{1, 1, 1}) == 0);
}

TEST_CASE("product_expand and skew_expand examples") {
    CHECK(product_expand(Partition{1}, Partition{1}) == LRMap{{Partition{2}, 1}, {Partition{1, 1}, 1}});
    CHECK(product_expand(Partition{}, Partition{2, 1}) == LRMap{{Partition{2, 1}, 1}});
    CHECK(product_expand(Partition{1}, Partition{1}, Box{1, 2}) == LRMap{{Partition{2}, 1}});
    CHECK(skew_expand(Partition{2, 1}, Partition{2, 1}) == LRMap{{Partition{}, 1}});
    CHECK(skew_expand(Partition{2, 1}, Partition{1}) == LRMap{{Partition{2}, 1}, {Partition{1, 1}, 1}});
    CHECK(skew_expand(Partition{3}, Partition{1}) == LRMap{{Partition{2}, 1}});
    CHECK(skew_expand(Partition{1}, Partition{2}).empty());
}

TEST_CASE("oracle: Schur polynomial products in the monomial basis") {
    for (int a = 0; a <= 4; ++a)
        for (const auto& mu : partitions_of(a, 3))
            for (int b = 0; b <= 4; ++b)
                for (const auto& nu : partitions_of(b, 3)) {
                    int vars = std::max(mu.length() + nu.length(), 4);
                    CHECK_MESSAGE(product_expand(mu, nu) == oracle::schur_product(mu, nu, vars),
                                  mu.str() << " * " << nu.str());
                }
}

TEST_CASE("symmetry and vanishing") {
    for (int n = 0; n <= 8; ++n)
        for (const auto& lambda : partitions_of(n))
            for (int a = 0; a <= n; ++a)
                for (const auto& mu : partitions_of(a))
                    for (const auto& nu : partitions_of(n - a))
                        CHECK(lr_coefficient(mu, nu, lambda) == lr_coefficient(nu, mu, lambda));
    CHECK(lr_coefficient(Partition{1}, Partition{1}, Partition{1}) == 0);
    CHECK(lr_coefficient(Partition{2}, Partition{1}, Partition{1, 1, 1}) == 0);
}

TEST_CASE("translation and complementation") {
    const Box box{3, 3};
    auto all = enumerate_box(box);
    for (const auto& lambda : all)
        for (const auto& mu : all)
            for (const auto& nu : all) {
                auto c = lr_coefficient(mu, nu, lambda);
                for (int k = 1; k <= 3; ++k)
                    CHECK(c == lr_coefficient(shifted(mu, k, 3), nu, shifted(lambda, k, 3)));
                CHECK(c == lr_coefficient(mu, complement(lambda, box), complement(nu, box)));
            }
}

TEST_CASE("persisted cache round trip") {
    lr_cache_clear();
    auto before = product_expand(Partition{2, 1}, Partition{2, 1});
    auto path = (std::filesystem::temp_directory_path() / "qs_lr_cache_test.bin").string();
    auto written = lr_cache_save(path);
    CHECK(written > 0);
    lr_cache_clear();
    CHECK(lr_cache_size() == 0);
    CHECK(lr_cache_load(path) == written);
    CHECK(product_expand(Partition{2, 1}, Partition{2, 1}) == before);
    std::remove(path.c_str());
    CHECK(lr_cache_load(path) == 0);
}
