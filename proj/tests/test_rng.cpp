#include "doctest.h"

#include "aisrec/rng.hpp"

#include <cmath>

using namespace ais;

TEST_CASE("streams are reproducible and seed-sensitive") {
    Rng a(2024), b(2024), c(2025);
    bool all_equal = true, any_diff = false;
    for (int i = 0; i < 64; ++i) {
        auto va = a.next_u64();
        all_equal = all_equal && (va == b.next_u64());
        any_diff = any_diff || (va != c.next_u64());
    }
    CHECK(all_equal);
    CHECK(any_diff);
}

TEST_CASE("uniform stays in [0,1) with a sane mean") {
    Rng rng(7);
    double sum = 0.0;
    for (int i = 0; i < 100000; ++i) {
        double u = rng.uniform();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
    }
    CHECK(sum / 100000 == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("normal variates have unit variance and vanishing skew") {
    Rng rng(99);
    const int n = 200000;
    double s1 = 0.0, s2 = 0.0, s3 = 0.0;
    for (int i = 0; i < n; ++i) {
        double x = rng.normal();
        s1 += x;
        s2 += x * x;
        s3 += x * x * x;
    }
    CHECK(s1 / n == doctest::Approx(0.0).epsilon(0.01));
    CHECK(s2 / n == doctest::Approx(1.0).epsilon(0.02));
    CHECK(s3 / n == doctest::Approx(0.0).epsilon(0.03));
}

TEST_CASE("derived streams differ between indices") {
    auto s0 = Rng::stream(5, 0);
    auto s1 = Rng::stream(5, 1);
    int diff = 0;
    for (int i = 0; i < 16; ++i)
        if (s0.next_u64() != s1.next_u64()) ++diff;
    CHECK(diff == 16);
}
