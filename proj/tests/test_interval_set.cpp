#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "vmr/interval_set.hpp"

using namespace vmr;

TEST_CASE("normalization sorts, merges, and drops slivers") {
    IntervalSet s = IntervalSet::from_unsorted(
        {{0.6, 0.8}, {0.1, 0.3}, {0.3, 0.4}, {0.55, 0.55}, {0.79, 0.9}});
    REQUIRE(s.size() == 2);
    CHECK(s.intervals()[0].lo == doctest::Approx(0.1));
    CHECK(s.intervals()[0].hi == doctest::Approx(0.4));
    CHECK(s.intervals()[1].lo == doctest::Approx(0.6));
    CHECK(s.intervals()[1].hi == doctest::Approx(0.9));
    CHECK(s.total_length() == doctest::Approx(0.6));
}

TEST_CASE("complement of the empty set is the whole interval") {
    CHECK(IntervalSet::empty().complement().total_length() == doctest::Approx(1.0));
    CHECK(IntervalSet::full().complement().is_empty());
}

TEST_CASE("set algebra on a known pair") {
    IntervalSet a{{0.0, 0.5}};
    IntervalSet b{{0.25, 0.75}};
    CHECK(a.set_intersect(b).total_length() == doctest::Approx(0.25));
    CHECK(a.set_union(b).total_length() == doctest::Approx(0.75));
    CHECK(a.set_minus(b).total_length() == doctest::Approx(0.25));
    CHECK(a.set_minus(b).intervals()[0].hi == doctest::Approx(0.25));
    CHECK(a.overlap_length(b) == doctest::Approx(0.25));
    CHECK(a.symmetric_difference_length(b) == doctest::Approx(0.5));
}

TEST_CASE("containment and membership") {
    IntervalSet s{{0.2, 0.4}, {0.6, 0.8}};
    CHECK(s.contains_point(0.3));
    CHECK_FALSE(s.contains_point(0.5));
    CHECK_FALSE(s.contains_point(0.4)); // half-open
    CHECK(IntervalSet::full().covers(s, 0.0));
    CHECK_FALSE(s.covers(IntervalSet::full(), 1e-6));
}

TEST_CASE("algebra identities on random sets") {
    testing::Rng rng(42);
    for (int k = 0; k < 200; ++k) {
        IntervalSet a = testing::random_interval_set(rng);
        IntervalSet b = testing::random_interval_set(rng);
        // lengths: |a| + |b| = |a u b| + |a n b|
        CHECK(a.total_length() + b.total_length() ==
              doctest::Approx(a.set_union(b).total_length() +
                              a.set_intersect(b).total_length()).epsilon(1e-12));
        // de morgan
        CHECK(a.set_union(b).complement().symmetric_difference_length(
                  a.complement().set_intersect(b.complement())) ==
              doctest::Approx(0.0).epsilon(1e-12));
        // involution
        CHECK(a.complement().complement().symmetric_difference_length(a) ==
              doctest::Approx(0.0).epsilon(1e-12));
        // difference disjoint from subtrahend
        CHECK(a.set_minus(b).overlap_length(b) == doctest::Approx(0.0));
        // invariants: sorted, disjoint, positive gaps
        IntervalSet u = a.set_union(b);
        auto ivs = u.intervals();
        for (std::size_t i = 0; i + 1 < ivs.size(); ++i)
            CHECK(ivs[i + 1].lo > ivs[i].hi);
    }
}
