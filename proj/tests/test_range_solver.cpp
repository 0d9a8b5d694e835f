#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "test_support.hpp"
#include "vmr/errors.hpp"
#include "vmr/examples.hpp"
#include "vmr/range_solver.hpp"

using namespace vmr;

namespace {

ConvexRegion unit_square() {
    return ConvexRegion::hull_of({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

} // namespace

TEST_CASE("range of the singular pair is the unit square") {
    RangeResult r = compute_range(examples::singular_pair());
    CHECK(hausdorff(r.region, unit_square()) <= 1e-12);
    CHECK(r.sampling_error_bound == doctest::Approx(0.0));
    CHECK(r.total.x == doctest::Approx(1.0));
    CHECK(r.total.y == doctest::Approx(1.0));
}

TEST_CASE("range of the linear ratio lies between the two parabolas") {
    RangeResult r = compute_range(examples::linear_ratio());
    CHECK(r.sampling_error_bound <= 2e-6); // tangent-envelope bound, conservative
    // sampled lower boundary vertices sit on b = a^2; region stays between
    for (Vec2 v : r.lower_boundary)
        CHECK(v.y == doctest::Approx(v.x * v.x).epsilon(1e-9));
    auto up = upper_chain(r.region);
    for (double a : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        CHECK(std::fabs(chain_value_at(r.lower_boundary, a) - a * a) <= 2e-6);
        CHECK(std::fabs(chain_value_at(up, a) - (2 * a - a * a)) <= 2e-6);
    }
    // extreme points
    CHECK(r.region.contains({0, 0}, 1e-12));
    CHECK(r.region.contains({1, 1}, 1e-12));
}

TEST_CASE("range of the step ratio has the kink at (1/2, 1/4)") {
    RangeResult r = compute_range(examples::step_ratio());
    CHECK(r.sampling_error_bound == doctest::Approx(0.0));
    ConvexRegion want = ConvexRegion::hull_of({{0, 0}, {0.5, 0.25}, {1, 1}, {0.5, 0.75}});
    CHECK(hausdorff(r.region, want) <= 1e-12);
    CHECK(chain_value_at(r.lower_boundary, 0.5) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("shift-intersect set of the singular pair") {
    RangeResult r = compute_range(examples::singular_pair());
    ConvexRegion q = q_set(r, {0.7, 0.8});
    ConvexRegion want = ConvexRegion::hull_of({{0, 0}, {0.7, 0}, {0.7, 0.8}, {0, 0.8}});
    CHECK(hausdorff(q, want) <= 1e-12);

    // zero shift gives the whole range
    CHECK(hausdorff(q_set(r, r.total), r.region) <= 1e-12);
    // p = 0 degenerates to the origin
    ConvexRegion origin = q_set(r, {0.0, 0.0});
    CHECK(origin.vertex_count() <= 2);
    CHECK(origin.contains({0, 0}, 1e-9));
    CHECK_THROWS_AS(q_set(r, {2.0, 2.0}), NotInRange);
}

TEST_CASE("q sets are centrally symmetric about p/2") {
    testing::Rng rng(31);
    for (int k = 0; k < 25; ++k) {
        VectorMeasure mu = testing::random_measure(rng);
        RangeResult r = compute_range(mu);
        // p interior: blend between 0 and the total
        double t = testing::uniform(rng, 0.2, 0.8);
        Vec2 p = r.total * t;
        ConvexRegion q = q_set(r, p);
        CHECK(q.centrally_symmetric(p * 0.5, 1e-9));
    }
}

TEST_CASE("ranges are centrally symmetric about half the total") {
    testing::Rng rng(32);
    testing::MeasureGen g;
    g.allow_singular = true;
    for (int k = 0; k < 50; ++k) {
        VectorMeasure mu = testing::random_measure(rng, g);
        RangeResult r = compute_range(mu);
        CHECK(hausdorff(r.region.reflected(r.total * 0.5), r.region) <= 1e-9);
        CHECK(r.region.contains({0, 0}, 1e-12));
        CHECK(r.region.contains(r.total, 1e-12));
    }
}

TEST_CASE("maximal subset of the linear ratio example") {
    MaximalSetResult res = maximal_subset(examples::linear_ratio(), {0.7, 0.8});
    CHECK(res.a_star == doctest::Approx(11.0 / 60.0).epsilon(1e-10));
    CHECK(res.achieved.x == doctest::Approx(0.7).epsilon(1e-10));
    CHECK(res.achieved.y == doctest::Approx(0.8).epsilon(1e-10));
    REQUIRE(res.z_star.size() == 2);
    CHECK(res.z_star.intervals()[0].hi == doctest::Approx(11.0 / 60.0).epsilon(1e-10));
    CHECK(res.z_star.intervals()[1].lo == doctest::Approx(29.0 / 60.0).epsilon(1e-10));
    RangeResult sub = range_of_subset(examples::linear_ratio(), res.z_star);
    CHECK(hausdorff(sub.region, res.q_region) <= 5e-4);
}

TEST_CASE("maximal subset of the step ratio example") {
    MaximalSetResult res = maximal_subset(examples::step_ratio(), {0.7, 0.8});
    CHECK(res.a_star == doctest::Approx(0.25).epsilon(1e-10));
    REQUIRE(res.z_star.size() == 2);
    CHECK(res.z_star.intervals()[0].hi == doctest::Approx(0.25).epsilon(1e-10));
    CHECK(res.z_star.intervals()[1].lo == doctest::Approx(0.55).epsilon(1e-10));
}

TEST_CASE("maximal subset with the full-measure target is everything") {
    VectorMeasure mu = examples::linear_ratio();
    RangeResult r = compute_range(mu);
    MaximalSetResult res = maximal_subset(mu, r.total);
    CHECK(res.z_star.total_length() == doctest::Approx(1.0));
    CHECK(hausdorff(res.q_region, r.region) <= 1e-9);
}

TEST_CASE("minimal subset examples") {
    MinimalSetResult res = minimal_subset(examples::linear_ratio(), {0.3, 0.2});
    REQUIRE(res.m_star.size() == 1);
    CHECK(res.m_star.intervals()[0].lo == doctest::Approx(11.0 / 60.0).epsilon(1e-9));
    CHECK(res.m_star.intervals()[0].hi == doctest::Approx(29.0 / 60.0).epsilon(1e-9));
    CHECK(res.achieved.x == doctest::Approx(0.3).epsilon(1e-9));
    CHECK(res.achieved.y == doctest::Approx(0.2).epsilon(1e-9));

    VectorMeasure mu = examples::linear_ratio();
    RangeResult r = compute_range(mu);
    MinimalSetResult full = minimal_subset(mu, r.total);
    CHECK(full.m_star.total_length() == doctest::Approx(1.0));

    // erosion formula on the singular pair: rectangle by rectangle
    MinimalSetResult sing = minimal_subset(examples::singular_pair(), {0.3, 0.2});
    ConvexRegion want = ConvexRegion::hull_of({{0, 0}, {0.3, 0}, {0.3, 0.2}, {0, 0.2}});
    CHECK(hausdorff(sing.region, want) <= 1e-9);
    RangeResult mrange = range_of_subset(examples::singular_pair(), sing.m_star);
    CHECK(hausdorff(mrange.region, want) <= 1e-9);
}

TEST_CASE("range of subset basics") {
    VectorMeasure mu = examples::linear_ratio();
    RangeResult whole = range_of_subset(mu, IntervalSet::full());
    RangeResult direct = compute_range(mu);
    CHECK(hausdorff(whole.region, direct.region) <= 1e-12);

    RangeResult none = range_of_subset(mu, IntervalSet::empty());
    CHECK(none.region.is_point());
    CHECK(none.region.contains({0, 0}, 1e-12));

    IntervalSet z{{0.0, 11.0 / 60.0}, {29.0 / 60.0, 1.0}};
    RangeResult sub = range_of_subset(mu, z);
    ConvexRegion q = q_set(direct, {0.7, 0.8});
    CHECK(hausdorff(sub.region, q) <= 5e-4);
}

TEST_CASE("proportional densities give a segment range") {
    VectorMeasure mu({PiecewisePoly::constant(2.0), PiecewisePoly::constant(1.0)});
    RangeResult r = compute_range(mu);
    CHECK(r.region.is_segment());
    CHECK(hausdorff(r.region, ConvexRegion::segment({0, 0}, {2, 1})) <= 1e-12);
    ConvexRegion q = q_set(r, {1.0, 0.5});
    CHECK(hausdorff(q, ConvexRegion::segment({0, 0}, {1, 0.5})) <= 1e-9);
    MaximalSetResult res = maximal_subset(mu, {1.0, 0.5});
    CHECK(norm_inf(res.achieved - Vec2{1.0, 0.5}) <= 1e-9);
}

TEST_CASE("dead stretches where both densities vanish are handled") {
    // both components zero on [0, 0.2): the range only sees the live part
    PiecewisePoly g1({0.0, 0.2, 1.0}, {Poly{}, Poly{{1.0, 0.0, 0.0}}});
    PiecewisePoly g2({0.0, 0.2, 1.0}, {Poly{}, Poly{{0.0, 2.0, 0.0}}});
    VectorMeasure mu({g1, g2});
    RangeResult r = compute_range(mu);
    Vec2 total = mu.measure2_of(IntervalSet::full());
    CHECK(total.x == doctest::Approx(0.8));
    CHECK(r.region.contains(total, 1e-12));
    CHECK(hausdorff(r.region.reflected(total * 0.5), r.region) <= 1e-9);
    Vec2 p = total * 0.6;
    p.y = std::min(total.y, p.y + 0.1);
    if (r.region.signed_distance(p) < -1e-6) {
        MaximalSetResult res = maximal_subset(mu, p);
        CHECK(norm_inf(res.achieved - p) <= 1e-9);
    }
}

TEST_CASE("targets on the range boundary clamp cleanly") {
    // p on the curved lower boundary of the linear example: b = a^2
    MaximalSetResult on_curve = maximal_subset(examples::linear_ratio(), {0.7, 0.49});
    CHECK(norm_inf(on_curve.achieved - Vec2{0.7, 0.49}) <= 1e-9);
    // Z* is the lower set itself
    CHECK(on_curve.z_star.total_length() == doctest::Approx(0.7).epsilon(1e-9));
    CHECK(on_curve.z_star.intervals()[0].lo == doctest::Approx(0.0));

    // p on the bottom edge of the unit-square range: the q set degenerates
    MaximalSetResult on_edge = maximal_subset(examples::singular_pair(), {0.7, 0.0});
    CHECK(norm_inf(on_edge.achieved - Vec2{0.7, 0.0}) <= 1e-9);
    CHECK(on_edge.q_region.vertex_count() <= 2);
    RangeResult sub = range_of_subset(examples::singular_pair(), on_edge.z_star);
    CHECK(hausdorff(sub.region, on_edge.q_region) <= 1e-9);
}

TEST_CASE("maximal range equality on random measures") {
    testing::Rng rng(33);
    testing::MeasureGen g;
    g.tame = true;
    for (int k = 0; k < 15; ++k) {
        VectorMeasure mu = testing::random_measure(rng, g);
        RangeResult r = compute_range(mu);
        double t = testing::uniform(rng, 0.15, 0.85);
        double s = testing::uniform(rng, -0.2, 0.2);
        Vec2 p = r.total * t;
        // nudge p vertically but keep it inside
        p.y = std::clamp(p.y + s * r.total.y,
                         chain_value_at(r.lower_boundary, p.x) + 1e-6,
                         r.total.y);
        if (r.region.signed_distance(p) > -1e-6) continue; // want strict interior
        MaximalSetResult res = maximal_subset(mu, p);
        CHECK(norm_inf(res.achieved - p) <= 1e-9);
        RangeResult sub = range_of_subset(mu, res.z_star);
        CHECK(hausdorff(sub.region, res.q_region) <= 1e-6);
    }
}

TEST_CASE("maximality: perturbed subsets stay inside the q set") {
    for (const VectorMeasure& mu :
         {examples::singular_pair(), examples::step_ratio(), examples::linear_ratio()}) {
        Vec2 p{0.7, 0.8};
        MaximalSetResult res = maximal_subset(mu, p);
        testing::Rng rng(34);
        int produced = 0;
        for (int k = 0; k < 40 && produced < 12; ++k) {
            auto z2 = testing::perturb_preserving(rng, mu, res.z_star);
            if (!z2) continue;
            ++produced;
            REQUIRE(norm_inf(mu.measure2_of(*z2) - p) <= 1e-9);
            RangeResult sub = range_of_subset(mu, *z2);
            CHECK(res.q_region.contains_region(sub.region, 1e-6));
        }
        CHECK(produced >= 5);
    }
}

TEST_CASE("minimality: perturbed complements contain the minimal range") {
    for (const VectorMeasure& mu :
         {examples::singular_pair(), examples::step_ratio(), examples::linear_ratio()}) {
        Vec2 q{0.3, 0.2};
        MinimalSetResult res = minimal_subset(mu, q);
        RangeResult minimal_range = range_of_subset(mu, res.m_star);
        Vec2 total = mu.measure2_of(IntervalSet::full());
        MaximalSetResult dualmax = maximal_subset(mu, total - q);
        testing::Rng rng(35);
        int produced = 0;
        for (int k = 0; k < 40 && produced < 12; ++k) {
            auto z2 = testing::perturb_preserving(rng, mu, dualmax.z_star);
            if (!z2) continue;
            ++produced;
            IntervalSet m = z2->complement();
            REQUIRE(norm_inf(mu.measure2_of(m) - q) <= 1e-9);
            RangeResult sub = range_of_subset(mu, m);
            CHECK(sub.region.contains_region(minimal_range.region, 1e-6));
        }
        CHECK(produced >= 5);
    }
}

TEST_CASE("lower boundaries of the carved space agree below the cut") {
    // the complement of the slab has the same lower boundary as the whole
    // space for masses up to a*; checked through the exact level machinery
    testing::Rng rng(36);
    for (int k = 0; k < 20; ++k) {
        VectorMeasure mu = testing::random_measure(rng);
        auto [nu, basis] = ensure_equivalent(mu);
        LevelProfile prof = LevelProfile::build(nu);
        Vec2 tot{prof.total_mass(), prof.total_mass2()};
        double u1 = testing::uniform(rng, 0.1, 0.6) * tot.x;
        double glo = prof.slab_value2(0.0, u1);
        double ghi = prof.slab_value2(tot.x - u1, u1);
        Vec2 u{u1, testing::uniform(rng, glo, ghi)};
        double a_star = prof.solve_slab(u);
        IntervalSet z = prof.slab(a_star, u1).complement();
        LevelProfile zprof = LevelProfile::build(nu.restricted(z));
        for (int j = 1; j <= 20; ++j) {
            double a = a_star * j / 20.0;
            CHECK(std::fabs(zprof.lower_value2(a) - prof.lower_value2(a)) <= 1e-9);
        }
    }
}

TEST_CASE("range of a subset plus range of its complement is the whole range") {
    testing::Rng rng(37);
    testing::MeasureGen g;
    g.tame = true;
    for (int k = 0; k < 20; ++k) {
        VectorMeasure mu = testing::random_measure(rng, g);
        IntervalSet s = testing::random_interval_set(rng);
        RangeResult rs = range_of_subset(mu, s);
        RangeResult rc = range_of_subset(mu, s.complement());
        RangeResult whole = compute_range(mu);
        CHECK(hausdorff(minkowski_sum(rs.region, rc.region), whole.region) <= 1e-6);
    }
}
