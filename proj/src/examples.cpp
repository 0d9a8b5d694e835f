#include "vmr/examples.hpp"

namespace vmr::examples {

VectorMeasure singular_pair() {
    PiecewisePoly g1({0.0, 0.5, 1.0}, {Poly{{2.0, 0.0, 0.0}}, Poly{}});
    PiecewisePoly g2({0.0, 0.5, 1.0}, {Poly{}, Poly{{2.0, 0.0, 0.0}}});
    return VectorMeasure({g1, g2});
}

VectorMeasure step_ratio() {
    PiecewisePoly g1 = PiecewisePoly::constant(1.0);
    PiecewisePoly g2({0.0, 0.5, 1.0}, {Poly{{0.5, 0.0, 0.0}}, Poly{{1.5, 0.0, 0.0}}});
    return VectorMeasure({g1, g2});
}

VectorMeasure linear_ratio() {
    PiecewisePoly g1 = PiecewisePoly::constant(1.0);
    PiecewisePoly g2({0.0, 1.0}, {Poly{{0.0, 2.0, 0.0}}});
    return VectorMeasure({g1, g2});
}

VectorMeasure triple_sawtooth() {
    PiecewisePoly g1 = PiecewisePoly::constant(1.0);
    PiecewisePoly g2({0.0, 1.0}, {Poly{{0.0, 2.0, 0.0}}});
    // 4x on [0,1/2), 4x-2 on [1/2,1]; both pieces are 4t in local coordinates
    PiecewisePoly g3({0.0, 0.5, 1.0}, {Poly{{0.0, 4.0, 0.0}}, Poly{{0.0, 4.0, 0.0}}});
    return VectorMeasure({g1, g2, g3});
}

TripleInstance triple_sawtooth_sets() {
    TripleInstance t;
    t.z1 = IntervalSet{{0.0, 0.25}, {0.75, 1.0}};
    t.z2 = IntervalSet{{0.0, 0.125}, {0.375, 0.625}, {0.875, 1.0}};
    t.w1 = IntervalSet{{0.0, 0.25}};
    t.w2 = IntervalSet{{0.0, 0.125}, {0.5, 0.625}};
    t.p = {0.5, 0.5, 0.5};
    t.q1 = {0.25, 1.0 / 16.0, 0.125};
    t.q2 = {0.25, 5.0 / 32.0, 1.0 / 16.0};
    return t;
}

} // namespace vmr::examples
