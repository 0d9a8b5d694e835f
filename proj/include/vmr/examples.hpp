#ifndef VMR_EXAMPLES_HPP
#define VMR_EXAMPLES_HPP

#include <array>

#include "vmr/interval_set.hpp"
#include "vmr/vector_measure.hpp"

namespace vmr::examples {

/// Mutually singular pair: densities (2 on [0,1/2), 0) and (0, 2 on [1/2,1]).
/// Its range is the unit square.
VectorMeasure singular_pair();

/// (1, f) dx with f = 1/2 on [0,1/2) and 3/2 on [1/2,1]. Piecewise-linear
/// range boundary with a kink at (1/2, 1/4).
VectorMeasure step_ratio();

/// (1, 2x) dx. Range bounded below by b = a^2 and above by b = 2a - a^2.
VectorMeasure linear_ratio();

/// Three-dimensional measure (1, 2x, rho(x)) dx with rho = 4x on [0,1/2) and
/// 4x - 2 on [1/2,1]; the instance on which no maximal subset exists.
VectorMeasure triple_sawtooth();

/// The witness sets and target vectors that make triple_sawtooth tick: both
/// z1 and z2 have measure p, w1 in z1 hits q1, w2 in z2 hits q2, and no
/// single subset of measure p reaches both q1 and q2.
struct TripleInstance {
    IntervalSet z1, z2, w1, w2;
    std::array<double, 3> p, q1, q2;
};
TripleInstance triple_sawtooth_sets();

} // namespace vmr::examples

#endif
