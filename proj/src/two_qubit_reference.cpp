#include "edsim/two_qubit_reference.hpp"

#include <cmath>

namespace edsim::two_qubit {

namespace {

struct Trig {
    double c0, s0, c1, s1;
    explicit Trig(LayerAngles t)
        : c0(std::cos(t.q0)),
          s0(std::sin(t.q0)),
          c1(std::cos(t.q1)),
          s1(std::sin(t.q1)) {}
};

}  // namespace

SingleMoments depth1_single(LayerAngles t1) {
    const Trig a(t1);
    return SingleMoments{
        a.s0 * a.c1, 0.0, a.c0,
        a.c0 * a.s1, 0.0, a.c1,
    };
}

PairMoments depth1_pair(LayerAngles t1) {
    const Trig a(t1);
    return PairMoments{
        0.0,         0.0, a.s0,
        0.0,         a.s0 * a.s1, 0.0,
        a.s1,        0.0, a.c0 * a.c1,
    };
}

SingleMoments depth2_single(LayerAngles t1, LayerAngles t2) {
    const Trig a(t1), b(t2);
    return SingleMoments{
        a.s0 * b.c0 * b.c1 + a.c0 * a.c1 * b.s0 * b.c1 - a.s1 * b.s0 * b.s1,
        0.0,
        a.c0 * b.c0 - a.s0 * a.c1 * b.s0,
        a.s1 * b.c0 * b.c1 + a.c0 * a.c1 * b.c0 * b.s1 - a.s0 * b.s0 * b.s1,
        0.0,
        a.c1 * b.c1 - a.c0 * a.s1 * b.s1,
    };
}

PairMoments depth2_pair(LayerAngles t1, LayerAngles t2) {
    const Trig a(t1), b(t2);
    return PairMoments{
        a.s0 * a.s1,
        0.0,
        a.s0 * a.c1 * b.c0 + a.c0 * b.s0,
        0.0,
        a.s0 * b.c0 * b.s1 + a.s1 * b.s0 * b.c1 + a.c0 * a.c1 * b.s0 * b.s1,
        0.0,
        a.c0 * a.s1 * b.c1 + a.c1 * b.s1,
        0.0,
        a.c0 * a.c1 * b.c0 * b.c1 - a.s1 * b.c0 * b.s1 - a.s0 * b.s0 * b.c1,
    };
}

SingleMoments depth3_single(LayerAngles t1, LayerAngles t2, LayerAngles t3) {
    const Trig a(t1), b(t2), c(t3);
    const double x0_2 =
        a.s0 * b.c0 * b.c1 + a.c0 * a.c1 * b.s0 * b.c1 - a.s1 * b.s0 * b.s1;
    const double z0_2 = a.c0 * b.c0 - a.s0 * a.c1 * b.s0;
    const double x1_2 =
        a.s1 * b.c0 * b.c1 + a.c0 * a.c1 * b.c0 * b.s1 - a.s0 * b.s0 * b.s1;
    const double z1_2 = a.c1 * b.c1 - a.c0 * a.s1 * b.s1;
    const double xx_2 = a.s0 * a.s1;
    const double xz_2 = a.s0 * a.c1 * b.c0 + a.c0 * b.s0;
    const double zx_2 = a.c0 * a.s1 * b.c1 + a.c1 * b.s1;
    const double zz_2 =
        a.c0 * a.c1 * b.c0 * b.c1 - a.s1 * b.c0 * b.s1 - a.s0 * b.s0 * b.c1;

    return SingleMoments{
        xz_2 * c.c0 * c.c1 - xx_2 * c.c0 * c.s1 + zz_2 * c.s0 * c.c1 -
            zx_2 * c.s0 * c.s1,
        0.0,
        z0_2 * c.c0 - x0_2 * c.s0,
        zx_2 * c.c0 * c.c1 + zz_2 * c.c0 * c.s1 - xx_2 * c.s0 * c.c1 -
            xz_2 * c.s0 * c.s1,
        0.0,
        z1_2 * c.c1 - x1_2 * c.s1,
    };
}

}  // namespace edsim::two_qubit
