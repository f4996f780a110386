#pragma once

namespace edsim::two_qubit {

/// Closed-form expectation values for the two-qubit pair circuit at depths
/// 1..3, written out term by term rather than computed through the engine.
/// They exist to cross-validate the back-propagation engine.

struct LayerAngles {
    double q0;
    double q1;
};

struct SingleMoments {
    double x0, y0, z0;
    double x1, y1, z1;
};

/// Two-qubit correlators <P0 Q1>, field pq = <P on qubit 0, Q on qubit 1>.
struct PairMoments {
    double xx, xy, xz;
    double yx, yy, yz;
    double zx, zy, zz;
};

SingleMoments depth1_single(LayerAngles t1);
PairMoments depth1_pair(LayerAngles t1);
SingleMoments depth2_single(LayerAngles t1, LayerAngles t2);
PairMoments depth2_pair(LayerAngles t1, LayerAngles t2);
SingleMoments depth3_single(LayerAngles t1, LayerAngles t2, LayerAngles t3);

}  // namespace edsim::two_qubit
