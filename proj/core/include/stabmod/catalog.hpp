#pragma once

#include "stabmod/group.hpp"

namespace stabmod::grp {

/// Cyclic group of order n with generator "t".
GroupPtr cyclic(int n);

/// Semidihedral group of order 16: generators omega (order 8) and phi
/// (order 2) with phi * omega * phi^-1 = omega^3. Element omega^a phi^b has
/// index a + 8b. Realizes omega as multiplication by a generator of F_9^x
/// and phi as Frobenius.
struct Sd16 {
    GroupPtr group;
    int omega, phi;
};
const Sd16& sd16();

/// The quaternion subgroup of sd16 generated by i = omega*phi and
/// j = omega^2, relabelled as its own group of order 8.
struct Q8Data {
    GroupPtr group;  // generators named "i", "j"
    GroupHom embedding_in_sd16;
    /// theta values on q8: theta(i) = +1, theta(j) = -1, extended.
    std::vector<int> theta;
};
const Q8Data& q8_in_sd16();

/// G24 = C3 x| Q8 with i acting trivially on C3 and j by inversion.
/// Element (c-exponent, q) has index c*8 + q. Generators "c", "i", "j".
struct G24Data {
    GroupPtr group;
    GroupPtr c3;
    GroupHom c3_in;   // C3 -> G24
    GroupHom q8_in;   // Q8 -> G24 (the shared q8_in_sd16().group)
    GroupHom sylow;   // normal Sylow-3 subgroup (= c3_in)
    GroupHom complement;  // 3'-complement (= q8_in)
    GroupHom to_q8;   // quotient map G24 -> Q8 killing C3
    int c, i, j;
};
const G24Data& g24();

/// N_k = (C3 x C_{3^k}) x| Q8, with j inverting both cyclic factors and i
/// acting trivially. Element (c-exp a, z-exp b, q) has index
/// (a*3^k + b)*8 + q. Generators "c", "g" (the C_{3^k} generator), "i", "j".
struct NLevelData {
    int k = 0;
    GroupPtr group;
    GroupHom g24_in;      // G24 -> N_k on the (c, 0, q) triples
    GroupHom q8_in;       // Q8 -> N_k
    GroupHom c3_in;       // C3 -> N_k
    GroupHom z_in;        // C_{3^k} -> N_k
    GroupHom d_in;        // D = <c, i> -> N_k, normal of order 12
    GroupHom sylow;       // C3 x C_{3^k} -> N_k (normal Sylow-3)
    GroupHom complement;  // Q8 -> N_k
    int c, z, i, j;
};
NLevelData n_level(int k);

/// Quotient tower N_1 <- N_2 <- ... with down maps killing the order-3
/// subgroup of the C_{3^{k+1}} factor.
struct Tower {
    std::vector<NLevelData> levels;  // levels[t] is N_{t+1}
    std::vector<GroupHom> down;      // down[t] : N_{t+2} -> N_{t+1}
};
Tower tower(int k_max);

}  // namespace stabmod::grp
