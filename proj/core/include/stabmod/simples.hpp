#pragma once

#include "stabmod/rep.hpp"

namespace stabmod::rep {

/// Builds a module from matrices on the named generators: every element is
/// factored as a generator word and the full element-indexed action is
/// reconstructed, then audited.
RepModule module_from_generator_actions(const GroupPtr& g, RingSpec ring, long rank,
                                        const std::vector<std::pair<std::string, Matrix>>& gen_acts);

struct SimpleInfo {
    std::string name;
    RepModule module;  // over PrimeField(p)
    long end_dim = 1;  // dim of the endomorphism division algebra over F_p
};

/// The seven simple F_3[SD16]-modules: the four sign characters (labelled by
/// their values on omega and phi) and three 2-dimensional modules realized on
/// F_9 with omega acting as multiplication by zeta^t (zeta = 1+u a fixed
/// generator of F_9^x, u^2 = -1) and phi as Frobenius, t = 1, 2, 5.
/// Completeness is certified in tests (sum of squares, pairwise Homs).
std::vector<SimpleInfo> simples_sd16();

/// The five simple F_3[Q8]-modules: four characters (trivial, theta, and the
/// two others) plus the 2-dimensional module.
std::vector<SimpleInfo> simples_q8();

/// Simples of the p'-complement H over F_3, dispatched by the catalog groups
/// in scope (trivial, C2, C4, Q8, SD16).
std::vector<SimpleInfo> simples_for(const GroupPtr& h);

/// Lift of a simple to Z/3^m (Hensel / Teichmueller constructions for the
/// 2-dimensional ones) or, for character simples only, to the exact p-local
/// rationals. Throws for 2-dimensional simples in PLocal mode: their matrix
/// entries are genuinely 3-adic.
RepModule lift_simple(const SimpleInfo& s, RingSpec target);

/// Index of the dual simple within the same list.
size_t dual_simple_index(const std::vector<SimpleInfo>& simples, size_t idx);

/// sqrt of -2 mod 3^m (the Hensel lift with a = 1 mod 3).
mpz_class sqrt_minus_two_mod_3m(unsigned m);

}  // namespace stabmod::rep
