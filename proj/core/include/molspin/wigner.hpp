#pragma once

#include "molspin/halfint.hpp"

namespace molspin {

/// Wigner 3-j symbol (j1 j2 j3; m1 m2 m3).
///
/// Evaluated with the Racah sum over exact integer factorial ratios, so the
/// result is exact up to one final floating conversion (no intermediate
/// overflow for j <= 20). Returns exactly 0 when the triangle rule or
/// m1+m2+m3 = 0 is violated. Throws std::domain_error for negative j or
/// |m| > j or when j+m is not an integer.
double wigner3j(HalfInt j1, HalfInt j2, HalfInt j3,
                HalfInt m1, HalfInt m2, HalfInt m3);

/// Clebsch-Gordan coefficient <j1 m1; j2 m2 | J M>.
double clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2,
                      HalfInt J, HalfInt M);

/// <N' M' | C^k_q | N M> for the Racah-normalized spherical harmonic
/// C^k_q = sqrt(4 pi / (2k+1)) Y_kq of the molecular axis direction.
double rotor_tensor_element(int Np, int Mp, int k, int q, int N, int M);

/// <j m' | T^1_q | j m> for the spherical components of an angular momentum
/// operator: T^1_0 = J_z, T^1_{+-1} = -+ (J_x +- i J_y)/sqrt(2).
/// Real in the standard phase convention.
double spin_vector_element(HalfInt j, HalfInt mp, int q, HalfInt m);

/// <j1 m1' j2 m2' | [A^(1) x B^(1)]^2_q | j1 m1 j2 m2> for two commuting
/// angular momenta A (acting on the j1 space) and B (on the j2 space),
/// coupled to a rank-2 tensor.
double coupled_rank2_element(HalfInt j1, HalfInt m1p, HalfInt m1,
                             HalfInt j2, HalfInt m2p, HalfInt m2, int q);

}  // namespace molspin
