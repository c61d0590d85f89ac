#include "molspin/hamiltonian.hpp"

#include "molspin/units.hpp"
#include "molspin/wigner.hpp"

#include <cmath>
#include <stdexcept>

namespace molspin {

namespace {

constexpr double kSqrt6 = 2.44948974968169;

/// sum_q (-1)^q <a'|A^1_q|a> <b'|B^1_-q|b> -- the scalar product A.B of two
/// commuting angular momenta.
double dot_element(HalfInt ja, HalfInt map, HalfInt ma,
                   HalfInt jb, HalfInt mbp, HalfInt mb) {
    double total = 0.0;
    for (int q = -1; q <= 1; ++q) {
        const double sign = (q % 2 == 0) ? 1.0 : -1.0;
        const double ea = spin_vector_element(ja, map, q, ma);
        if (ea == 0.0) continue;
        total += sign * ea * spin_vector_element(jb, mbp, -q, mb);
    }
    return total;
}

/// <I m'|Q^2_q|I m> of the nuclear quadrupole tensor, normalized so the
/// stretched diagonal element <I I|Q^2_0|I I> is 1. Zero for I < 1.
double quadrupole_tensor_element(HalfInt I, HalfInt mp, int q, HalfInt m) {
    if (I.twice() < 2) return 0.0;
    const double stretched = wigner3j(I, HalfInt(2), I, -I, HalfInt(0), I);
    const double w = wigner3j(I, HalfInt(2), I, -mp, HalfInt(q), m);
    if (w == 0.0) return 0.0;
    const int phase = (I - mp).twice() / 2;
    return ((phase % 2 == 0) ? 1.0 : -1.0) * w / stretched;
}

bool spins_equal_except(const BasisKet& a, const BasisKet& b, int skip_nucleus) {
    if (a.M_S != b.M_S) return false;
    for (std::size_t v = 0; v < a.M_I.size(); ++v)
        if (static_cast<int>(v) != skip_nucleus && a.M_I[v] != b.M_I[v]) return false;
    return true;
}

}  // namespace

Eigen::MatrixXd assemble_hamiltonian(const MoleculeSpec& spec,
                                     const FieldPoint& point,
                                     const BasisSet& basis,
                                     const TermToggles& tog) {
    spec.validate();
    const int n = static_cast<int>(basis.size());
    if (n == 0) throw std::invalid_argument("assemble_hamiltonian: empty basis");
    for (const auto& ket : basis.kets) {
        if (ket.M_I.size() != spec.nuclei.size() ||
            ket.M_S.has_value() != spec.has_electron_spin())
            throw std::invalid_argument(
                "assemble_hamiltonian: basis was built for a different species");
    }

    const double stark = units::kStarkMHzPerDebyeKVcm * point.E_kV_cm * spec.d_debye;
    const double muN_B = units::kNuclearMagnetonMHzPerG * point.B_G;
    const double muB_B = units::kBohrMagnetonMHzPerG * point.B_G;

    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(n, n);

    for (int i = 0; i < n; ++i) {
        const BasisKet& bra = basis[i];
        for (int j = 0; j <= i; ++j) {
            const BasisKet& ket = basis[j];
            double h = 0.0;

            if (i == j) {
                if (tog.rotation) h += spec.B_e_MHz * ket.N * (ket.N + 1);
                if (tog.zeeman) {
                    if (spec.kind == SpeciesKind::Sigma1) {
                        h += -spec.g_r * muN_B * ket.M_N;
                        for (std::size_t v = 0; v < spec.nuclei.size(); ++v)
                            h += -spec.nuclei[v].g * (1.0 - spec.nuclei[v].sigma) *
                                 muN_B * ket.M_I[v].value();
                    } else {
                        // Sign reproduces the rising N=0, M_S=+1/2 branch;
                        // nuclear and rotational Zeeman omitted for doublets.
                        h += spec.g_S * muB_B * ket.M_S->value();
                    }
                }
            }

            if (tog.stark && stark != 0.0)
                h += -stark * tensor_element(bra, 1, 0, ket);

            if (spec.kind == SpeciesKind::Sigma1) {
                if (tog.quadrupole) {
                    for (std::size_t v = 0; v < spec.nuclei.size(); ++v) {
                        const auto& nuc = spec.nuclei[v];
                        if (nuc.eQq_MHz == 0.0 || nuc.I.twice() < 2) continue;
                        if (!spins_equal_except(bra, ket, static_cast<int>(v))) continue;
                        double term = 0.0;
                        for (int q = -2; q <= 2; ++q) {
                            const double rot = rotor_tensor_element(
                                bra.N, bra.M_N, 2, -q, ket.N, ket.M_N);
                            if (rot == 0.0) continue;
                            const double sign = (q % 2 == 0) ? 1.0 : -1.0;
                            term += sign * rot *
                                    quadrupole_tensor_element(nuc.I, bra.M_I[v], q, ket.M_I[v]);
                        }
                        h += 0.25 * nuc.eQq_MHz * term;
                    }
                }
                if (tog.nuclear_spin_rotation && bra.N == ket.N) {
                    for (std::size_t v = 0; v < spec.nuclei.size(); ++v) {
                        const auto& nuc = spec.nuclei[v];
                        if (nuc.c_sr_Hz == 0.0) continue;
                        if (!spins_equal_except(bra, ket, static_cast<int>(v))) continue;
                        h += nuc.c_sr_Hz * 1e-6 *
                             dot_element(HalfInt(ket.N), HalfInt(bra.M_N), HalfInt(ket.M_N),
                                         nuc.I, bra.M_I[v], ket.M_I[v]);
                    }
                }
                if (spec.nuclei.size() == 2 && bra.N == ket.N && bra.M_N == ket.M_N &&
                    bra.M_S == ket.M_S) {
                    if (tog.scalar_spin_spin && spec.c4_Hz != 0.0) {
                        h += spec.c4_Hz * 1e-6 *
                             dot_element(spec.nuclei[0].I, bra.M_I[0], ket.M_I[0],
                                         spec.nuclei[1].I, bra.M_I[1], ket.M_I[1]);
                    }
                }
                if (tog.tensor_spin_spin && spec.nuclei.size() == 2 &&
                    spec.c3_Hz != 0.0 && bra.M_S == ket.M_S) {
                    double term = 0.0;
                    for (int q = -2; q <= 2; ++q) {
                        const double rot = rotor_tensor_element(
                            bra.N, bra.M_N, 2, -q, ket.N, ket.M_N);
                        if (rot == 0.0) continue;
                        const double sign = (q % 2 == 0) ? 1.0 : -1.0;
                        term += sign * rot *
                                coupled_rank2_element(spec.nuclei[0].I, bra.M_I[0], ket.M_I[0],
                                                      spec.nuclei[1].I, bra.M_I[1], ket.M_I[1], q);
                    }
                    h += -spec.c3_Hz * 1e-6 * kSqrt6 * term;
                }
            } else {
                if (tog.spin_rotation && spec.gamma_MHz != 0.0 &&
                    bra.N == ket.N && bra.M_I == ket.M_I) {
                    h += spec.gamma_MHz *
                         dot_element(HalfInt(ket.N), HalfInt(bra.M_N), HalfInt(ket.M_N),
                                     half(), *bra.M_S, *ket.M_S);
                }
                if (tog.hyperfine && !spec.nuclei.empty()) {
                    const HalfInt I = spec.nuclei[0].I;
                    if ((spec.b_MHz != 0.0 || spec.c_MHz != 0.0) &&
                        bra.N == ket.N && bra.M_N == ket.M_N) {
                        h += (spec.b_MHz + spec.c_MHz / 3.0) *
                             dot_element(I, bra.M_I[0], ket.M_I[0],
                                         half(), *bra.M_S, *ket.M_S);
                    }
                    if (spec.c_MHz != 0.0) {
                        double term = 0.0;
                        for (int q = -2; q <= 2; ++q) {
                            const double rot = rotor_tensor_element(
                                bra.N, bra.M_N, 2, -q, ket.N, ket.M_N);
                            if (rot == 0.0) continue;
                            const double sign = (q % 2 == 0) ? 1.0 : -1.0;
                            term += sign * rot *
                                    coupled_rank2_element(I, bra.M_I[0], ket.M_I[0],
                                                          half(), *bra.M_S, *ket.M_S, q);
                        }
                        h += spec.c_MHz * kSqrt6 / 3.0 * term;
                    }
                }
            }

            H(i, j) = h;
            H(j, i) = h;
        }
    }
    return H;
}

Eigen::MatrixXd dipole_operator_matrix(const MoleculeSpec& spec,
                                       const BasisSet& basis, int q) {
    const int n = static_cast<int>(basis.size());
    Eigen::MatrixXd D = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            D(i, j) = spec.d_debye * tensor_element(basis[i], 1, q, basis[j]);
    return D;
}

Eigen::MatrixXd quadrupole_operator_matrix(const MoleculeSpec& spec,
                                           const BasisSet& basis) {
    TermToggles only_quad = TermToggles::none();
    only_quad.quadrupole = true;
    return assemble_hamiltonian(spec, FieldPoint{}, basis, only_quad);
}

}  // namespace molspin
