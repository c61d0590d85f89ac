#pragma once

#include "molspin/spectrum.hpp"

#include <Eigen/Dense>

#include <array>
#include <string>

namespace molspin {

/// Two-level effective Hamiltonian in a fixed zeroth-order basis
/// {|up parent>, |down parent>}; v is real under the phase convention.
struct TwoLevelEffective {
    double e_up_MHz = 0.0;
    double e_down_MHz = 0.0;
    double v_MHz = 0.0;
    enum class Provenance { Analytic, Numeric } provenance = Provenance::Analytic;
    /// False when evaluated above beta_E = 0.3, outside the weak-field
    /// expansion the analytic matrix elements assume.
    bool weak_field_ok = true;
};

/// Exact 3x3 of a doublet molecule near the lowest opposite-parity level
/// crossing, in the basis {|0 0 1/2>, |1 0 1/2>, |1 1 -1/2>} with the
/// hyperfine structure treated as a spectator:
///   [ mu B          -E d/sqrt(3)   0            ]
///   [ -E d/sqrt(3)  2B_e + mu B    gamma/sqrt(2)]
///   [ 0             gamma/sqrt(2)  2B_e - mu B - gamma/2 ]
/// with mu = (g_S/2) mu_B. Throws std::invalid_argument for singlet species.
Eigen::Matrix3d alc_three_level(const MoleculeSpec& spec, const FieldPoint& point);

/// Weak-field 2x2 of the same crossing:
///   e_up = mu B - (Ed)^2/(6 B_e), e_down = 2B_e - mu B - gamma/2,
///   v = E d gamma / (2 sqrt(6) B_e).
TwoLevelEffective alc_effective_2x2(const MoleculeSpec& spec, const FieldPoint& point);

/// Closed-form crossing field: 2 mu B_c = 2 B_e - gamma/2 + (Ed)^2/(6 B_e).
/// Valid in the same weak-field regime as alc_effective_2x2. Gauss.
double crossing_field_analytic(const MoleculeSpec& spec, double E_kV_cm);

struct GapMinimum {
    double B_c_G = 0.0;
    double gap_MHz = 0.0;
};

/// Gap minimum between the two eigenstates adiabatically connected to the
/// given labels, located by golden-section search in B at fixed E.
/// Throws BracketingError when the minimum sits at a bracket edge.
GapMinimum crossing_field_numeric(const MoleculeSpec& spec, const BasisSet& basis,
                                  const StateLabel& a, const StateLabel& b,
                                  double E_kV_cm, double B_lo_G, double B_hi_G,
                                  const TermToggles& toggles = {},
                                  double tol_G = 1e-3);

/// The two encoded states written over two named zeroth-order states, with
/// their dipole matrix elements and energy gap.
struct EffectiveSpinHalf {
    Eigen::Vector2d up_composition{1.0, 0.0};
    Eigen::Vector2d down_composition{0.0, 1.0};
    std::array<std::string, 2> component_names{"", ""};
    DipoleTriple dipoles;
    double gap_MHz = 0.0;  // E_up - E_down (signed)
};

/// Eigenvectors of the 2x2 effective Hamiltonian, phase-fixed so the leading
/// amplitude of |up> is positive. gap = E_up - E_down with
/// |gap| >= 2|v|; dipoles are left zero (the 2x2 carries no dipole data).
EffectiveSpinHalf mixing_amplitudes(const TwoLevelEffective& model);

/// Microwave-dressed pair in the rotating frame (rotating-wave
/// approximation): E_+- = E_1M + Delta/2 +- sqrt(Omega^2 + Delta^2)/2.
struct DressedPair {
    double omega_MHz = 0.0;
    double delta_MHz = 0.0;
    double E_plus_MHz = 0.0;
    double E_minus_MHz = 0.0;
    double c0_plus = 0.0, c1_plus = 0.0;    // |+> over {|0~0,M>, |1~0,M>}
    double c0_minus = 0.0, c1_minus = 0.0;  // |->
};

DressedPair dressed_pair(double E_1M_MHz, double omega_MHz, double delta_MHz);

/// <-,M| H_eQ |bare> : electric-quadrupole coupling between the lower
/// mw-dressed state and a bare tracked state, in MHz. The dressed state is
/// c0_minus |0~0,M> + c1_minus |1~0,M> with the components taken from the
/// full tracked eigenvectors.
double quadrupole_coupling(const MoleculeSpec& spec, const SpectrumTrack& track,
                           const DressedPair& dressed,
                           const StateLabel& lower_bare, const StateLabel& upper_bare,
                           const StateLabel& partner_bare, std::size_t point_index);

/// Encoding from two tracked eigenstates. Compositions are the projections
/// onto the same labels' eigenvectors at the first sweep point (the
/// zeroth-order states), renormalized in that 2D subspace; dipoles are full
/// matrix elements between the tracked eigenvectors.
EffectiveSpinHalf build_alc_encoding(const MoleculeSpec& spec, const SpectrumTrack& track,
                                     const StateLabel& up, const StateLabel& down,
                                     std::size_t point_index);

/// Bare two-state encoding (no mixing): compositions are unit vectors.
EffectiveSpinHalf build_bare_encoding(const MoleculeSpec& spec, const SpectrumTrack& track,
                                      const StateLabel& up, const StateLabel& down,
                                      std::size_t point_index);

/// Mw-dressed encoding of |-,M> with a bare partner state, coupled by the
/// electric quadrupole interaction. The effective 2x2 has diagonal
/// {E(1~0,M) - Omega/2, E(partner)} (resonant drive) and off-diagonal
/// quadrupole_coupling(); dipoles are assembled from the underlying tracked
/// matrix elements.
EffectiveSpinHalf build_dressed_encoding(const MoleculeSpec& spec, const SpectrumTrack& track,
                                         const StateLabel& lower_bare,
                                         const StateLabel& upper_bare,
                                         const StateLabel& partner_bare,
                                         double omega_MHz, double delta_MHz,
                                         std::size_t point_index);

}  // namespace molspin
