#pragma once

#include "molspin/hamiltonian.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace molspin {

/// Adiabatic label of a field-dressed eigenstate: named by the zero-field
/// (or sweep-start) rotational state N~ it connects to, plus the conserved
/// spin projections. Rendered as "|0~0;-4;1/2>" (KRb style, nuclear
/// projections) or "|1~1;-1/2;-1/2>" (doublets: M_S then M_I).
struct StateLabel {
    int N_tilde = 0;
    int M_N = 0;
    std::optional<HalfInt> M_S;
    std::vector<HalfInt> M_I;

    bool operator==(const StateLabel&) const = default;

    std::string str() const;

    /// The basis ket this label names at zeroth order (N = N~).
    BasisKet dominant_ket() const;
};

/// Parses the str() format, with or without the surrounding "|...>".
StateLabel parse_state_label(const std::string& text, const MoleculeSpec& spec);

struct TrackedState {
    StateLabel label;
    std::vector<double> energy_MHz;           // one per sweep point
    std::vector<Eigen::VectorXd> eigenvector; // one per sweep point, unit norm
};

/// Eigenvalues and eigenvectors labeled adiabatically along a field sweep.
struct SpectrumTrack {
    std::vector<FieldPoint> sweep;
    BasisSet basis;
    std::vector<TrackedState> states;
    /// Diagnostics: smallest |overlap| used in the continuation at each step
    /// (size sweep.size()-1).
    std::vector<double> min_step_overlap;

    const TrackedState& state(const StateLabel& label) const;  // LookupError
    std::size_t n_points() const { return sweep.size(); }
};

struct TrackOptions {
    double overlap_threshold = 0.5;
    int threads = 1;
    TermToggles toggles{};
};

/// Diagonalizes the Hamiltonian at every sweep point and follows the seeded
/// states by maximal eigenvector overlap. Eigenvector phases follow the
/// convention: largest-magnitude amplitude positive at the first point, then
/// sign continuity along the sweep. States in different M_F blocks cross
/// diabatically (their overlap is exactly zero). Throws TrackingError when
/// the best available overlap falls below the threshold.
SpectrumTrack sweep_and_track(const MoleculeSpec& spec, const BasisSet& basis,
                              const std::vector<FieldPoint>& sweep,
                              const std::vector<StateLabel>& seeds,
                              const TrackOptions& options = {});

/// The three dipole matrix elements of an effective two-state encoding,
/// in Debye. Real under the track phase convention.
struct DipoleTriple {
    double d_up = 0.0;
    double d_down = 0.0;
    double d_cross = 0.0;
};

/// <a| d C^1_q |b> between two tracked states at one sweep point, in Debye.
double dipole_element(const MoleculeSpec& spec, const SpectrumTrack& track,
                      const StateLabel& a, const StateLabel& b,
                      std::size_t point_index, int q = 0);

/// d_up / d_down / d_cross of the (up, down) encoding at one sweep point.
DipoleTriple dipole_triple(const MoleculeSpec& spec, const SpectrumTrack& track,
                           const StateLabel& up, const StateLabel& down,
                           std::size_t point_index, int q = 0);

/// (E_main_upper - E_main_lower) - (E_comp_upper - E_comp_lower), MHz.
double differential_stark_shift(const SpectrumTrack& track,
                                const StateLabel& main_upper, const StateLabel& main_lower,
                                const StateLabel& comp_upper, const StateLabel& comp_lower,
                                std::size_t point_index);

/// Evenly spaced field sweep in B at fixed E (n >= 1 points).
std::vector<FieldPoint> b_sweep(double E_kV_cm, double B_lo_G, double B_hi_G, int n);
/// Evenly spaced field sweep in E at fixed B.
std::vector<FieldPoint> e_sweep(double B_G, double E_lo_kV_cm, double E_hi_kV_cm, int n);

}  // namespace molspin
