#pragma once

#include "molspin/couplings.hpp"

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace molspin {

/// Dense many-body statevector on up to 16 spin-1/2 sites. Bit i of a basis
/// index is 1 when site i is up (S^z_i = +1/2); site order follows the
/// CouplingMap geometry.
class SpinState {
public:
    static constexpr int kMaxSites = 16;

    SpinState(int n_sites, Eigen::VectorXcd amplitudes);

    /// |+>^n : every site in (|up> + |down>)/sqrt(2).
    static SpinState plus_x(int n_sites);
    /// A single computational basis state.
    static SpinState basis_state(int n_sites, std::uint32_t bits);

    int n_sites() const { return n_sites_; }
    std::size_t dim() const { return amp_.size(); }
    const Eigen::VectorXcd& amplitudes() const { return amp_; }
    Eigen::VectorXcd& amplitudes() { return amp_; }

    double norm() const { return amp_.norm(); }

    /// <S^z_i>.
    double sz_expectation(int site) const;
    /// Total <S^z> and its variance.
    double total_sz() const;
    double total_sz_variance() const;
    /// Collective spin vector (<S^x>, <S^y>, <S^z>).
    Eigen::Vector3d collective_spin() const;

    /// Applies S_e = sum_i (e . sigma_i)/2 for a unit vector e.
    Eigen::VectorXcd apply_collective(const Eigen::Vector3d& e) const;

private:
    int n_sites_;
    Eigen::VectorXcd amp_;
};

/// Exact evolution under sum_{i<j} J^z_ij S^z_i S^z_j + sum_i h_i S^z_i
/// (diagonal phases). J and h are J/2pi in Hz; t in seconds.
SpinState evolve_ising(const CouplingMap& map, const SpinState& state, double t_s,
                       const std::vector<double>& site_fields_Hz = {});

/// Exact evolution under the XXZ Hamiltonian
///   sum_{i<j} [ (J^perp_ij/2)(S^+_i S^-_j + h.c.) + J^z_ij S^z_i S^z_j ]
///   + sum_i h_i S^z_i
/// by exponentiation within conserved total-S^z sectors (dense up to a
/// sector-size cap, Lanczos-Krylov stepping above it; norm drift is checked
/// to 1e-8).
SpinState evolve_xxz(const CouplingMap& map, const SpinState& state, double t_s,
                     const std::vector<double>& site_fields_Hz = {});

/// Cluster time pi / |J^z_nn| with J^z as an angular frequency, i.e.
/// 1 / (2 |J^z_nn[Hz]|). Throws std::domain_error when the nearest-neighbor
/// coupling vanishes (the Ising protocol is undefined there).
double cluster_time_s(const CouplingMap& map);

/// Cluster-state stabilizer <K>_j = 2^(n_nb+1) < S^x_j prod_nb S^z_k > with
/// neighbors from the lattice geometry; the prefactor adapts to the actual
/// neighbor count at open boundaries.
double stabilizer_expectation(const SpinState& state, const LatticeGeometry& geom,
                              int site);

/// e^{-Gamma_d t / 2} F : white-noise dephasing envelope applied to the
/// noiseless stabilizer value F.
double stabilizer_with_dephasing(double F_value, double gamma_d_Hz, double t_s);

struct SqueezingReport {
    double xi2 = 1.0;             // Wineland parameter
    double optimal_angle_rad = 0.0;
    double mean_spin = 0.0;       // |<S>|
};

/// Wineland parameter xi^2 = N min_phi var(S^perp_phi) / |<S>|^2 from the
/// 2x2 covariance of the collective spin components transverse to <S>.
/// Throws std::domain_error when |<S>| < 1e-6 N/2.
SqueezingReport squeezing_parameter(const SpinState& state);

/// One-axis-twisting squeezing under white dephasing:
///   xi^2 = (1 + 2 Gamma_d t0)/(N chi t0)^2 + (1/6) N^2 (chi t0)^4,
/// chi in rad/s, t0 in s, Gamma_d in 1/s.
double oat_squeezing_with_noise(int N, double chi_rad_s, double t0_s, double gamma_d_Hz);

/// Optimal squeezing times for dipolar (1/r^3) XXZ dynamics on a square
/// lattice, taken from truncated-Wigner fits: 4.69/J_perp at the XX point and
/// 10.5/J_perp at J_z/J_perp = 0.5, with J_perp an angular frequency.
double xx_point_optimal_time_s(double jperp_Hz);
double half_anisotropy_optimal_time_s(double jperp_Hz);

/// Global pi pulse about x (flips every spin): the ideal echo operation.
SpinState apply_global_x(const SpinState& state);

/// Collective rotation exp(-i angle n.S) applied site by site.
SpinState rotate_collective(const SpinState& state, const Eigen::Vector3d& axis,
                            double angle_rad);

/// Site-resolved z phases: amp[s] *= exp(-i sum_i phi_i sigma_i(s)/2).
SpinState apply_z_phases(const SpinState& state, const std::vector<double>& phi_rad);

}  // namespace molspin
