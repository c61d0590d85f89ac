#pragma once

#include "molspin/effective.hpp"

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace molspin {

/// Spin coupling constants of the effective two-state encoding, in Debye^2:
///   J_perp = 2 d_cross^2,            J_z = (d_up - d_down)^2,
///   W_z    = (d_up^2 - d_down^2)/2,  V   = (d_up + d_down)^2/4.
/// W_z and V are constant offsets at unit filling and are excluded from
/// many-body evolution by default.
struct SpinCouplingConstants {
    double J_perp_D2 = 0.0;
    double J_z_D2 = 0.0;
    double W_z_D2 = 0.0;
    double V_D2 = 0.0;
};

SpinCouplingConstants coupling_constants(const DipoleTriple& d);
SpinCouplingConstants coupling_constants(const EffectiveSpinHalf& eff);

enum class LatticeKind { Chain1D, Square2D };

/// Unit-filled lattice of pinned molecules. Chains run along x, planes span
/// xy; the common E/B axis defaults to z (perpendicular to the lattice, the
/// uniform-sign configuration).
struct LatticeGeometry {
    LatticeKind kind = LatticeKind::Square2D;
    int L = 2;             // linear size
    double a_nm = 500.0;   // lattice spacing
    Eigen::Vector3d field_orientation{0.0, 0.0, 1.0};

    static LatticeGeometry chain(int L, double a_nm,
                                 const Eigen::Vector3d& field = {0.0, 0.0, 1.0});
    static LatticeGeometry square(int L, double a_nm,
                                  const Eigen::Vector3d& field = {0.0, 0.0, 1.0});

    int n_sites() const { return kind == LatticeKind::Chain1D ? L : L * L; }
    Eigen::Vector3d site_position_nm(int i) const;
    /// Centered integer (or half-integer) offsets of site i from the trap
    /// center, (i, 0) for chains.
    std::pair<double, double> site_offset(int i) const;
    std::vector<int> nearest_neighbors(int i) const;

    void validate() const;
};

/// (1 - 3 cos^2 theta)/|R|^3 with theta measured from the field axis, nm^-3.
/// Throws std::domain_error at zero separation.
double geometric_factor(const Eigen::Vector3d& r_nm,
                        const Eigen::Vector3d& field_orientation);

struct PairCoupling {
    int i = 0, j = 0;            // i < j
    double Jz_Hz = 0.0;          // J/2pi, ordinary frequency
    double Jperp_Hz = 0.0;
};

/// Pairwise J^z_ij, J^perp_ij on a lattice, stored as J/2pi in Hz.
struct CouplingMap {
    LatticeGeometry geometry;
    std::vector<PairCoupling> pairs;
    Eigen::MatrixXd Jz_Hz;      // symmetric, zero diagonal
    Eigen::MatrixXd Jperp_Hz;
    double Jz_nn_Hz = 0.0;      // nearest-neighbor class values (signed)
    double Jperp_nn_Hz = 0.0;

    int n_sites() const { return geometry.n_sites(); }
};

/// All pairs within the cutoff (default: every pair). Constants in Debye^2
/// are converted to Hz through the single dipolar conversion in units.hpp.
CouplingMap coupling_map(const LatticeGeometry& geom, const SpinCouplingConstants& consts,
                         std::optional<double> cutoff_nm = std::nullopt);

/// Average couplings (1/N^2) sum_{i != j} J_ij, in Hz: (Jz_bar, Jperp_bar).
std::pair<double, double> mean_couplings(const CouplingMap& map);

}  // namespace molspin
