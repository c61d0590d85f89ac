#include "molspin/couplings.hpp"

#include "molspin/units.hpp"

#include <cmath>
#include <stdexcept>

namespace molspin {

SpinCouplingConstants coupling_constants(const DipoleTriple& d) {
    SpinCouplingConstants c;
    c.J_perp_D2 = 2.0 * d.d_cross * d.d_cross;
    c.J_z_D2 = (d.d_up - d.d_down) * (d.d_up - d.d_down);
    c.W_z_D2 = 0.5 * (d.d_up * d.d_up - d.d_down * d.d_down);
    c.V_D2 = 0.25 * (d.d_up + d.d_down) * (d.d_up + d.d_down);
    return c;
}

SpinCouplingConstants coupling_constants(const EffectiveSpinHalf& eff) {
    return coupling_constants(eff.dipoles);
}

LatticeGeometry LatticeGeometry::chain(int L, double a_nm, const Eigen::Vector3d& field) {
    LatticeGeometry g;
    g.kind = LatticeKind::Chain1D;
    g.L = L;
    g.a_nm = a_nm;
    g.field_orientation = field.normalized();
    g.validate();
    return g;
}

LatticeGeometry LatticeGeometry::square(int L, double a_nm, const Eigen::Vector3d& field) {
    LatticeGeometry g;
    g.kind = LatticeKind::Square2D;
    g.L = L;
    g.a_nm = a_nm;
    g.field_orientation = field.normalized();
    g.validate();
    return g;
}

void LatticeGeometry::validate() const {
    if (L < 2) throw std::invalid_argument("lattice: L must be >= 2");
    if (a_nm <= 0.0) throw std::invalid_argument("lattice: spacing must be > 0");
    if (field_orientation.norm() < 1e-12)
        throw std::invalid_argument("lattice: field orientation must be a nonzero vector");
}

std::pair<double, double> LatticeGeometry::site_offset(int i) const {
    if (kind == LatticeKind::Chain1D) {
        return {i - 0.5 * (L - 1), 0.0};
    }
    const int ix = i % L;
    const int iy = i / L;
    return {ix - 0.5 * (L - 1), iy - 0.5 * (L - 1)};
}

Eigen::Vector3d LatticeGeometry::site_position_nm(int i) const {
    auto [x, y] = site_offset(i);
    return {a_nm * x, a_nm * y, 0.0};
}

std::vector<int> LatticeGeometry::nearest_neighbors(int i) const {
    std::vector<int> out;
    if (kind == LatticeKind::Chain1D) {
        if (i > 0) out.push_back(i - 1);
        if (i + 1 < L) out.push_back(i + 1);
    } else {
        const int ix = i % L;
        const int iy = i / L;
        if (ix > 0) out.push_back(i - 1);
        if (ix + 1 < L) out.push_back(i + 1);
        if (iy > 0) out.push_back(i - L);
        if (iy + 1 < L) out.push_back(i + L);
    }
    return out;
}

double geometric_factor(const Eigen::Vector3d& r_nm,
                        const Eigen::Vector3d& field_orientation) {
    const double r = r_nm.norm();
    if (r <= 0.0) throw std::domain_error("geometric_factor: zero separation");
    const double cos_theta = r_nm.dot(field_orientation.normalized()) / r;
    return (1.0 - 3.0 * cos_theta * cos_theta) / (r * r * r);
}

CouplingMap coupling_map(const LatticeGeometry& geom, const SpinCouplingConstants& consts,
                         std::optional<double> cutoff_nm) {
    geom.validate();
    const int n = geom.n_sites();
    CouplingMap map;
    map.geometry = geom;
    map.Jz_Hz = Eigen::MatrixXd::Zero(n, n);
    map.Jperp_Hz = Eigen::MatrixXd::Zero(n, n);

    double min_dist = -1.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Eigen::Vector3d r = geom.site_position_nm(j) - geom.site_position_nm(i);
            const double dist = r.norm();
            if (cutoff_nm && dist > *cutoff_nm) continue;
            const double geo = geometric_factor(r, geom.field_orientation);
            PairCoupling pc;
            pc.i = i;
            pc.j = j;
            pc.Jz_Hz = units::kDipolarHzDebye2nm3 * consts.J_z_D2 * geo;
            pc.Jperp_Hz = units::kDipolarHzDebye2nm3 * consts.J_perp_D2 * geo;
            map.pairs.push_back(pc);
            map.Jz_Hz(i, j) = map.Jz_Hz(j, i) = pc.Jz_Hz;
            map.Jperp_Hz(i, j) = map.Jperp_Hz(j, i) = pc.Jperp_Hz;
            if (min_dist < 0.0 || dist < min_dist * (1.0 - 1e-9)) {
                min_dist = dist;
                map.Jz_nn_Hz = pc.Jz_Hz;
                map.Jperp_nn_Hz = pc.Jperp_Hz;
            }
        }
    }
    return map;
}

std::pair<double, double> mean_couplings(const CouplingMap& map) {
    const double n = map.n_sites();
    double jz = 0.0, jp = 0.0;
    for (const auto& pc : map.pairs) {
        jz += 2.0 * pc.Jz_Hz;  // both (i,j) and (j,i)
        jp += 2.0 * pc.Jperp_Hz;
    }
    return {jz / (n * n), jp / (n * n)};
}

}  // namespace molspin
