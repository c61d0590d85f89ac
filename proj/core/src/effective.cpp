#include "molspin/effective.hpp"

#include "molspin/errors.hpp"
#include "molspin/units.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace molspin {

namespace {

constexpr double kSqrt2 = 1.41421356237309505;
constexpr double kSqrt3 = 1.73205080756887729;
constexpr double kSqrt6 = 2.44948974968169;

double effective_mu_MHz_per_G(const MoleculeSpec& spec) {
    return 0.5 * spec.g_S * units::kBohrMagnetonMHzPerG;
}

void require_doublet(const MoleculeSpec& spec, const char* who) {
    if (spec.kind != SpeciesKind::Sigma2)
        throw std::invalid_argument(std::string(who) + ": requires a 2-Sigma species");
}

}  // namespace

Eigen::Matrix3d alc_three_level(const MoleculeSpec& spec, const FieldPoint& point) {
    require_doublet(spec, "alc_three_level");
    const double muB = effective_mu_MHz_per_G(spec) * point.B_G;
    const double Ed = units::kStarkMHzPerDebyeKVcm * point.E_kV_cm * spec.d_debye;
    const double Be = spec.B_e_MHz;
    const double g = spec.gamma_MHz;
    Eigen::Matrix3d H;
    H << muB, -Ed / kSqrt3, 0.0,
        -Ed / kSqrt3, 2.0 * Be + muB, g / kSqrt2,
        0.0, g / kSqrt2, 2.0 * Be - muB - 0.5 * g;
    return H;
}

TwoLevelEffective alc_effective_2x2(const MoleculeSpec& spec, const FieldPoint& point) {
    require_doublet(spec, "alc_effective_2x2");
    const double muB = effective_mu_MHz_per_G(spec) * point.B_G;
    const double Ed = units::kStarkMHzPerDebyeKVcm * point.E_kV_cm * spec.d_debye;
    const double Be = spec.B_e_MHz;
    TwoLevelEffective eff;
    eff.e_up_MHz = muB - Ed * Ed / (6.0 * Be);
    eff.e_down_MHz = 2.0 * Be - muB - 0.5 * spec.gamma_MHz;
    eff.v_MHz = Ed * spec.gamma_MHz / (2.0 * kSqrt6 * Be);
    eff.provenance = TwoLevelEffective::Provenance::Analytic;
    eff.weak_field_ok = std::abs(Ed / Be) <= 0.3;
    return eff;
}

double crossing_field_analytic(const MoleculeSpec& spec, double E_kV_cm) {
    require_doublet(spec, "crossing_field_analytic");
    const double Ed = units::kStarkMHzPerDebyeKVcm * E_kV_cm * spec.d_debye;
    const double rhs = 2.0 * spec.B_e_MHz - 0.5 * spec.gamma_MHz +
                       Ed * Ed / (6.0 * spec.B_e_MHz);
    return rhs / (2.0 * effective_mu_MHz_per_G(spec));
}

namespace {

/// Gap between the two eigenstates with the largest projection onto the
/// subspace spanned by two reference vectors.
double subspace_gap(const MoleculeSpec& spec, const BasisSet& basis,
                    const TermToggles& toggles, double E_kV_cm, double B_G,
                    const Eigen::VectorXd& ref_a, const Eigen::VectorXd& ref_b) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        assemble_hamiltonian(spec, {E_kV_cm, B_G}, basis, toggles));
    const auto& vecs = solver.eigenvectors();
    const int dim = static_cast<int>(basis.size());
    int best1 = -1, best2 = -1;
    double w1 = -1.0, w2 = -1.0;
    for (int k = 0; k < dim; ++k) {
        const double pa = ref_a.dot(vecs.col(k));
        const double pb = ref_b.dot(vecs.col(k));
        const double w = pa * pa + pb * pb;
        if (w > w1) {
            w2 = w1;
            best2 = best1;
            w1 = w;
            best1 = k;
        } else if (w > w2) {
            w2 = w;
            best2 = k;
        }
    }
    return std::abs(solver.eigenvalues()[best1] - solver.eigenvalues()[best2]);
}

}  // namespace

GapMinimum crossing_field_numeric(const MoleculeSpec& spec, const BasisSet& basis,
                                  const StateLabel& a, const StateLabel& b,
                                  double E_kV_cm, double B_lo_G, double B_hi_G,
                                  const TermToggles& toggles, double tol_G) {
    if (B_hi_G <= B_lo_G)
        throw std::invalid_argument("crossing_field_numeric: empty bracket");

    // Reference vectors from the bracket start identify the pair at any B.
    TrackOptions topt;
    topt.toggles = toggles;
    const auto track = sweep_and_track(spec, basis, {{E_kV_cm, B_lo_G}}, {a, b}, topt);
    const Eigen::VectorXd ref_a = track.state(a).eigenvector[0];
    const Eigen::VectorXd ref_b = track.state(b).eigenvector[0];

    auto gap = [&](double B) {
        return subspace_gap(spec, basis, toggles, E_kV_cm, B, ref_a, ref_b);
    };

    // Golden-section minimization.
    const double invphi = 0.6180339887498949;
    double lo = B_lo_G, hi = B_hi_G;
    double x1 = hi - invphi * (hi - lo);
    double x2 = lo + invphi * (hi - lo);
    double f1 = gap(x1), f2 = gap(x2);
    while (hi - lo > tol_G) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - invphi * (hi - lo);
            f1 = gap(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + invphi * (hi - lo);
            f2 = gap(x2);
        }
    }
    const double B_c = 0.5 * (lo + hi);
    const double g_c = gap(B_c);

    // An interior minimum must beat both bracket edges.
    if (g_c >= gap(B_lo_G) || g_c >= gap(B_hi_G)) {
        std::ostringstream os;
        os << "crossing_field_numeric: no interior gap minimum for " << a.str()
           << " / " << b.str() << " in B = [" << B_lo_G << ", " << B_hi_G
           << "] G at E = " << E_kV_cm << " kV/cm";
        throw BracketingError(os.str());
    }
    return {B_c, g_c};
}

EffectiveSpinHalf mixing_amplitudes(const TwoLevelEffective& model) {
    Eigen::Matrix2d H;
    H << model.e_up_MHz, model.v_MHz, model.v_MHz, model.e_down_MHz;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> solver(H);
    // eigenvalues ascend: column 1 is the upper state
    Eigen::Vector2d up = solver.eigenvectors().col(1);
    Eigen::Vector2d down = solver.eigenvectors().col(0);
    if (up[0] < 0.0) up = -up;
    if (down[1] < 0.0) down = -down;
    EffectiveSpinHalf eff;
    eff.up_composition = up;
    eff.down_composition = down;
    eff.gap_MHz = solver.eigenvalues()[1] - solver.eigenvalues()[0];
    return eff;
}

DressedPair dressed_pair(double E_1M_MHz, double omega_MHz, double delta_MHz) {
    if (omega_MHz <= 0.0) throw std::invalid_argument("dressed_pair: Omega must be > 0");
    DressedPair d;
    d.omega_MHz = omega_MHz;
    d.delta_MHz = delta_MHz;
    const double r = 0.5 * std::sqrt(omega_MHz * omega_MHz + delta_MHz * delta_MHz);
    d.E_plus_MHz = E_1M_MHz + 0.5 * delta_MHz + r;
    d.E_minus_MHz = E_1M_MHz + 0.5 * delta_MHz - r;
    // 2x2 in {|0~0,M>, |1~0,M>}: [[Delta, Omega/2], [Omega/2, 0]] + E_1M
    Eigen::Matrix2d H;
    H << delta_MHz, 0.5 * omega_MHz, 0.5 * omega_MHz, 0.0;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> solver(H);
    Eigen::Vector2d minus = solver.eigenvectors().col(0);
    Eigen::Vector2d plus = solver.eigenvectors().col(1);
    if (plus[0] < 0.0) plus = -plus;
    if (minus[1] < 0.0) minus = -minus;
    d.c0_plus = plus[0];
    d.c1_plus = plus[1];
    d.c0_minus = minus[0];
    d.c1_minus = minus[1];
    return d;
}

double quadrupole_coupling(const MoleculeSpec& spec, const SpectrumTrack& track,
                           const DressedPair& dressed,
                           const StateLabel& lower_bare, const StateLabel& upper_bare,
                           const StateLabel& partner_bare, std::size_t point_index) {
    if (spec.kind != SpeciesKind::Sigma1)
        throw std::invalid_argument("quadrupole_coupling: requires a 1-Sigma species");
    if (point_index >= track.n_points())
        throw std::out_of_range("quadrupole_coupling: point index out of range");
    const Eigen::MatrixXd Q = quadrupole_operator_matrix(spec, track.basis);
    const auto& v0 = track.state(lower_bare).eigenvector[point_index];
    const auto& v1 = track.state(upper_bare).eigenvector[point_index];
    const auto& vp = track.state(partner_bare).eigenvector[point_index];
    return dressed.c0_minus * v0.dot(Q * vp) + dressed.c1_minus * v1.dot(Q * vp);
}

EffectiveSpinHalf build_alc_encoding(const MoleculeSpec& spec, const SpectrumTrack& track,
                                     const StateLabel& up, const StateLabel& down,
                                     std::size_t point_index) {
    const auto& su = track.state(up);
    const auto& sd = track.state(down);
    if (point_index >= track.n_points())
        throw std::out_of_range("build_alc_encoding: point index out of range");

    const Eigen::VectorXd& ref_up = su.eigenvector.front();
    const Eigen::VectorXd& ref_down = sd.eigenvector.front();

    EffectiveSpinHalf eff;
    eff.component_names = {up.str(), down.str()};
    eff.up_composition = {ref_up.dot(su.eigenvector[point_index]),
                          ref_down.dot(su.eigenvector[point_index])};
    eff.down_composition = {ref_up.dot(sd.eigenvector[point_index]),
                            ref_down.dot(sd.eigenvector[point_index])};
    eff.up_composition.normalize();
    eff.down_composition.normalize();
    eff.dipoles = dipole_triple(spec, track, up, down, point_index);
    eff.gap_MHz = su.energy_MHz[point_index] - sd.energy_MHz[point_index];
    return eff;
}

EffectiveSpinHalf build_bare_encoding(const MoleculeSpec& spec, const SpectrumTrack& track,
                                      const StateLabel& up, const StateLabel& down,
                                      std::size_t point_index) {
    EffectiveSpinHalf eff;
    eff.component_names = {up.str(), down.str()};
    eff.up_composition = {1.0, 0.0};
    eff.down_composition = {0.0, 1.0};
    eff.dipoles = dipole_triple(spec, track, up, down, point_index);
    eff.gap_MHz = track.state(up).energy_MHz[point_index] -
                  track.state(down).energy_MHz[point_index];
    return eff;
}

EffectiveSpinHalf build_dressed_encoding(const MoleculeSpec& spec, const SpectrumTrack& track,
                                         const StateLabel& lower_bare,
                                         const StateLabel& upper_bare,
                                         const StateLabel& partner_bare,
                                         double omega_MHz, double delta_MHz,
                                         std::size_t point_index) {
    const double E_1M = track.state(upper_bare).energy_MHz[point_index];
    const DressedPair dp = dressed_pair(E_1M, omega_MHz, delta_MHz);
    const double V = quadrupole_coupling(spec, track, dp, lower_bare, upper_bare,
                                         partner_bare, point_index);

    TwoLevelEffective two;
    two.e_up_MHz = dp.E_minus_MHz;
    two.e_down_MHz = track.state(partner_bare).energy_MHz[point_index];
    two.v_MHz = V;
    two.provenance = TwoLevelEffective::Provenance::Numeric;
    EffectiveSpinHalf eff = mixing_amplitudes(two);
    eff.component_names = {"|-,M>", partner_bare.str()};

    // Dipole matrix in the {|-,M>, |partner>} basis from the tracked elements.
    const double d00 = dipole_element(spec, track, lower_bare, lower_bare, point_index);
    const double d11 = dipole_element(spec, track, upper_bare, upper_bare, point_index);
    const double d01 = dipole_element(spec, track, lower_bare, upper_bare, point_index);
    const double dpp = dipole_element(spec, track, partner_bare, partner_bare, point_index);
    const double d0p = dipole_element(spec, track, lower_bare, partner_bare, point_index);
    const double d1p = dipole_element(spec, track, upper_bare, partner_bare, point_index);

    Eigen::Matrix2d D;
    const double c0 = dp.c0_minus, c1 = dp.c1_minus;
    D(0, 0) = c0 * c0 * d00 + c1 * c1 * d11 + 2.0 * c0 * c1 * d01;
    D(1, 1) = dpp;
    D(0, 1) = D(1, 0) = c0 * d0p + c1 * d1p;

    const Eigen::Vector2d wu = eff.up_composition;
    const Eigen::Vector2d wd = eff.down_composition;
    eff.dipoles.d_up = wu.dot(D * wu);
    eff.dipoles.d_down = wd.dot(D * wd);
    eff.dipoles.d_cross = wu.dot(D * wd);
    return eff;
}

}  // namespace molspin
