#include "molspin/spectrum.hpp"

#include "molspin/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>

namespace molspin {

std::string StateLabel::str() const {
    std::ostringstream os;
    os << "|" << N_tilde << "~" << M_N;
    if (M_S) os << ";" << M_S->str();
    for (const auto& mi : M_I) os << ";" << mi.str();
    os << ">";
    return os.str();
}

BasisKet StateLabel::dominant_ket() const {
    BasisKet ket;
    ket.N = N_tilde;
    ket.M_N = M_N;
    ket.M_S = M_S;
    ket.M_I = M_I;
    return ket;
}

StateLabel parse_state_label(const std::string& text, const MoleculeSpec& spec) {
    std::string s = text;
    if (!s.empty() && s.front() == '|') s.erase(0, 1);
    if (!s.empty() && s.back() == '>') s.pop_back();

    auto tilde = s.find('~');
    if (tilde == std::string::npos)
        throw std::invalid_argument("state label '" + text + "': expected 'N~M_N;...'");
    StateLabel label;
    label.N_tilde = std::stoi(s.substr(0, tilde));
    s.erase(0, tilde + 1);

    std::vector<std::string> parts;
    std::istringstream iss(s);
    std::string tok;
    while (std::getline(iss, tok, ';')) parts.push_back(tok);

    const std::size_t expected = 1 + (spec.has_electron_spin() ? 1 : 0) + spec.nuclei.size();
    if (parts.size() != expected)
        throw std::invalid_argument("state label '" + text + "': expected " +
                                    std::to_string(expected) + " projections");
    label.M_N = std::stoi(parts[0]);
    std::size_t k = 1;
    if (spec.has_electron_spin()) label.M_S = parse_half_int(parts[k++]);
    for (; k < parts.size(); ++k) label.M_I.push_back(parse_half_int(parts[k]));
    return label;
}

const TrackedState& SpectrumTrack::state(const StateLabel& label) const {
    for (const auto& st : states)
        if (st.label == label) return st;
    throw LookupError("no tracked state labeled " + label.str());
}

namespace {

/// Largest-magnitude amplitude made positive.
void canonical_phase(Eigen::VectorXd& v) {
    int imax = 0;
    v.cwiseAbs().maxCoeff(&imax);
    if (v[imax] < 0.0) v = -v;
}

struct PointEig {
    Eigen::VectorXd evals;
    Eigen::MatrixXd evecs;
};

}  // namespace

SpectrumTrack sweep_and_track(const MoleculeSpec& spec, const BasisSet& basis,
                              const std::vector<FieldPoint>& sweep,
                              const std::vector<StateLabel>& seeds,
                              const TrackOptions& options) {
    if (sweep.empty()) throw std::invalid_argument("sweep_and_track: empty sweep");
    if (seeds.empty()) throw std::invalid_argument("sweep_and_track: no seed labels");

    const int n_points = static_cast<int>(sweep.size());
    std::vector<PointEig> eig(n_points);

    // Diagonalization at distinct field points is independent.
    const int n_threads = std::max(1, std::min<int>(options.threads, n_points));
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int p = next.fetch_add(1); p < n_points; p = next.fetch_add(1)) {
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
                assemble_hamiltonian(spec, sweep[p], basis, options.toggles));
            eig[p].evals = solver.eigenvalues();
            eig[p].evecs = solver.eigenvectors();
        }
    };
    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    SpectrumTrack track;
    track.sweep = sweep;
    track.basis = basis;

    const int dim = static_cast<int>(basis.size());
    const int n_states = static_cast<int>(seeds.size());

    // Seed assignment at the first point: dominant basis-ket amplitude,
    // greedily disambiguated.
    std::vector<int> assigned(n_states, -1);
    std::vector<bool> used(dim, false);
    for (int s = 0; s < n_states; ++s) {
        const int ket_index = basis.index_of(seeds[s].dominant_ket());
        if (ket_index < 0)
            throw LookupError("seed " + seeds[s].str() + " is not in the basis (check N_max / M_F filter)");
        double best = -1.0;
        int best_k = -1;
        for (int k = 0; k < dim; ++k) {
            if (used[k]) continue;
            const double w = std::abs(eig[0].evecs(ket_index, k));
            if (w > best) {
                best = w;
                best_k = k;
            }
        }
        assigned[s] = best_k;
        used[best_k] = true;
        if (best * best < 0.5) {
            std::ostringstream os;
            os << "seed " << seeds[s].str() << " is not dominant in any eigenstate at the "
               << "first sweep point (best weight " << best * best
               << "); start the sweep in a regime where the label is adiabatic";
            throw TrackingError(os.str());
        }
    }

    for (int s = 0; s < n_states; ++s) {
        TrackedState st;
        st.label = seeds[s];
        Eigen::VectorXd v = eig[0].evecs.col(assigned[s]);
        canonical_phase(v);
        st.energy_MHz.push_back(eig[0].evals[assigned[s]]);
        st.eigenvector.push_back(std::move(v));
        track.states.push_back(std::move(st));
    }

    // Maximal-overlap continuation with a pairwise-swap improvement pass for
    // near-degenerate ties.
    for (int p = 1; p < n_points; ++p) {
        Eigen::MatrixXd overlap(n_states, dim);  // <v_s(p-1) | psi_k(p)>
        for (int s = 0; s < n_states; ++s)
            overlap.row(s) = track.states[s].eigenvector.back().transpose() * eig[p].evecs;

        std::vector<int> pick(n_states, -1);
        std::vector<bool> taken(dim, false);
        // greedy, largest overlaps first
        std::vector<int> order(n_states);
        for (int s = 0; s < n_states; ++s) order[s] = s;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return overlap.row(a).cwiseAbs().maxCoeff() > overlap.row(b).cwiseAbs().maxCoeff();
        });
        for (int s : order) {
            double best = -1.0;
            int best_k = -1;
            for (int k = 0; k < dim; ++k) {
                if (taken[k]) continue;
                const double w = std::abs(overlap(s, k));
                if (w > best) {
                    best = w;
                    best_k = k;
                }
            }
            pick[s] = best_k;
            taken[best_k] = true;
        }
        // swap pass: accept any pairwise swap that increases the total overlap
        bool improved = true;
        while (improved) {
            improved = false;
            for (int a = 0; a < n_states; ++a) {
                for (int b = a + 1; b < n_states; ++b) {
                    const double now = std::abs(overlap(a, pick[a])) + std::abs(overlap(b, pick[b]));
                    const double swapped = std::abs(overlap(a, pick[b])) + std::abs(overlap(b, pick[a]));
                    if (swapped > now + 1e-15) {
                        std::swap(pick[a], pick[b]);
                        improved = true;
                    }
                }
            }
        }

        double min_ov = 1.0;
        for (int s = 0; s < n_states; ++s) min_ov = std::min(min_ov, std::abs(overlap(s, pick[s])));
        track.min_step_overlap.push_back(min_ov);

        for (int s = 0; s < n_states; ++s) {
            const double ov = overlap(s, pick[s]);
            if (std::abs(ov) < options.overlap_threshold) {
                // report the two best candidates to make the failure actionable
                Eigen::VectorXd absrow = overlap.row(s).cwiseAbs();
                int k1 = 0;
                absrow.maxCoeff(&k1);
                double w1 = absrow[k1];
                absrow[k1] = -1.0;
                int k2 = 0;
                absrow.maxCoeff(&k2);
                std::ostringstream os;
                os << "tracking lost for " << track.states[s].label.str()
                   << " between sweep points " << p - 1 << " and " << p
                   << " (E=" << sweep[p].E_kV_cm << " kV/cm, B=" << sweep[p].B_G
                   << " G): best |overlap| " << w1 << " with eigenstate #" << k1
                   << " (E=" << eig[p].evals[k1] << " MHz), runner-up #" << k2
                   << " (E=" << eig[p].evals[k2] << " MHz); halve the sweep step";
                throw TrackingError(os.str());
            }
            Eigen::VectorXd v = eig[p].evecs.col(pick[s]);
            if (ov < 0.0) v = -v;  // sign continuity
            track.states[s].energy_MHz.push_back(eig[p].evals[pick[s]]);
            track.states[s].eigenvector.push_back(std::move(v));
        }
    }
    return track;
}

double dipole_element(const MoleculeSpec& spec, const SpectrumTrack& track,
                      const StateLabel& a, const StateLabel& b,
                      std::size_t point_index, int q) {
    const auto& sa = track.state(a);
    const auto& sb = track.state(b);
    if (point_index >= track.n_points())
        throw std::out_of_range("dipole_element: point index out of range");
    const Eigen::MatrixXd D = dipole_operator_matrix(spec, track.basis, q);
    return sa.eigenvector[point_index].dot(D * sb.eigenvector[point_index]);
}

DipoleTriple dipole_triple(const MoleculeSpec& spec, const SpectrumTrack& track,
                           const StateLabel& up, const StateLabel& down,
                           std::size_t point_index, int q) {
    const auto& su = track.state(up);
    const auto& sd = track.state(down);
    if (point_index >= track.n_points())
        throw std::out_of_range("dipole_triple: point index out of range");
    const Eigen::MatrixXd D = dipole_operator_matrix(spec, track.basis, q);
    DipoleTriple t;
    const auto& vu = su.eigenvector[point_index];
    const auto& vd = sd.eigenvector[point_index];
    t.d_up = vu.dot(D * vu);
    t.d_down = vd.dot(D * vd);
    t.d_cross = vu.dot(D * vd);
    return t;
}

double differential_stark_shift(const SpectrumTrack& track,
                                const StateLabel& main_upper, const StateLabel& main_lower,
                                const StateLabel& comp_upper, const StateLabel& comp_lower,
                                std::size_t point_index) {
    if (point_index >= track.n_points())
        throw std::out_of_range("differential_stark_shift: point index out of range");
    const double main_gap = track.state(main_upper).energy_MHz[point_index] -
                            track.state(main_lower).energy_MHz[point_index];
    const double comp_gap = track.state(comp_upper).energy_MHz[point_index] -
                            track.state(comp_lower).energy_MHz[point_index];
    return main_gap - comp_gap;
}

std::vector<FieldPoint> b_sweep(double E_kV_cm, double B_lo_G, double B_hi_G, int n) {
    if (n < 1) throw std::invalid_argument("b_sweep: need at least one point");
    std::vector<FieldPoint> pts;
    for (int i = 0; i < n; ++i) {
        const double x = (n == 1) ? 0.0 : static_cast<double>(i) / (n - 1);
        pts.push_back({E_kV_cm, B_lo_G + x * (B_hi_G - B_lo_G)});
    }
    return pts;
}

std::vector<FieldPoint> e_sweep(double B_G, double E_lo_kV_cm, double E_hi_kV_cm, int n) {
    if (n < 1) throw std::invalid_argument("e_sweep: need at least one point");
    std::vector<FieldPoint> pts;
    for (int i = 0; i < n; ++i) {
        const double x = (n == 1) ? 0.0 : static_cast<double>(i) / (n - 1);
        pts.push_back({E_lo_kV_cm + x * (E_hi_kV_cm - E_lo_kV_cm), B_G});
    }
    return pts;
}

}  // namespace molspin
