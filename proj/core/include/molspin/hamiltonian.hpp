#pragma once

#include "molspin/basis.hpp"
#include "molspin/molecule.hpp"

#include <Eigen/Dense>

namespace molspin {

/// External dc fields. E and B are parallel by construction; their common
/// direction is the quantization axis.
struct FieldPoint {
    double E_kV_cm = 0.0;
    double B_G = 0.0;
};

/// Individual Hamiltonian terms can be switched off so tests can isolate
/// them against single-term analytic oracles.
struct TermToggles {
    bool rotation = true;
    bool stark = true;
    bool zeeman = true;              // all magnetic terms of the species
    bool quadrupole = true;          // 1-Sigma
    bool nuclear_spin_rotation = true;  // 1-Sigma
    bool scalar_spin_spin = true;    // 1-Sigma
    bool tensor_spin_spin = true;    // 1-Sigma
    bool spin_rotation = true;       // 2-Sigma (gamma N.S)
    bool hyperfine = true;           // 2-Sigma (b, c)

    static TermToggles none() {
        TermToggles t;
        t.rotation = t.stark = t.zeeman = t.quadrupole = t.nuclear_spin_rotation =
            t.scalar_spin_spin = t.tensor_spin_spin = t.spin_rotation = t.hyperfine = false;
        return t;
    }
    static TermToggles hyperfine_free() {
        TermToggles t;
        t.quadrupole = t.nuclear_spin_rotation = t.scalar_spin_spin =
            t.tensor_spin_spin = t.hyperfine = false;
        return t;
    }
};

/// Full single-molecule Hamiltonian in the uncoupled basis, in MHz.
///
/// 1-Sigma: B_e N^2 + H_quadrupole + H_nsr + H_ss,scalar + H_ss,tensor
///          - E d C^1_0 - g_r mu_N B N_z - sum_nu g_nu mu_N (1-sigma_nu) B I_nu,z
/// 2-Sigma: B_e N^2 + gamma N.S + (b + c/3) I.S
///          + c sqrt(6)/3 sum_q (-1)^q C^2_-q [I x S]^2_q
///          - E d C^1_0 + g_S mu_B B S_z
///
/// The electron Zeeman sign is chosen so that the N=0, M_S=+1/2 level moves
/// up with B (see docs/CONVENTIONS.md). Nuclear and rotational Zeeman terms
/// are omitted for 2-Sigma species.
///
/// The matrix is real symmetric and exactly block diagonal over
/// M_F = M_N + M_S + sum M_I.
Eigen::MatrixXd assemble_hamiltonian(const MoleculeSpec& spec,
                                     const FieldPoint& point,
                                     const BasisSet& basis,
                                     const TermToggles& toggles = {});

/// Lab-frame dipole operator d C^1_q in the given basis, in Debye.
Eigen::MatrixXd dipole_operator_matrix(const MoleculeSpec& spec,
                                       const BasisSet& basis, int q);

/// The electric-quadrupole term alone, in MHz.
Eigen::MatrixXd quadrupole_operator_matrix(const MoleculeSpec& spec,
                                           const BasisSet& basis);

}  // namespace molspin
