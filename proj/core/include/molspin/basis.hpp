#pragma once

#include "molspin/halfint.hpp"

#include <optional>
#include <string>
#include <vector>

namespace molspin {

struct MoleculeSpec;

/// One uncoupled basis ket |N M_N> (x |S M_S|) x |I1 M_I1> (x |I2 M_I2>).
/// M_S is present only for doublet species.
struct BasisKet {
    int N = 0;
    int M_N = 0;
    std::optional<HalfInt> M_S;
    std::vector<HalfInt> M_I;

    bool operator==(const BasisKet&) const = default;

    /// Total projection M_N + M_S + sum(M_I). Conserved for parallel fields.
    HalfInt total_mf() const;

    std::string str() const;
};

/// Ordered, deterministic basis: lexicographic in (N, M_N, M_S, M_I...).
struct BasisSet {
    std::vector<BasisKet> kets;
    int n_max = 0;
    std::optional<HalfInt> total_mf_filter;

    std::size_t size() const { return kets.size(); }
    const BasisKet& operator[](std::size_t i) const { return kets[i]; }

    /// Index of the ket, or -1 if absent.
    int index_of(const BasisKet& ket) const;
};

/// Full tensor-product basis for N <= n_max, optionally restricted to one
/// total-M_F block. Count before filtering is
/// sum_{N<=n_max}(2N+1) * (2S+1) * prod_nu (2 I_nu + 1).
BasisSet build_basis(const MoleculeSpec& spec, int n_max,
                     std::optional<HalfInt> total_mf_filter = std::nullopt);

/// <bra| C^k_q |ket> of the rank-k reduced spherical harmonic of the molecular
/// axis. Purely spatial: zero unless all spin projections coincide.
double tensor_element(const BasisKet& bra, int k, int q, const BasisKet& ket);

}  // namespace molspin
