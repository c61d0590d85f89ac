#include "molspin/basis.hpp"

#include "molspin/molecule.hpp"
#include "molspin/wigner.hpp"

#include <sstream>
#include <stdexcept>

namespace molspin {

HalfInt BasisKet::total_mf() const {
    HalfInt mf(M_N);
    if (M_S) mf = mf + *M_S;
    for (const auto& mi : M_I) mf = mf + mi;
    return mf;
}

std::string BasisKet::str() const {
    std::ostringstream os;
    os << "|" << N << "," << M_N;
    if (M_S) os << ";" << M_S->str();
    for (const auto& mi : M_I) os << ";" << mi.str();
    os << ">";
    return os.str();
}

int BasisSet::index_of(const BasisKet& ket) const {
    for (std::size_t i = 0; i < kets.size(); ++i)
        if (kets[i] == ket) return static_cast<int>(i);
    return -1;
}

BasisSet build_basis(const MoleculeSpec& spec, int n_max,
                     std::optional<HalfInt> total_mf_filter) {
    if (n_max < 1) throw std::invalid_argument("build_basis: n_max must be >= 1");
    spec.validate();

    std::vector<HalfInt> ms_values;
    if (spec.has_electron_spin()) {
        ms_values = {-half(), half()};
    } else {
        ms_values = {HalfInt(0)};  // placeholder, not stored
    }

    BasisSet basis;
    basis.n_max = n_max;
    basis.total_mf_filter = total_mf_filter;

    // Lexicographic (N, M_N, M_S, M_I...) so identical inputs serialize
    // byte-identically.
    for (int N = 0; N <= n_max; ++N) {
        for (int M_N = -N; M_N <= N; ++M_N) {
            for (const auto& ms : ms_values) {
                BasisKet ket;
                ket.N = N;
                ket.M_N = M_N;
                if (spec.has_electron_spin()) ket.M_S = ms;
                // enumerate nuclear projections odometer-style
                std::vector<HalfInt> mi(spec.nuclei.size());
                for (std::size_t v = 0; v < spec.nuclei.size(); ++v)
                    mi[v] = -spec.nuclei[v].I;
                bool more = true;
                while (more) {
                    ket.M_I = mi;
                    if (!total_mf_filter || ket.total_mf() == *total_mf_filter)
                        basis.kets.push_back(ket);
                    more = false;
                    for (std::size_t v = mi.size(); v-- > 0;) {
                        if (mi[v] < spec.nuclei[v].I) {
                            mi[v] = mi[v] + HalfInt::from_twice(2);
                            for (std::size_t w = v + 1; w < mi.size(); ++w)
                                mi[w] = -spec.nuclei[w].I;
                            more = true;
                            break;
                        }
                    }
                }
            }
        }
    }
    return basis;
}

double tensor_element(const BasisKet& bra, int k, int q, const BasisKet& ket) {
    if (k != 1 && k != 2) throw std::domain_error("tensor_element: k must be 1 or 2");
    if (bra.M_S != ket.M_S) return 0.0;
    if (bra.M_I != ket.M_I) return 0.0;
    return rotor_tensor_element(bra.N, bra.M_N, k, q, ket.N, ket.M_N);
}

}  // namespace molspin
