#include "molspin/molecule.hpp"

namespace molspin {

// Keep in sync with core/data/molecules.json (tests compare the two).
const char* const kBuiltinRegistryJson = R"JSON({
  "version": "2026.1",
  "molecules": {
    "KRb": {
      "kind": "1Sigma",
      "B_e_MHz": 1113.9514,
      "d_D": 0.574,
      "g_r": 0.014,
      "c3_tensor_Hz": -17.3,
      "c4_scalar_Hz": -2030.4,
      "nuclei": [
        {
          "name": "K40",
          "I": "4",
          "g": -0.324,
          "sigma_ppm": 1321.0,
          "eQq_MHz": 0.452,
          "c_spin_rotation_Hz": -24.1
        },
        {
          "name": "Rb87",
          "I": "3/2",
          "g": 1.834,
          "sigma_ppm": 3469.0,
          "eQq_MHz": -1.308,
          "c_spin_rotation_Hz": 420.1
        }
      ],
      "source": "40K87Rb X1Sigma+: rotational constant and dipole moment from Ni et al., Science 322, 231 (2008); hyperfine and Zeeman constants from Aldegunde et al., PRA 78, 033434 (2008); quadrupole couplings from Ospelkaus et al., PRL 104, 030402 (2010)"
    },
    "YO": {
      "kind": "2Sigma",
      "B_e_MHz": 11633.6,
      "d_D": 4.524,
      "gamma_MHz": -9.2254,
      "b_MHz": -762.976,
      "c_MHz": -28.236,
      "g_S": 2.0023193,
      "nuclei": [
        {
          "name": "Y89",
          "I": "1/2",
          "g": -0.2748308
        }
      ],
      "source": "89Y16O X2Sigma+: rotational, spin-rotation and hyperfine constants from Childs et al., J. Mol. Spectrosc. 132, 492 (1988) as tabulated by Collopy et al., NJP 17, 055008 (2015); dipole moment 4.524 D (Suenram et al., J. Mol. Spectrosc. 139, 89 (1990))"
    }
  }
})JSON";

}  // namespace molspin
