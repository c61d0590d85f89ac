#pragma once

#include "molspin/halfint.hpp"

#include <string>
#include <vector>

namespace molspin {

enum class SpeciesKind {
    Sigma1,  // closed shell, S = 0 (bialkali class)
    Sigma2,  // one unpaired electron, S = 1/2
};

struct NucleusSpec {
    std::string name;
    HalfInt I;              // nuclear spin
    double g = 0.0;         // nuclear g-factor
    double sigma = 0.0;     // isotropic shielding (dimensionless, not ppm)
    double eQq_MHz = 0.0;   // electric quadrupole coupling
    double c_sr_Hz = 0.0;   // nuclear spin-rotation constant
};

/// Immutable registry entry of molecular constants. All couplings are E/h
/// frequencies; see units.hpp for the field/dipole conversions.
struct MoleculeSpec {
    std::string name;
    SpeciesKind kind = SpeciesKind::Sigma1;
    double B_e_MHz = 0.0;       // rotational constant
    double d_debye = 0.0;       // body-frame electric dipole moment
    std::vector<NucleusSpec> nuclei;

    // doublet (2-Sigma) constants
    double gamma_MHz = 0.0;     // electron spin-rotation
    double b_MHz = 0.0;         // isotropic (Frosch-Foley b) hyperfine
    double c_MHz = 0.0;         // anisotropic hyperfine
    double g_S = 0.0;           // electron g-factor

    // singlet (1-Sigma) constants
    double g_r = 0.0;           // rotational g-factor
    double c3_Hz = 0.0;         // tensor nuclear spin-spin
    double c4_Hz = 0.0;         // scalar nuclear spin-spin

    std::string source;         // provenance of the constants

    bool has_electron_spin() const { return kind == SpeciesKind::Sigma2; }

    /// Throws std::invalid_argument when invariants are violated.
    void validate() const;
};

/// Registry of named molecules loaded from the constants data file.
class MoleculeRegistry {
public:
    /// Built-in registry (same content as data/molecules.json).
    static const MoleculeRegistry& builtin();

    /// Parses the documented JSON schema. Throws std::invalid_argument on
    /// malformed input.
    static MoleculeRegistry from_json(const std::string& json_text);
    static MoleculeRegistry from_file(const std::string& path);

    const MoleculeSpec& get(const std::string& name) const;
    bool contains(const std::string& name) const;
    std::vector<std::string> names() const;
    const std::string& version() const { return version_; }

private:
    std::string version_;
    std::vector<MoleculeSpec> molecules_;
};

/// Raw JSON text of the built-in constants registry.
extern const char* const kBuiltinRegistryJson;

}  // namespace molspin
