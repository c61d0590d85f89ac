#include "molspin/molecule.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace molspin {

using nlohmann::json;

void MoleculeSpec::validate() const {
    if (B_e_MHz <= 0.0) throw std::invalid_argument(name + ": B_e must be > 0");
    if (d_debye < 0.0) throw std::invalid_argument(name + ": dipole moment must be >= 0");
    for (const auto& nuc : nuclei) {
        if (nuc.I.twice() < 0)
            throw std::invalid_argument(name + ": nuclear spin I must be >= 0");
    }
    if (kind == SpeciesKind::Sigma2 && g_S == 0.0)
        throw std::invalid_argument(name + ": doublet species needs g_S");
}

namespace {

MoleculeSpec parse_molecule(const std::string& name, const json& j) {
    MoleculeSpec spec;
    spec.name = name;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "1Sigma")
        spec.kind = SpeciesKind::Sigma1;
    else if (kind == "2Sigma")
        spec.kind = SpeciesKind::Sigma2;
    else
        throw std::invalid_argument(name + ": kind must be 1Sigma or 2Sigma");

    spec.B_e_MHz = j.at("B_e_MHz").get<double>();
    spec.d_debye = j.at("d_D").get<double>();
    for (const auto& jn : j.at("nuclei")) {
        NucleusSpec nuc;
        nuc.name = jn.at("name").get<std::string>();
        nuc.I = parse_half_int(jn.at("I").get<std::string>());
        nuc.g = jn.value("g", 0.0);
        nuc.sigma = jn.value("sigma_ppm", 0.0) * 1e-6;
        nuc.eQq_MHz = jn.value("eQq_MHz", 0.0);
        nuc.c_sr_Hz = jn.value("c_spin_rotation_Hz", 0.0);
        spec.nuclei.push_back(nuc);
    }
    spec.gamma_MHz = j.value("gamma_MHz", 0.0);
    spec.b_MHz = j.value("b_MHz", 0.0);
    spec.c_MHz = j.value("c_MHz", 0.0);
    spec.g_S = j.value("g_S", 0.0);
    spec.g_r = j.value("g_r", 0.0);
    spec.c3_Hz = j.value("c3_tensor_Hz", 0.0);
    spec.c4_Hz = j.value("c4_scalar_Hz", 0.0);
    spec.source = j.value("source", "");
    spec.validate();
    return spec;
}

}  // namespace

MoleculeRegistry MoleculeRegistry::from_json(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("registry: invalid JSON: ") + e.what());
    }
    MoleculeRegistry reg;
    reg.version_ = j.at("version").get<std::string>();
    for (const auto& [name, jm] : j.at("molecules").items())
        reg.molecules_.push_back(parse_molecule(name, jm));
    return reg;
}

MoleculeRegistry MoleculeRegistry::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("registry: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_json(ss.str());
}

const MoleculeRegistry& MoleculeRegistry::builtin() {
    static const MoleculeRegistry reg = from_json(kBuiltinRegistryJson);
    return reg;
}

const MoleculeSpec& MoleculeRegistry::get(const std::string& name) const {
    for (const auto& m : molecules_)
        if (m.name == name) return m;
    throw std::invalid_argument("registry: unknown molecule '" + name + "'");
}

bool MoleculeRegistry::contains(const std::string& name) const {
    for (const auto& m : molecules_)
        if (m.name == name) return true;
    return false;
}

std::vector<std::string> MoleculeRegistry::names() const {
    std::vector<std::string> out;
    for (const auto& m : molecules_) out.push_back(m.name);
    return out;
}

}  // namespace molspin
