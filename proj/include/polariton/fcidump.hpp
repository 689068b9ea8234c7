#pragma once

#include <string>

#include "polariton/integrals.hpp"

namespace polariton {

// FCIDUMP-style interchange.  Main file: "&FCI NORB=..,NELEC=..,MS2=.."
// header then "value i j k l" lines (1-based, chemists' notation); i j 0 0
// carries h_ij, 0 0 0 0 carries E_nuc.  The companion dipole file uses the
// same line grammar with a leading component tag x|y|z and one "nuc x y z"
// line for the nuclear dipole.
void write_fcidump(const MolecularIntegrals& mi, const std::string& path,
                   const std::string& dipole_path);

// dipole_path may be empty; the result then carries no dipole integrals and
// has_dipole() is false (the Pauli-Fierz build refuses such input).
MolecularIntegrals load_fcidump(const std::string& path, const std::string& dipole_path);

bool has_dipole(const MolecularIntegrals& mi);

}  // namespace polariton
