#pragma once

#include <stdexcept>

namespace aho {

// Bad scenario or parameter input (CLI exit code 2).
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A computed quantity violated a structural guarantee, e.g. a Wigner
// imaginary residue or mismatched grid geometry (CLI exit code 3).
struct invariant_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Fock-space truncation inadequate or integrator stability bound
// exceeded (CLI exit code 4).
struct truncation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace aho
