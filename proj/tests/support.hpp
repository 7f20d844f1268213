// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "fdim/workspace.hpp"

namespace fdalg::testing {

inline std::string data_path(const std::string& name) { return std::string(FDIM_DATA_DIR) + "/" + name; }

inline Workspace load_data(const std::string& name, Scalar prime = PrimeField::kDefaultPrime) {
  return load_workspace(read_file(data_path(name)), prime);
}

template <class F>
ErrorKind error_kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvariantViolation;
}

}  // namespace fdalg::testing
