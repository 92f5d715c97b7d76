#pragma once

#include "ezl/numeric.hpp"

#include <string>
#include <vector>

namespace ezl::cli {

struct Check {
  std::string name;
  bool pass = false;
  Real residual;
  Real bound;
};

struct VerifyReport {
  std::string suite;
  std::vector<Check> checks;

  bool pass() const;
};

const std::vector<std::string>& verify_suites();

/// Runs a named property suite; InvalidArgument for an unknown name.
VerifyReport verify(const std::string& suite, const PrecisionContext& ctx);

}  // namespace ezl::cli
