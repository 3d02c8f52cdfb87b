#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "kerovlab/kerov.hpp"

namespace kerovlab::cli {

inline constexpr const char* kFormatVersion = "kerovlab/1";

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kSizeLimit = 2,
  kConsistency = 3,
};

/// Runs one command line. Regular output goes to `out` (or to --output),
/// diagnostics to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

nlohmann::json kerov_to_json(const KerovPolynomial& sigma);
/// Inverse of kerov_to_json; throws std::domain_error on schema violations.
KerovPolynomial kerov_from_json(const nlohmann::json& payload);

}  // namespace kerovlab::cli
