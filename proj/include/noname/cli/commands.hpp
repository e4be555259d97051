#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "noname/core/certificate.hpp"
#include "noname/error.hpp"

namespace noname::cli {

enum ExitCode : int { kOk = 0, kInput = 2, kPrecondition = 3, kInternal = 4, kVerification = 5 };

int exit_code_for(ErrorKind kind);
/// One line: "error[stage=<stage>] <kind>: <message>".
std::string format_error(const Error& e);

struct ParametrizeOptions {
  std::string config_path;
  std::optional<std::string> out_path;
  std::string format = "text";
  std::optional<std::uint64_t> seed;
  bool find_alpha = false;
  std::optional<std::string> construction;
  bool timings = false;
  bool color = false;
};

struct MooreOptions {
  std::uint64_t p = 2;
  std::uint64_t e = 1;
  std::optional<std::string> tuple;
  std::optional<std::size_t> random;
  std::uint64_t seed = 1;
  std::optional<std::string> modulus;
};

int run_parametrize(const ParametrizeOptions& opts, std::ostream& out, std::ostream& err);
int run_verify(const std::string& report_path, const std::string& config_path, std::ostream& out, std::ostream& err);
int run_moore(const MooreOptions& opts, std::ostream& out, std::ostream& err);

/// First monic irreducible of degree e over F_p, coefficients enumerated
/// from the constant term upward.
exact::UniPoly default_moore_modulus(std::uint64_t p, std::uint64_t e);

}  // namespace noname::cli
