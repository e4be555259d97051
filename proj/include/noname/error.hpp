#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace noname {

enum class ErrorKind {
  arithmetic,
  usage,
  parse,
  classification,
  finiteness_cap,
  iso,
  normality,
  search_failure,
  precondition,
  singular_matrix,
  internal_inconsistency,
  verification,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. `stage` names the pipeline step that
/// raised it; the CLI prints it as a greppable tag.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::string stage = {})
      : std::runtime_error(message), kind_(kind), stage_(std::move(stage)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& stage() const noexcept { return stage_; }
  void set_stage(std::string stage) { stage_ = std::move(stage); }

 private:
  ErrorKind kind_;
  std::string stage_;
};

class SearchFailure : public Error {
 public:
  SearchFailure(const std::string& message, std::size_t tries)
      : Error(ErrorKind::search_failure, message), tries_(tries) {}
  std::size_t tries() const noexcept { return tries_; }

 private:
  std::size_t tries_;
};

}  // namespace noname
