#pragma once

#include <stdexcept>
#include <string>

namespace lieconf {

enum class Errc {
  InvalidRank,
  DimensionMismatch,
  Reducible,
  NotARoot,
  SystemMismatch,
  NotInvariant,
  NotValidated,
  ResidualNonzero,
  Unalignable,
  NoWitness,
  InvalidInput,
};

const char* to_string(Errc e) noexcept;

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}
  [[nodiscard]] Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

} // namespace lieconf
