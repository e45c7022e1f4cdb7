#include "lieconf/errors.hpp"

namespace lieconf {

const char* to_string(Errc e) noexcept {
  switch (e) {
  case Errc::InvalidRank: return "InvalidRank";
  case Errc::DimensionMismatch: return "DimensionMismatch";
  case Errc::Reducible: return "Reducible";
  case Errc::NotARoot: return "NotARoot";
  case Errc::SystemMismatch: return "SystemMismatch";
  case Errc::NotInvariant: return "NotInvariant";
  case Errc::NotValidated: return "NotValidated";
  case Errc::ResidualNonzero: return "ResidualNonzero";
  case Errc::Unalignable: return "Unalignable";
  case Errc::NoWitness: return "NoWitness";
  case Errc::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

} // namespace lieconf
