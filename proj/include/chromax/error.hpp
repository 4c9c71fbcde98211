#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace chromax {

enum class Errc {
  not_divisible,
  invalid_params,
  invalid_edge,
  invalid_vertex,
  malformed_graph6,
  not_biconnected,
  not_a_cycle,
  invalid_decomposition,
  too_large,
  non_integer_coefficient,
  unknown_fixture,
  precondition_failed,
  io_error,
  parse_error,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::not_divisible: return "NotDivisible";
    case Errc::invalid_params: return "InvalidParams";
    case Errc::invalid_edge: return "InvalidEdge";
    case Errc::invalid_vertex: return "InvalidVertex";
    case Errc::malformed_graph6: return "MalformedGraph6";
    case Errc::not_biconnected: return "NotBiconnected";
    case Errc::not_a_cycle: return "NotACycle";
    case Errc::invalid_decomposition: return "InvalidDecomposition";
    case Errc::too_large: return "TooLarge";
    case Errc::non_integer_coefficient: return "NonIntegerCoefficient";
    case Errc::unknown_fixture: return "UnknownFixture";
    case Errc::precondition_failed: return "PreconditionFailed";
    case Errc::io_error: return "IoError";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

/// The single exception type thrown by the library. `code()` identifies the
/// failure class; `offset()` carries a byte offset (graph6 parsing) or a record
/// index (campaign input) when one is meaningful.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::optional<std::size_t> offset = std::nullopt)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code), detail_(what), offset_(offset) {}

  Errc code() const noexcept { return code_; }
  std::optional<std::size_t> offset() const noexcept { return offset_; }
  /// The message without the error-name prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
  std::optional<std::size_t> offset_;
};

}  // namespace chromax
