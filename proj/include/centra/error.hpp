#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace centra {

enum class Errc {
  self_loop,
  non_positive_weight,
  duplicate_edge,
  node_out_of_range,
  topology_mismatch,
  weight_out_of_range,
  wrong_weight_kind,
  negative_difference,
  count_overflow,
  not_symmetric,
  not_connected,
  no_convergence,
  size_too_small,
  universe_mismatch,
  zero_distance,
  invalid_argument,
  parse_error,
};

std::string_view to_string(Errc code);

/// Exception carrying a machine-checkable error code. Parse errors also carry
/// the 1-based line number of the offending input line.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::optional<std::size_t> line = std::nullopt)
      : std::runtime_error(what), code_(code), line_(line) {}

  Errc code() const noexcept { return code_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  Errc code_;
  std::optional<std::size_t> line_;
};

}  // namespace centra
