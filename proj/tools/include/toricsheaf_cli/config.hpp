#pragma once

#include "toricsheaf/filtration.hpp"
#include "toricsheaf/monomial.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace toricsheaf::cli {

struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  bool empty() const { return lo > hi; }
  friend bool operator==(const Range&, const Range&) = default;
};

// "lo:hi" with optional signs; throws InputError otherwise.
Range parse_range(const std::string& text);

struct JobConfig {
  std::optional<EquivariantReflexiveSheaf> sheaf;
  std::optional<MonomialIdeal> ideal;
  std::optional<Range> p_window;
  std::optional<Range> q_window;
};

// Parses a JSON job description. Errors are InputError with the offending
// field path (or the parser's line and column) in the message.
JobConfig parse_config(const std::string& text);
JobConfig load_config(const std::string& path);

}  // namespace toricsheaf::cli
