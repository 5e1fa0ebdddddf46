#pragma once

#include <string>

#include "majorate/dist.hpp"

namespace majorate {

/// Parses a distribution from file content: a JSON object
/// {"name": ..., "weights": [...]}, a bare JSON array, or CSV with one weight
/// per line (detected by the first non-space character). Raises ParseError /
/// canonicalization errors.
ProbDist parse_dist(const std::string& content, bool auto_normalize = false);

/// parse_dist over a file's bytes; ParseError when unreadable.
ProbDist load_dist(const std::string& path, bool auto_normalize = false);

/// Fixed-format real: %.17g (round-trippable, deterministic).
std::string format_real(double value);

}  // namespace majorate
