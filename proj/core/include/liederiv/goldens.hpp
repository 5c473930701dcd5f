#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace liederiv {

struct GoldenOptions {
  std::uint64_t seed = 0;
  /// When set, one progress line is written per finished check.
  std::ostream* progress = nullptr;
};

struct GoldenResult {
  int index = 0;
  std::string name;
  bool pass = false;
  /// Failure reasons, or a one-line summary on success.
  std::string detail;
  double seconds = 0.0;
};

/// Runs the full golden suite: frozen dimension tables, family invariants,
/// certificate checks, the property suite and the mod-p cross-check.
/// Results come back in a fixed order, one entry per check.
std::vector<GoldenResult> run_goldens(const GoldenOptions& options = {});

/// Runs the suite printing one line per check plus a summary; returns the
/// number of failed checks.
int run_goldens_with_output(std::ostream& out, GoldenOptions options = {});

}  // namespace liederiv
