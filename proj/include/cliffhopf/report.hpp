#pragma once

#include "cliffhopf/braiding.hpp"
#include "cliffhopf/io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cliffhopf::report {

using io::Json;

struct InstanceConfig {
  int n = 1;
  Matrix eta;
  Matrix xi;
  int truncation = kDefaultTruncation;
  int samples = 0;
  std::uint64_t seed = 1;
  /// Cached △ table supplied by the caller; verify compares it with recomputation.
  std::optional<std::vector<Tensor2>> coproduct_table;
  /// (i², j²) pairs for an n = 1 sweep.
  std::vector<std::pair<Scalar, Scalar>> sweep_pairs;
};

/// Throws ParseError naming the offending location.
InstanceConfig parse_config(const std::string& text, const std::string& source_name = "config");

/// n = 1 instance η = [i²], ξ = [j²].
CliffordStructure complex_structure(const Scalar& i2, const Scalar& j2);

/// Rank limits for the exact solvers inside reports.
inline constexpr int kMaxAntipodeRank = 4;
inline constexpr int kMaxSigmaRank = 2;
inline constexpr int kMaxShuffleRank = 3;

Json structure_echo(const CliffordStructure& s);
Json tables_section(const CliffordStructure& s);
Json antipode_section(const CliffordStructure& s);
Json sigma_section(const CliffordStructure& s);
Json braided_section(const CliffordStructure& s);
Json shuffle_section(const CliffordStructure& s, int bound);

struct VerifyOutcome {
  Json report;
  /// Names of failed theorem-backed checks; empty means pass.
  std::vector<std::string> hard_failures;
  bool passed() const { return hard_failures.empty(); }
};

VerifyOutcome verify(const InstanceConfig& config);

struct SweepRequest {
  std::vector<std::pair<Scalar, Scalar>> pairs;
  /// Random instances with n ≤ 2; half have ξ = η⁻¹.
  int random_samples = 0;
  std::uint64_t seed = 1;
  int jobs = 1;
};

/// One row per pair then one per random sample, followed by the aggregate.
/// Output does not depend on `jobs`.
Json sweep(const SweepRequest& request);

/// Small rational drawn from a 64-bit value: numerator in [−3, 3], denominator in [1, 3].
Scalar rational_from_bits(std::uint64_t bits);

/// Human summary: flattened scalar fields, arrays shown by length.
std::string markdown(const std::string& title, const Json& report);

/// Byte-stable JSON text (sorted keys, two-space indent, trailing newline).
std::string dump(const Json& j);

} // namespace cliffhopf::report
