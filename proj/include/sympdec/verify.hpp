#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sympdec::verify {

enum class Suite { Closure, Lemmas, MixedProduct, Center, Formulas, Bezout, JIso, All };

std::string to_string(Suite s);
std::optional<Suite> parse_suite(std::string_view name);

/// Unset bounds and sample counts fall back to per-suite defaults.
struct VerifyConfig {
  Suite suite = Suite::All;
  std::uint64_t seed = 0;
  std::optional<long> samples;
  std::optional<long> max_m;
  std::optional<long> max_n;
  std::optional<long> max_r;
  /// Rerun only this sample index (for replaying a recorded failure).
  std::optional<long> only_sample;
  bool timing = false;
};

/// Everything needed to replay one failing check.
struct Failure {
  std::string check;
  std::vector<std::pair<std::string, long>> params;
  std::optional<long> sample;
  std::optional<std::uint64_t> sample_seed;
  std::string message;
};

struct VerifyReport {
  std::string suite;
  std::uint64_t seed = 0;
  long samples = 0;
  long max_m = 0;
  long max_n = 0;
  long max_r = 0;
  long cases = 0;
  std::vector<Failure> failures;
  std::optional<double> elapsed_ms;

  bool ok() const { return failures.empty(); }
};

/// Largest matrix side allowed in the exact suites: 2 max_m max_n max_r.
inline constexpr long kMatrixGuard = 64;

/// Runs one suite, or each suite in turn for Suite::All. BoundsTooLarge if a
/// matrix suite would exceed the guard; InvalidArgument for bounds or
/// samples below 1.
std::vector<VerifyReport> run(const VerifyConfig& cfg);

VerifyReport run_closure(const VerifyConfig& cfg);
VerifyReport run_lemmas(const VerifyConfig& cfg);
VerifyReport run_mixed_product(const VerifyConfig& cfg);
VerifyReport run_center(const VerifyConfig& cfg);
VerifyReport run_formulas(const VerifyConfig& cfg);
VerifyReport run_bezout(const VerifyConfig& cfg);
VerifyReport run_j_iso(const VerifyConfig& cfg);

}  // namespace sympdec::verify
