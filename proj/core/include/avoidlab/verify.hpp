#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "avoidlab/bijection.hpp"
#include "avoidlab/enumerate.hpp"
#include "avoidlab/permutation.hpp"

namespace avoidlab {

/// Failure evidence attached to a claim report. Re-running the named check on
/// the recorded inputs reproduces the failure.
struct Witness {
  std::optional<Permutation> w;
  std::optional<Pattern> pattern;
  std::string detail;
};

struct ClaimParam {
  std::string name;
  std::string value;
  bool numeric = false;
};

/// Outcome record of one verification run. For count claims lhs and rhs are
/// the two compared totals; for per-instance claims lhs counts cases and rhs
/// counts passes. A witness is present exactly when pass is false.
struct ClaimReport {
  std::string claim_id;
  std::vector<ClaimParam> params;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool pass = false;
  std::optional<Witness> witness;
  std::int64_t elapsed_ms = 0;
};

/// Runs `check` on every w in S_n(132) for 0 <= n <= n_max. lhs counts cases,
/// rhs counts passes; the first failure in enumeration order becomes the
/// witness carrying check's description.
ClaimReport check_avoiders_property(
    std::string claim_id, int n_max, const Guards& guards,
    const std::function<std::optional<std::string>(const Permutation&)>& check);

/// phi lands in A_{2n+1}(132), inverts, hits exactly C_n distinct images, has
/// strictly decreasing odd-position entries ending in 1, and its even-position
/// entries standardize back to the source.
ClaimReport verify_bijection(int n_max, const Guards& guards = {});

/// Containment transport: contains(w, p) <=> contains(phi(w), phi(p)) for all
/// w up to n_max and 132-avoiding p up to k_max, plus the generalized
/// converse through every validated (p, q) pair drawn from the same range.
ClaimReport verify_transport(int n_max, int k_max, const Guards& guards = {});

/// For validated pairs: |S_n(132, p...)| = |A_{2n+1}(132, q...)| and phi maps
/// the first set exactly onto the second. Invalid pairs are rejected up
/// front.
ClaimReport verify_theorem(int n_max, std::span<const PatternPair> pairs,
                           const Guards& guards = {});

/// verify_theorem over a default catalog: every 132-avoiding pattern of
/// length <= 3 paired with its phi image, the three named corollary pairs —
/// each checked alone — plus one simultaneous two-pair collection. Results
/// merge into a single report.
ClaimReport verify_theorem_catalog(int n_max, const Guards& guards = {});

/// Count equality for the named corollary family at parameter k, compared
/// against the known closed form where one exists (12k: k = 1, 2, 3; k21:
/// k = 2, 3; otherwise count-equality only, with a notice in the params).
/// Family 12k also checks the increasing-subsequence shift
/// lis(phi(w)) = lis(w) + 1.
ClaimReport verify_corollary(CorollaryFamily family, int k, int n_max,
                             const Guards& guards = {});

/// Odd/even reduction: the shrink/grow round trip, a_{2n} = a_{2n+1}, and the
/// pattern-transformed count equalities for each sample pattern (split by the
/// ends-in-1 rule). The even side is cross-checked by brute force wherever
/// the full-scan guard allows.
ClaimReport verify_parity(int n_max, std::span<const Pattern> sample_patterns,
                          const Guards& guards = {});

/// catalan(n) = catalan_by_recursion(n) = |S_n(132)| (streamed) within the
/// given bounds.
ClaimReport verify_recursion_s(int n_max, int stream_n_max, const Guards& guards = {});

/// The odd-length convolution a_{2n+3} = sum a_{2k+1} a_{2(n-k)+1} on counted
/// values, for odd lengths up to m_max.
ClaimReport verify_recursion_a(int m_max, const Guards& guards = {});

struct VerifyConfig {
  int bijection_n_max = 8;
  int transport_n_max = 6;
  int transport_k_max = 4;
  int theorem_n_max = 6;
  int corollary_n_max = 7;
  int parity_n_max = 10;
  int recursion_n_max = 14;
  int recursion_stream_n_max = 10;
  int recursion_a_m_max = 13;
  Guards guards{};
  /// Adds a claim with a deliberately wrong expected value, proving the
  /// harness reports failures with witnesses. For harness self-tests only.
  bool selftest_corrupt = false;
};

/// Runs the whole catalog with the configured bounds and appends a coverage
/// claim checking that every cataloged statement was exercised.
std::vector<ClaimReport> run_all(const VerifyConfig& config = {});

bool all_pass(std::span<const ClaimReport> reports);

/// JSON document {"schema_version":1, "reports":[...], "pass":...}. Timings
/// are omitted unless requested so identical runs render identically.
std::string reports_to_json(std::span<const ClaimReport> reports,
                            bool include_timings = false);

/// Fixed-width text table, one row per claim.
std::string reports_to_table(std::span<const ClaimReport> reports,
                             bool include_timings = false);

}  // namespace avoidlab
