#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "avoidlab/permutation.hpp"

namespace avoidlab {

/// Enumeration guards. Full n! scans and structure-driven generation have
/// separate ceilings; exceeding either raises GuardError rather than grinding
/// away. Callers may construct raised guards, which the CLI gates behind an
/// explicit acknowledgment flag.
struct Guards {
  int full_scan_max = 10;
  int structural_max = 16;
};

/// All n! permutations in lexicographic order, one at a time.
class PermutationStream {
 public:
  explicit PermutationStream(int n, const Guards& guards = {});
  std::optional<Permutation> next();

 private:
  int n_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> current_;
};

/// S_n(132) in lexicographic order. Generation is structure-driven — a
/// prefix is extended only with values that keep it completable inside the
/// class — so the stream never touches the other n! - C_n permutations.
class AvoiderStream {
 public:
  explicit AvoiderStream(int n, const Guards& guards = {});
  std::optional<Permutation> next();

 private:
  bool advance();

  int n_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> w_;
  // Per-depth prefix state: used values, values that would close a 132, and
  // the running prefix minimum. Index d holds the state before position d.
  std::vector<std::uint64_t> used_;
  std::vector<std::uint64_t> forb_;
  std::vector<int> pmin_;
};

/// A_m(132) for odd m = 2n+1, streamed as the phi-images of S_n(132). Even
/// lengths go through the parity reduction instead and are rejected here.
class AlternatingAvoiderStream {
 public:
  explicit AlternatingAvoiderStream(int odd_length, const Guards& guards = {});
  std::optional<Permutation> next();

 private:
  AvoiderStream inner_;
};

std::vector<Permutation> gen_all(int n, const Guards& guards = {});
std::vector<Permutation> gen_avoiders_132(int n, const Guards& guards = {});
std::vector<Permutation> gen_alternating_avoiders_132(int m, const Guards& guards = {});

/// Result of a filtered count. `dropped` lists extra patterns that were
/// ignored because they already contain 132 (avoiding them is implied).
struct CountResult {
  std::int64_t value = 0;
  std::vector<Pattern> dropped;
};

/// |S_n(132, extras...)|. The 132 pattern is always implicit.
CountResult count_s(int n, std::span<const Pattern> extra_patterns,
                    const Guards& guards = {}, int workers = 1);

/// |A_m(132, extras...)|. Odd m counts over the phi-image stream; even m is
/// computed at length m+1 through the parity correspondence (a pattern ending
/// in 1 is replaced by its odd-length preimage, others carry over unchanged).
CountResult count_a(int m, std::span<const Pattern> extra_patterns,
                    const Guards& guards = {}, int workers = 1);

/// Independent cross-check for count_a: filter all m! permutations. Subject
/// to the full-scan guard.
std::int64_t count_a_brute_force(int m, std::span<const Pattern> extra_patterns,
                                 const Guards& guards = {});

/// Counts S_n(132) elements satisfying `pred`. With workers > 1 the class is
/// partitioned by the position of the maximum entry (the blocks left and
/// right of n are independent sub-avoiders); merged totals are deterministic.
std::int64_t count_avoiders_matching(int n, const std::function<bool(const Permutation&)>& pred,
                                     const Guards& guards = {}, int workers = 1);

/// C_n = binom(2n, n)/(n+1), overflow-checked, defined here for 0 <= n <= 32.
std::int64_t catalan(int n);

/// C_n via the convolution c_{n+1} = sum c_k c_{n-k}, c_0 = 1. Kept separate
/// from catalan() as an independent oracle.
std::int64_t catalan_by_recursion(int n);

enum class SequenceFamily {
  catalan,         // C_n, n >= 0
  pow2_ceiling,    // ceil(2^(n-1)), n >= 0
  even_fibonacci,  // F_{2n-2} with F_0 = F_1 = 1, n >= 1
  quadratic,       // (n^2 - n + 2)/2, n >= 1
};

struct SequenceSpec {
  SequenceFamily family = SequenceFamily::catalan;
};

std::int64_t closed_form(const SequenceSpec& spec, int n);

std::optional<SequenceFamily> sequence_family_from_name(std::string_view name);
std::string_view sequence_family_name(SequenceFamily family);
/// Smallest n the family is defined for.
int sequence_first_index(SequenceFamily family);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace avoidlab
