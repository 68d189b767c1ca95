#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace avoidlab {

/// A permutation of {1..n} in one-line notation. Positions and values are
/// 1-based in the external contract; the empty permutation is a legal value.
/// Instances are immutable after construction and safe to share across
/// threads.
class Permutation {
 public:
  Permutation() = default;

  /// Validates that `entries` is exactly the set {1..n}. Throws
  /// ValidationError naming the first nonpositive, duplicate or missing
  /// value.
  explicit Permutation(std::vector<int> entries);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }

  /// Entry at 1-based position `pos`.
  int at(int pos) const;

  const std::vector<int>& entries() const { return entries_; }

  bool operator==(const Permutation& other) const { return entries_ == other.entries_; }
  bool operator!=(const Permutation& other) const { return !(*this == other); }
  bool operator<(const Permutation& other) const { return entries_ < other.entries_; }

  /// One-line notation: a digit string when n <= 9, comma-separated otherwise.
  std::string str() const;

 private:
  std::vector<int> entries_;
};

/// Patterns are permutations in the containment role; they must be nonempty
/// in containment queries.
using Pattern = Permutation;

/// Strictly increasing 1-based positions into a host permutation whose
/// induced subsequence is order-isomorphic to the queried pattern.
using Occurrence = std::vector<int>;

/// Parses one-line notation. A contiguous digit string is accepted only for
/// n <= 9 (one value per digit); longer permutations must be comma-separated
/// decimal integers. Distinct diagnostics for malformed tokens, nonpositive
/// values, duplicates, and gaps.
Permutation parse_permutation(std::string_view text);

/// Rank replacement: the unique permutation with the same relative order as
/// `values`. Rejects duplicate values.
Permutation standardize(std::span<const int> values);

/// w_1 < w_2 > w_3 < w_4 > ...; lengths 0 and 1 are vacuously alternating.
bool is_alternating(const Permutation& w);

/// Entry-wise n+1-w_i. An involution.
Permutation complement(const Permutation& w);

/// True iff some subsequence of `w` is order-isomorphic to `p`. Backtracking
/// over index choices with a remaining-length prune; exponential in the worst
/// case, which is acceptable at the enumeration scales the guards allow.
bool contains(const Permutation& w, const Pattern& p);

/// First occurrence in lexicographic index order, or nullopt.
std::optional<Occurrence> first_occurrence(const Permutation& w, const Pattern& p);

/// All occurrences of `p` in `w`, in lexicographic order of index tuples.
std::vector<Occurrence> occurrences(const Permutation& w, const Pattern& p);

/// True iff `w` contains none of `patterns`. The empty set is avoided
/// vacuously.
bool avoids_all(const Permutation& w, std::span<const Pattern> patterns);

/// 1-based positions i with w_i < w_j for all j < i, ascending. Position 1 is
/// always a left-to-right minimum of a nonempty permutation.
std::vector<int> left_to_right_minima(const Permutation& w);

/// Length of the longest strictly increasing subsequence; 0 for the empty
/// permutation.
int lis_length(const Permutation& w);

/// The pattern 132.
const Pattern& pattern_132();

/// Renders a 1-based index tuple as "(i,j,k)".
std::string occurrence_str(const Occurrence& occ);

}  // namespace avoidlab
