#pragma once

#include <string>

#include "avoidlab/binary_tree.hpp"
#include "avoidlab/permutation.hpp"

namespace avoidlab {

/// The completion map from 132-avoiding permutations of length n to
/// 132-avoiding alternating permutations of length 2n+1: build the decreasing
/// tree, erase labels, complete the shape, relabel canonically, read back in
/// order. The empty permutation maps to <1>.
///
/// Rejects input containing 132, naming one offending occurrence.
Permutation phi(const Permutation& w);

/// Inverse of phi: standardize the even-position entries. Rejects input that
/// is not alternating, not of odd length, or contains 132.
Permutation phi_inverse(const Permutation& v);

/// phi applied to a pattern; the default companion pattern for p in the
/// avoidance-transfer machinery.
inline Pattern phi_pattern(const Pattern& p) { return phi(p); }

/// A pattern pair (p, q) for the avoidance-transfer theorem: the classes
/// avoiding {132, p} at length n and the alternating classes avoiding
/// {132, q} at length 2n+1 are in bijection under phi whenever `valid`.
struct PatternPair {
  Pattern p;
  Pattern q;
  bool valid = false;
};

/// True iff q is contained in phi(p) and some occurrence of p inside q uses
/// no left-to-right-minimum position of q. Requires p to avoid 132.
bool validate_q(const Pattern& p, const Pattern& q);

enum class CorollaryFamily {
  k12,  // p = 12...k,        q = 12...(k+1),          k >= 1
  k21x, // p = 2134...k,      q = 341256...(k+2),      k >= 2
  xk21, // p = k(k-1)...21,   q = phi(p) minus final 1, k >= 2
};

/// Family name as used on the command line: "12k", "21k", "k21".
std::string corollary_family_name(CorollaryFamily family);

/// The named (p, q) pair for the family at parameter k, with validity
/// confirmed via validate_q. Throws on out-of-range k.
PatternPair corollary_q(CorollaryFamily family, int k);

/// Drops the forced trailing 1 from an odd-length alternating 132-avoider and
/// decrements the rest, landing in the even-length class.
Permutation shrink_odd_to_even(const Permutation& w);

/// Inverse of shrink_odd_to_even: increment every entry and append 1.
Permutation grow_even_to_odd(const Permutation& w);

/// The pattern transform matching shrink_odd_to_even: a pattern ending in 1
/// loses that entry and the rest are decremented; anything else passes
/// through. reduce_pattern_for_even(<1>) is the empty pattern, which counting
/// callers must reject.
Pattern reduce_pattern_for_even(const Pattern& p);

}  // namespace avoidlab
