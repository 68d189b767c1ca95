#include "avoidlab/bijection.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "avoidlab/errors.hpp"

namespace avoidlab {

namespace {

void require_avoids_132(const Permutation& w, const char* role) {
  if (auto occ = first_occurrence(w, pattern_132())) {
    throw ValidationError(std::string(role) + " contains 132 at positions " +
                          occurrence_str(*occ));
  }
}

}  // namespace

Permutation phi(const Permutation& w) {
  require_avoids_132(w, "input");
  if (w.empty()) return Permutation(std::vector<int>{1});
  LabeledBinaryTree t = build_decreasing_tree(w);
  BinaryTree shape = erase_labels(t);
  BinaryTree completed = complete(shape);
  Permutation image = tree_to_permutation(canonical_label(completed));
  assert(image.size() == 2 * w.size() + 1);
  assert(is_alternating(image));
  return image;
}

Permutation phi_inverse(const Permutation& v) {
  if (v.size() % 2 == 0) {
    throw ValidationError("inverse needs odd length, got " + std::to_string(v.size()));
  }
  if (!is_alternating(v)) {
    throw ValidationError("inverse needs an alternating permutation");
  }
  require_avoids_132(v, "input");
  std::vector<int> evens;
  evens.reserve(static_cast<size_t>(v.size() / 2));
  for (int pos = 2; pos <= v.size(); pos += 2) evens.push_back(v.at(pos));
  return standardize(evens);
}

bool validate_q(const Pattern& p, const Pattern& q) {
  require_avoids_132(p, "pattern p");
  if (p.empty() || q.empty()) {
    throw ValidationError("pattern pairs need nonempty patterns");
  }
  if (!contains(phi(p), q)) return false;
  const std::vector<int> minima = left_to_right_minima(q);
  for (const Occurrence& occ : occurrences(q, p)) {
    bool hits_minimum = false;
    for (int pos : occ) {
      if (std::binary_search(minima.begin(), minima.end(), pos)) {
        hits_minimum = true;
        break;
      }
    }
    if (!hits_minimum) return true;
  }
  return false;
}

std::string corollary_family_name(CorollaryFamily family) {
  switch (family) {
    case CorollaryFamily::k12: return "12k";
    case CorollaryFamily::k21x: return "21k";
    case CorollaryFamily::xk21: return "k21";
  }
  return "?";
}

PatternPair corollary_q(CorollaryFamily family, int k) {
  PatternPair pair;
  switch (family) {
    case CorollaryFamily::k12: {
      if (k < 1) throw ValidationError("family 12k needs k >= 1");
      pair.p = Permutation::identity(k);
      pair.q = Permutation::identity(k + 1);
      break;
    }
    case CorollaryFamily::k21x: {
      if (k < 2) throw ValidationError("family 21k needs k >= 2");
      std::vector<int> p(static_cast<size_t>(k));
      std::iota(p.begin(), p.end(), 1);
      std::swap(p[0], p[1]);  // 2134...k
      std::vector<int> q(static_cast<size_t>(k) + 2);
      std::iota(q.begin(), q.end(), 1);
      q[0] = 3;
      q[1] = 4;
      q[2] = 1;
      q[3] = 2;  // 341256...(k+2)
      pair.p = Permutation(std::move(p));
      pair.q = Permutation(std::move(q));
      break;
    }
    case CorollaryFamily::xk21: {
      if (k < 2) throw ValidationError("family k21 needs k >= 2");
      std::vector<int> p(static_cast<size_t>(k));
      for (int i = 0; i < k; ++i) p[static_cast<size_t>(i)] = k - i;
      pair.p = Permutation(std::move(p));
      const Permutation image = phi(pair.p);
      std::vector<int> trimmed(image.entries().begin(), image.entries().end() - 1);
      pair.q = standardize(trimmed);
      break;
    }
  }
  pair.valid = validate_q(pair.p, pair.q);
  return pair;
}

Permutation shrink_odd_to_even(const Permutation& w) {
  if (w.size() % 2 == 0) {
    throw ValidationError("shrink needs odd length, got " + std::to_string(w.size()));
  }
  if (!is_alternating(w)) {
    throw ValidationError("shrink needs an alternating permutation");
  }
  require_avoids_132(w, "input");
  if (w.at(w.size()) != 1) {
    throw ValidationError("last entry must be 1, got " + std::to_string(w.at(w.size())));
  }
  std::vector<int> out;
  out.reserve(static_cast<size_t>(w.size() - 1));
  for (int pos = 1; pos < w.size(); ++pos) out.push_back(w.at(pos) - 1);
  return Permutation(std::move(out));
}

Permutation grow_even_to_odd(const Permutation& w) {
  if (w.size() % 2 != 0) {
    throw ValidationError("grow needs even length, got " + std::to_string(w.size()));
  }
  if (!is_alternating(w)) {
    throw ValidationError("grow needs an alternating permutation");
  }
  require_avoids_132(w, "input");
  std::vector<int> out;
  out.reserve(static_cast<size_t>(w.size()) + 1);
  for (int v : w.entries()) out.push_back(v + 1);
  out.push_back(1);
  return Permutation(std::move(out));
}

Pattern reduce_pattern_for_even(const Pattern& p) {
  if (p.empty()) {
    throw ValidationError("cannot reduce the empty pattern");
  }
  if (p.at(p.size()) != 1) return p;
  std::vector<int> out;
  out.reserve(static_cast<size_t>(p.size() - 1));
  for (int pos = 1; pos < p.size(); ++pos) out.push_back(p.at(pos) - 1);
  return Pattern(std::move(out));
}

}  // namespace avoidlab
