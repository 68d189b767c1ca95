#include "avoidlab/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <climits>
#include <future>
#include <numeric>

#include "avoidlab/bijection.hpp"
#include "avoidlab/errors.hpp"

namespace avoidlab {

namespace {

void check_length(int n) {
  if (n < 0) throw ValidationError("negative length " + std::to_string(n));
}

void check_full_scan(int n, const Guards& g) {
  check_length(n);
  if (n > g.full_scan_max) {
    throw GuardError("full scan of length " + std::to_string(n) +
                     " exceeds the guard (" + std::to_string(g.full_scan_max) + ")");
  }
}

void check_structural(int n, const Guards& g) {
  check_length(n);
  if (n > g.structural_max) {
    throw GuardError("structural generation of length " + std::to_string(n) +
                     " exceeds the guard (" + std::to_string(g.structural_max) + ")");
  }
  if (n > 62) {
    throw GuardError("structural generation is limited to length 62");
  }
}

}  // namespace

PermutationStream::PermutationStream(int n, const Guards& guards) : n_(n) {
  check_full_scan(n, guards);
  current_.resize(static_cast<size_t>(n));
  std::iota(current_.begin(), current_.end(), 1);
}

std::optional<Permutation> PermutationStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return Permutation(std::vector<int>(current_));
  }
  if (!std::next_permutation(current_.begin(), current_.end())) {
    done_ = true;
    return std::nullopt;
  }
  return Permutation(std::vector<int>(current_));
}

AvoiderStream::AvoiderStream(int n, const Guards& guards) : n_(n) {
  check_structural(n, guards);
  w_.resize(static_cast<size_t>(n));
  used_.assign(static_cast<size_t>(n) + 1, 0);
  forb_.assign(static_cast<size_t>(n) + 1, 0);
  pmin_.assign(static_cast<size_t>(n) + 1, INT_MAX);
}

// Depth-first successor within the class. A value v may extend a prefix iff
// it is unused and no earlier pair a < v < c (a before c) exists; such pairs
// are tracked as the bit union forb_ of open value intervals, which is exactly
// the condition for the prefix to stay 132-avoiding.
bool AvoiderStream::advance() {
  const std::uint64_t full = (1ULL << n_) - 1;
  auto above = [](int v) -> std::uint64_t {
    const int r = v - 1;
    return r >= 63 ? 0 : ~((2ULL << r) - 1);
  };

  int d;
  std::uint64_t allowed_from;
  if (!started_) {
    d = 0;
    allowed_from = ~0ULL;
  } else {
    d = n_ - 1;
    allowed_from = above(w_[static_cast<size_t>(d)]);
  }

  while (true) {
    const size_t ud = static_cast<size_t>(d);
    const std::uint64_t avail = full & ~used_[ud] & ~forb_[ud] & allowed_from;
    if (avail != 0) {
      const int bit = std::countr_zero(avail);
      const int v = bit + 1;
      w_[ud] = v;
      used_[ud + 1] = used_[ud] | (1ULL << bit);
      forb_[ud + 1] = forb_[ud];
      if (pmin_[ud] < v) {
        forb_[ud + 1] |= ((1ULL << bit) - 1) & ~((2ULL << (pmin_[ud] - 1)) - 1);
      }
      pmin_[ud + 1] = std::min(pmin_[ud], v);
      if (d == n_ - 1) return true;
      ++d;
      allowed_from = ~0ULL;
    } else {
      if (d == 0) return false;
      --d;
      allowed_from = above(w_[static_cast<size_t>(d)]);
    }
  }
}

std::optional<Permutation> AvoiderStream::next() {
  if (done_) return std::nullopt;
  if (n_ == 0) {
    if (started_) {
      done_ = true;
      return std::nullopt;
    }
    started_ = true;
    return Permutation();
  }
  if (!advance()) {
    done_ = true;
    return std::nullopt;
  }
  started_ = true;
  return Permutation(std::vector<int>(w_));
}

namespace {

int alternating_source_size(int odd_length) {
  check_length(odd_length);
  if (odd_length % 2 == 0) {
    throw ValidationError(
        "alternating enumeration needs odd length; even lengths go through the "
        "parity reduction");
  }
  return (odd_length - 1) / 2;
}

}  // namespace

AlternatingAvoiderStream::AlternatingAvoiderStream(int odd_length, const Guards& guards)
    : inner_(alternating_source_size(odd_length), guards) {}

std::optional<Permutation> AlternatingAvoiderStream::next() {
  auto w = inner_.next();
  if (!w) return std::nullopt;
  Permutation image = phi(*w);
  assert(is_alternating(image));
  assert(!contains(image, pattern_132()));
  return image;
}

std::vector<Permutation> gen_all(int n, const Guards& guards) {
  PermutationStream stream(n, guards);
  std::vector<Permutation> out;
  while (auto w = stream.next()) out.push_back(std::move(*w));
  return out;
}

std::vector<Permutation> gen_avoiders_132(int n, const Guards& guards) {
  AvoiderStream stream(n, guards);
  std::vector<Permutation> out;
  while (auto w = stream.next()) out.push_back(std::move(*w));
  return out;
}

std::vector<Permutation> gen_alternating_avoiders_132(int m, const Guards& guards) {
  AlternatingAvoiderStream stream(m, guards);
  std::vector<Permutation> out;
  while (auto w = stream.next()) out.push_back(std::move(*w));
  return out;
}

namespace {

// Validates extras and splits off the ones whose avoidance is already implied
// by avoiding 132.
std::vector<Pattern> keep_effective(std::span<const Pattern> extras,
                                    std::vector<Pattern>* dropped) {
  std::vector<Pattern> kept;
  for (const Pattern& p : extras) {
    if (p.empty()) {
      throw ValidationError("counting rejects the empty pattern");
    }
    if (contains(p, pattern_132())) {
      if (dropped) dropped->push_back(p);
      continue;
    }
    kept.push_back(p);
  }
  return kept;
}

}  // namespace

std::int64_t count_avoiders_matching(int n,
                                     const std::function<bool(const Permutation&)>& pred,
                                     const Guards& guards, int workers) {
  check_structural(n, guards);
  if (workers <= 1 || n == 0) {
    AvoiderStream stream(n, guards);
    std::int64_t count = 0;
    while (auto w = stream.next()) {
      if (pred(*w)) count = checked_add(count, 1);
    }
    return count;
  }

  // Partition by the position of the maximum: entries before n form an
  // avoider of the top block, entries after one of the bottom block.
  auto count_with_left_size = [&](int left) -> std::int64_t {
    const int right = n - 1 - left;
    const int shift = right;  // left block occupies {right+1 .. n-1}
    std::int64_t count = 0;
    AvoiderStream left_stream(left, guards);
    while (auto lp = left_stream.next()) {
      std::vector<int> assembled(static_cast<size_t>(n));
      for (int i = 0; i < left; ++i) {
        assembled[static_cast<size_t>(i)] = lp->entries()[static_cast<size_t>(i)] + shift;
      }
      assembled[static_cast<size_t>(left)] = n;
      AvoiderStream right_stream(right, guards);
      while (auto rp = right_stream.next()) {
        for (int i = 0; i < right; ++i) {
          assembled[static_cast<size_t>(left + 1 + i)] =
              rp->entries()[static_cast<size_t>(i)];
        }
        if (pred(Permutation(std::vector<int>(assembled)))) {
          count = checked_add(count, 1);
        }
      }
    }
    return count;
  };

  std::vector<std::future<std::int64_t>> tasks;
  tasks.reserve(static_cast<size_t>(n));
  for (int left = 0; left < n; ++left) {
    tasks.push_back(std::async(std::launch::async, count_with_left_size, left));
  }
  std::int64_t total = 0;
  for (auto& task : tasks) total = checked_add(total, task.get());
  return total;
}

CountResult count_s(int n, std::span<const Pattern> extra_patterns, const Guards& guards,
                    int workers) {
  CountResult result;
  const std::vector<Pattern> kept = keep_effective(extra_patterns, &result.dropped);
  result.value = count_avoiders_matching(
      n, [&](const Permutation& w) { return avoids_all(w, kept); }, guards, workers);
  return result;
}

CountResult count_a(int m, std::span<const Pattern> extra_patterns, const Guards& guards,
                    int workers) {
  check_length(m);
  CountResult result;
  std::vector<Pattern> kept = keep_effective(extra_patterns, &result.dropped);

  if (m % 2 == 0) {
    // Count at odd length m+1 through the parity correspondence. An even-side
    // pattern ending in 1 is matched by its odd-side preimage (shift up,
    // append 1); any other pattern transfers unchanged.
    std::vector<Pattern> odd_side;
    odd_side.reserve(kept.size());
    for (const Pattern& r : kept) {
      if (r.at(r.size()) != 1) {
        odd_side.push_back(r);
        continue;
      }
      std::vector<int> grown;
      grown.reserve(static_cast<size_t>(r.size()) + 1);
      for (int v : r.entries()) grown.push_back(v + 1);
      grown.push_back(1);
      odd_side.emplace_back(std::move(grown));
    }
    CountResult odd = count_a(m + 1, odd_side, guards, workers);
    result.value = odd.value;
    return result;
  }

  const int n = (m - 1) / 2;
  result.value = count_avoiders_matching(
      n, [&](const Permutation& w) { return avoids_all(phi(w), kept); }, guards, workers);
  return result;
}

std::int64_t count_a_brute_force(int m, std::span<const Pattern> extra_patterns,
                                 const Guards& guards) {
  std::vector<Pattern> dropped;
  const std::vector<Pattern> kept = keep_effective(extra_patterns, &dropped);
  PermutationStream stream(m, guards);
  std::int64_t count = 0;
  while (auto w = stream.next()) {
    if (!is_alternating(*w)) continue;
    if (contains(*w, pattern_132())) continue;
    if (!avoids_all(*w, kept)) continue;
    count = checked_add(count, 1);
  }
  return count;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("64-bit addition overflow");
  }
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("64-bit multiplication overflow");
  }
  return out;
}

std::int64_t catalan(int n) {
  if (n < 0 || n > 32) {
    throw ValidationError("catalan(n) is provided for 0 <= n <= 32");
  }
  std::int64_t c = 1;
  for (int k = 0; k < n; ++k) {
    // C_{k+1} = C_k * 2(2k+1) / (k+2); the division is exact.
    const std::int64_t t = checked_mul(c, 2 * (2 * static_cast<std::int64_t>(k) + 1));
    assert(t % (k + 2) == 0);
    c = t / (k + 2);
  }
  return c;
}

std::int64_t catalan_by_recursion(int n) {
  if (n < 0 || n > 32) {
    throw ValidationError("catalan_by_recursion(n) is provided for 0 <= n <= 32");
  }
  std::vector<std::int64_t> s(static_cast<size_t>(n) + 1, 0);
  s[0] = 1;
  for (int m = 0; m < n; ++m) {
    std::int64_t acc = 0;
    for (int k = 0; k <= m; ++k) {
      acc = checked_add(acc, checked_mul(s[static_cast<size_t>(k)],
                                         s[static_cast<size_t>(m - k)]));
    }
    s[static_cast<size_t>(m) + 1] = acc;
  }
  return s[static_cast<size_t>(n)];
}

std::int64_t closed_form(const SequenceSpec& spec, int n) {
  switch (spec.family) {
    case SequenceFamily::catalan:
      return catalan(n);
    case SequenceFamily::pow2_ceiling: {
      if (n < 0) throw ValidationError("pow2-ceiling needs n >= 0");
      if (n == 0) return 1;  // ceil(2^-1)
      if (n - 1 >= 63) throw OverflowError("2^" + std::to_string(n - 1) + " overflows");
      return std::int64_t{1} << (n - 1);
    }
    case SequenceFamily::even_fibonacci: {
      if (n < 1) throw ValidationError("even-fibonacci needs n >= 1");
      std::int64_t a = 1, b = 1;  // F_0, F_1
      for (int i = 2; i <= 2 * n - 2; ++i) {
        const std::int64_t next = checked_add(a, b);
        a = b;
        b = next;
      }
      return 2 * n - 2 == 0 ? a : b;
    }
    case SequenceFamily::quadratic: {
      if (n < 1) throw ValidationError("quadratic needs n >= 1");
      const std::int64_t nn = checked_mul(n, n);
      return checked_add(nn - n, 2) / 2;
    }
  }
  throw ValidationError("unknown sequence family");
}

std::optional<SequenceFamily> sequence_family_from_name(std::string_view name) {
  if (name == "catalan") return SequenceFamily::catalan;
  if (name == "pow2-ceiling") return SequenceFamily::pow2_ceiling;
  if (name == "even-fibonacci") return SequenceFamily::even_fibonacci;
  if (name == "quadratic") return SequenceFamily::quadratic;
  return std::nullopt;
}

std::string_view sequence_family_name(SequenceFamily family) {
  switch (family) {
    case SequenceFamily::catalan: return "catalan";
    case SequenceFamily::pow2_ceiling: return "pow2-ceiling";
    case SequenceFamily::even_fibonacci: return "even-fibonacci";
    case SequenceFamily::quadratic: return "quadratic";
  }
  return "?";
}

int sequence_first_index(SequenceFamily family) {
  switch (family) {
    case SequenceFamily::catalan:
    case SequenceFamily::pow2_ceiling:
      return 0;
    case SequenceFamily::even_fibonacci:
    case SequenceFamily::quadratic:
      return 1;
  }
  return 0;
}

}  // namespace avoidlab
