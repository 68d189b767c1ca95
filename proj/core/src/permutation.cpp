#include "avoidlab/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

#include "avoidlab/errors.hpp"

namespace avoidlab {

namespace {

// Checks entries against {1..n} and reports the first offender.
void validate_entries(const std::vector<int>& entries) {
  const int n = static_cast<int>(entries.size());
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int v : entries) {
    if (v <= 0) {
      throw ValidationError("nonpositive value " + std::to_string(v) +
                            "; entries must be positive");
    }
    if (v > n) continue;  // reported below as a gap
    if (seen[static_cast<size_t>(v)]) {
      throw ValidationError("duplicate value " + std::to_string(v));
    }
    seen[static_cast<size_t>(v)] = true;
  }
  for (int v = 1; v <= n; ++v) {
    if (!seen[static_cast<size_t>(v)]) {
      throw ValidationError("values are not exactly {1.." + std::to_string(n) +
                            "}: missing " + std::to_string(v));
    }
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  validate_entries(entries_);
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw ValidationError("negative length");
  std::vector<int> e(static_cast<size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  return Permutation(std::move(e));
}

int Permutation::at(int pos) const {
  if (pos < 1 || pos > size()) {
    throw ValidationError("position " + std::to_string(pos) + " out of range 1.." +
                          std::to_string(size()));
  }
  return entries_[static_cast<size_t>(pos - 1)];
}

std::string Permutation::str() const {
  std::string out;
  if (size() <= 9) {
    for (int v : entries_) out += static_cast<char>('0' + v);
    return out;
  }
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  // Comma presence selects the notation; a bare digit string encodes one
  // value per character and is unambiguous only up to n = 9.
  if (text.find(',') == std::string_view::npos) {
    std::vector<int> entries;
    entries.reserve(text.size());
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw ValidationError(std::string("malformed token '") + c +
                              "' in digit string");
      }
      entries.push_back(c - '0');
    }
    if (entries.size() > 9) {
      throw ValidationError(
          "digit-string notation is limited to length 9; use comma-separated "
          "values");
    }
    return Permutation(std::move(entries));
  }

  std::vector<int> entries;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view token = text.substr(start, end - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (token.empty()) {
      throw ValidationError("malformed token: empty entry in comma-separated list");
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ValidationError("malformed token '" + std::string(token) + "'");
    }
    entries.push_back(value);
    if (end == text.size()) break;
    start = end + 1;
  }
  return Permutation(std::move(entries));
}

Permutation standardize(std::span<const int> values) {
  const size_t n = values.size();
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return values[a] < values[b]; });
  for (size_t i = 1; i < n; ++i) {
    if (values[order[i - 1]] == values[order[i]]) {
      throw ValidationError("duplicate value " + std::to_string(values[order[i]]) +
                            "; standardization needs pairwise-distinct input");
    }
  }
  std::vector<int> ranks(n);
  for (size_t rank = 0; rank < n; ++rank) {
    ranks[order[rank]] = static_cast<int>(rank) + 1;
  }
  return Permutation(std::move(ranks));
}

bool is_alternating(const Permutation& w) {
  const auto& e = w.entries();
  for (size_t i = 0; i + 1 < e.size(); ++i) {
    const bool rise = (i % 2 == 0);
    if (rise ? e[i] > e[i + 1] : e[i] < e[i + 1]) return false;
  }
  return true;
}

Permutation complement(const Permutation& w) {
  const int n = w.size();
  std::vector<int> e;
  e.reserve(static_cast<size_t>(n));
  for (int v : w.entries()) e.push_back(n + 1 - v);
  return Permutation(std::move(e));
}

namespace {

// Lexicographic DFS over index tuples. `emit` returns false to stop the scan.
// A partial embedding is abandoned when fewer host entries remain than
// pattern entries still to place.
bool scan_occurrences(const std::vector<int>& host, const std::vector<int>& pat,
                      const std::function<bool(const std::vector<int>&)>& emit) {
  const int n = static_cast<int>(host.size());
  const int k = static_cast<int>(pat.size());
  if (k == 0 || k > n) return true;

  std::vector<int> picked;  // 0-based host indices
  picked.reserve(static_cast<size_t>(k));

  std::function<bool(int)> descend = [&](int from) -> bool {
    const int slot = static_cast<int>(picked.size());
    if (slot == k) return emit(picked);
    for (int i = from; i <= n - (k - slot); ++i) {
      bool ok = true;
      for (int s = 0; s < slot && ok; ++s) {
        ok = (pat[static_cast<size_t>(s)] < pat[static_cast<size_t>(slot)]) ==
             (host[static_cast<size_t>(picked[static_cast<size_t>(s)])] <
              host[static_cast<size_t>(i)]);
      }
      if (!ok) continue;
      picked.push_back(i);
      if (!descend(i + 1)) return false;
      picked.pop_back();
    }
    return true;
  };
  return descend(0);
}

void require_nonempty_pattern(const Pattern& p) {
  if (p.empty()) throw ValidationError("containment queries need a nonempty pattern");
}

}  // namespace

bool contains(const Permutation& w, const Pattern& p) {
  require_nonempty_pattern(p);
  bool found = false;
  scan_occurrences(w.entries(), p.entries(), [&](const std::vector<int>&) {
    found = true;
    return false;
  });
  return found;
}

std::optional<Occurrence> first_occurrence(const Permutation& w, const Pattern& p) {
  require_nonempty_pattern(p);
  std::optional<Occurrence> result;
  scan_occurrences(w.entries(), p.entries(), [&](const std::vector<int>& idx) {
    Occurrence occ;
    occ.reserve(idx.size());
    for (int i : idx) occ.push_back(i + 1);
    result = std::move(occ);
    return false;
  });
  return result;
}

std::vector<Occurrence> occurrences(const Permutation& w, const Pattern& p) {
  require_nonempty_pattern(p);
  std::vector<Occurrence> all;
  scan_occurrences(w.entries(), p.entries(), [&](const std::vector<int>& idx) {
    Occurrence occ;
    occ.reserve(idx.size());
    for (int i : idx) occ.push_back(i + 1);
    all.push_back(std::move(occ));
    return true;
  });
  return all;
}

bool avoids_all(const Permutation& w, std::span<const Pattern> patterns) {
  for (const Pattern& p : patterns) {
    if (contains(w, p)) return false;
  }
  return true;
}

std::vector<int> left_to_right_minima(const Permutation& w) {
  std::vector<int> positions;
  int best = 0;
  const auto& e = w.entries();
  for (size_t i = 0; i < e.size(); ++i) {
    if (i == 0 || e[i] < best) {
      positions.push_back(static_cast<int>(i) + 1);
      best = e[i];
    }
  }
  return positions;
}

int lis_length(const Permutation& w) {
  // tails[len-1] = smallest tail value of an increasing subsequence of that
  // length; strictly increasing, so lower_bound keeps it exact.
  std::vector<int> tails;
  for (int v : w.entries()) {
    auto it = std::lower_bound(tails.begin(), tails.end(), v);
    if (it == tails.end()) {
      tails.push_back(v);
    } else {
      *it = v;
    }
  }
  return static_cast<int>(tails.size());
}

const Pattern& pattern_132() {
  static const Pattern p(std::vector<int>{1, 3, 2});
  return p;
}

std::string occurrence_str(const Occurrence& occ) {
  std::string out = "(";
  for (size_t i = 0; i < occ.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(occ[i]);
  }
  out += ')';
  return out;
}

}  // namespace avoidlab
