#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "avoidlab/bijection.hpp"
#include "avoidlab/enumerate.hpp"
#include "avoidlab/errors.hpp"
#include "support/oracles.hpp"

using namespace avoidlab;

namespace {

Permutation perm(const char* text) { return parse_permutation(text); }

std::vector<std::vector<int>> raw(const std::vector<Permutation>& ws) {
  std::vector<std::vector<int>> out;
  for (const Permutation& w : ws) out.push_back(w.entries());
  return out;
}

}  // namespace

TEST_CASE("gen_all lists n! permutations lexicographically") {
  CHECK(raw(gen_all(0)) == std::vector<std::vector<int>>{{}});
  CHECK(raw(gen_all(2)) == std::vector<std::vector<int>>{{1, 2}, {2, 1}});
  CHECK(gen_all(3).size() == 6);
  CHECK(raw(gen_all(3)) == oracle::all_perms(3));
}

TEST_CASE("gen_avoiders_132 matches the brute-force filter") {
  CHECK(raw(gen_avoiders_132(3)) ==
        std::vector<std::vector<int>>{
            {1, 2, 3}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}});
  CHECK(raw(gen_avoiders_132(0)) == std::vector<std::vector<int>>{{}});
  CHECK(gen_avoiders_132(4).size() == 14);
  for (int n = 0; n <= 8; ++n) {
    CHECK(raw(gen_avoiders_132(n)) == oracle::avoiders_132(n));
  }
}

TEST_CASE("avoider stream is lexicographic, duplicate-free, catalan-sized") {
  for (int n = 0; n <= 12; ++n) {
    AvoiderStream stream(n);
    std::int64_t count = 0;
    Permutation prev;
    while (auto w = stream.next()) {
      if (count > 0) REQUIRE(prev < *w);
      prev = std::move(*w);
      ++count;
    }
    CHECK(count == catalan(n));
  }
}

TEST_CASE("avoider stream count holds at the larger sizes") {
  AvoiderStream stream(14);
  std::int64_t count = 0;
  while (stream.next()) ++count;
  CHECK(count == catalan(14));
}

TEST_CASE("gen_alternating_avoiders_132 is the phi image") {
  CHECK(raw(gen_alternating_avoiders_132(3)) ==
        std::vector<std::vector<int>>{{2, 3, 1}});
  CHECK(raw(gen_alternating_avoiders_132(5)) ==
        std::vector<std::vector<int>>{{3, 4, 2, 5, 1}, {4, 5, 2, 3, 1}});
  CHECK(raw(gen_alternating_avoiders_132(1)) == std::vector<std::vector<int>>{{1}});
  for (int m = 1; m <= 9; m += 2) {
    auto got = raw(gen_alternating_avoiders_132(m));
    auto expected = oracle::alternating_avoiders_132(m);
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
  }
  CHECK_THROWS_AS(gen_alternating_avoiders_132(4), ValidationError);
}

TEST_CASE("alternating stream is lexicographic and duplicate-free") {
  for (int m = 1; m <= 13; m += 2) {
    AlternatingAvoiderStream stream(m);
    std::int64_t count = 0;
    Permutation prev;
    while (auto v = stream.next()) {
      if (count > 0) REQUIRE(prev < *v);
      prev = std::move(*v);
      ++count;
    }
    CHECK(count == catalan((m - 1) / 2));
  }
}

TEST_CASE("count_s with and without extra patterns") {
  CHECK(count_s(3, {}).value == 5);
  const std::vector<Pattern> p123{perm("123")};
  CHECK(count_s(3, p123).value == 4);
  const std::vector<Pattern> p12{perm("12")};
  for (int n = 1; n <= 7; ++n) {
    CHECK(count_s(n, p12).value == 1);
  }
}

TEST_CASE("count_s drops patterns that already contain 132, with notice") {
  const std::vector<Pattern> extras{perm("1432")};
  const CountResult r = count_s(4, extras);
  CHECK(r.value == catalan(4));
  REQUIRE(r.dropped.size() == 1);
  CHECK(r.dropped[0] == perm("1432"));
}

TEST_CASE("count_s rejects the empty pattern") {
  const std::vector<Pattern> extras{perm("")};
  CHECK_THROWS_AS(count_s(3, extras), ValidationError);
}

TEST_CASE("count_a on odd and even lengths") {
  CHECK(count_a(7, {}).value == 5);
  const std::vector<Pattern> p3412{perm("3412")};
  CHECK(count_a(7, p3412).value == 1);
  CHECK(count_a(6, {}).value == 5);
  CHECK(count_a(0, {}).value == 1);
  CHECK(count_a(1, {}).value == 1);
  for (int m = 0; m <= 9; ++m) {
    CHECK(count_a(m, {}).value == count_a_brute_force(m, {}));
  }
  const std::vector<Pattern> p21{perm("21")};
  for (int m = 2; m <= 8; m += 2) {
    CHECK(count_a(m, p21).value == count_a_brute_force(m, p21));
  }
}

TEST_CASE("even-length counting matches brute force for mixed pattern shapes") {
  // Trailing-1 patterns lift to their odd-side preimages; others carry over.
  const std::vector<std::vector<Pattern>> extra_sets{
      {perm("231")},
      {perm("3412")},
      {perm("231"), perm("3412")},
      {perm("1")},
      {perm("4231"), perm("21")},
  };
  for (const auto& extras : extra_sets) {
    for (int m = 0; m <= 8; m += 2) {
      CHECK(count_a(m, extras).value == count_a_brute_force(m, extras));
    }
  }
}

TEST_CASE("counting agrees between the partitioned and plain paths") {
  const std::vector<Pattern> extras{perm("123")};
  for (int n = 0; n <= 9; ++n) {
    const auto pred = [&](const Permutation& w) { return avoids_all(w, extras); };
    CHECK(count_avoiders_matching(n, pred, {}, 1) ==
          count_avoiders_matching(n, pred, {}, 4));
  }
}

TEST_CASE("catalan values and range") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(10) == 16796);
  for (int n = 0; n <= 14; ++n) {
    CHECK(catalan(n) == oracle::catalan_pascal(n));
    CHECK(catalan(n) == catalan_by_recursion(n));
  }
  CHECK(catalan_by_recursion(1) == 1);
  CHECK(catalan_by_recursion(4) == 14);
  CHECK(catalan_by_recursion(6) == 132);
  CHECK_THROWS_AS(catalan(-1), ValidationError);
  CHECK_THROWS_AS(catalan(33), ValidationError);
}

TEST_CASE("closed forms") {
  CHECK(closed_form({SequenceFamily::pow2_ceiling}, 0) == 1);
  CHECK(closed_form({SequenceFamily::pow2_ceiling}, 1) == 1);
  CHECK(closed_form({SequenceFamily::pow2_ceiling}, 3) == 4);
  CHECK(closed_form({SequenceFamily::even_fibonacci}, 1) == 1);
  CHECK(closed_form({SequenceFamily::even_fibonacci}, 2) == 2);
  CHECK(closed_form({SequenceFamily::even_fibonacci}, 3) == 5);
  CHECK(closed_form({SequenceFamily::even_fibonacci}, 4) == 13);
  CHECK(closed_form({SequenceFamily::quadratic}, 1) == 1);
  CHECK(closed_form({SequenceFamily::quadratic}, 3) == 4);
  CHECK(closed_form({SequenceFamily::quadratic}, 6) == 16);
  CHECK(closed_form({SequenceFamily::catalan}, 5) == 42);
  CHECK_THROWS_AS(closed_form({SequenceFamily::even_fibonacci}, 0), ValidationError);
  CHECK_THROWS_AS(closed_form({SequenceFamily::quadratic}, 0), ValidationError);
  CHECK_THROWS_AS(closed_form({SequenceFamily::pow2_ceiling}, -1), ValidationError);
  CHECK_THROWS_AS(closed_form({SequenceFamily::pow2_ceiling}, 80), OverflowError);
}

TEST_CASE("sequence family names") {
  CHECK(sequence_family_from_name("catalan") == SequenceFamily::catalan);
  CHECK(sequence_family_from_name("pow2-ceiling") == SequenceFamily::pow2_ceiling);
  CHECK(sequence_family_from_name("even-fibonacci") == SequenceFamily::even_fibonacci);
  CHECK(sequence_family_from_name("quadratic") == SequenceFamily::quadratic);
  CHECK_FALSE(sequence_family_from_name("nope").has_value());
  CHECK(sequence_family_name(SequenceFamily::pow2_ceiling) == "pow2-ceiling");
  CHECK(sequence_first_index(SequenceFamily::catalan) == 0);
  CHECK(sequence_first_index(SequenceFamily::quadratic) == 1);
}

TEST_CASE("guards stop oversized requests") {
  CHECK_THROWS_AS(gen_all(11), GuardError);
  CHECK_THROWS_AS(AvoiderStream(17), GuardError);
  CHECK_THROWS_AS(AlternatingAvoiderStream(35), GuardError);
  CHECK_THROWS_AS(gen_all(-1), ValidationError);

  const Guards tight{5, 8};
  CHECK_THROWS_AS(gen_all(6, tight), GuardError);
  CHECK_NOTHROW(gen_all(5, tight));
  CHECK_THROWS_AS(gen_avoiders_132(9, tight), GuardError);

  const Guards raised{12, 20};
  CHECK_NOTHROW(gen_all(4, raised));
  CHECK_THROWS_AS(gen_all(13, raised), GuardError);

  // Construction checks the guard; no enumeration happens yet.
  CHECK_NOTHROW(AvoiderStream(17, raised));
  const Guards huge{10, 100};
  CHECK_THROWS_AS(AvoiderStream(63, huge), GuardError);
  CHECK_THROWS_AS(count_a(34, {}), GuardError);
}

TEST_CASE("checked arithmetic reports overflow instead of wrapping") {
  CHECK_THROWS_AS(checked_add(INT64_MAX, 1), OverflowError);
  CHECK_THROWS_AS(checked_mul(INT64_MAX, 2), OverflowError);
  CHECK(checked_add(2, 3) == 5);
  CHECK(checked_mul(6, 7) == 42);
}
