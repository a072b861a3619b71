#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "kn/enumerate.hpp"
#include "kn/tableau.hpp"

using namespace kn;
using kntest::tab;

namespace {

// Independent filter: every filling of the straight shape λ by letters,
// kept iff check_kn accepts it. Exercises nothing of the enumerator.
long brute_force_count(const Partition& lambda, int n) {
  std::vector<int> lengths;
  for (int j = 1; j <= lambda.part(1); ++j)
    lengths.push_back(lambda.conjugate_part(j));
  std::vector<Letter> alphabet;
  for (int rk = 1; rk <= 2 * n; ++rk)
    alphabet.push_back(Letter{rk <= n ? rk : rk - 2 * n - 1});

  long count = 0;
  std::vector<std::vector<Letter>> cols(lengths.size());
  std::function<void(size_t)> fill = [&](size_t j) {
    if (j == lengths.size()) {
      try {
        if (is_kn(SkewTableau::straight(n, cols))) ++count;
      } catch (const DomainError&) {
      }
      return;
    }
    std::function<void(int)> choose = [&](int from) {
      if (static_cast<int>(cols[j].size()) == lengths[j]) {
        fill(j + 1);
        return;
      }
      for (int i = from; i < 2 * n; ++i) {
        cols[j].push_back(alphabet[i]);
        choose(i + 1);
        cols[j].pop_back();
      }
    };
    choose(0);
  };
  fill(0);
  return count;
}

}  // namespace

TEST_CASE("split form") {
  SUBCASE("two-column worked example") {
    SkewTableau t = tab(3, "2 2\n3 3\n-3");
    CHECK(split_form(t) == tab(3, "1 2 2 2\n2 3 3 3\n-3 -1"));
  }
  SUBCASE("single admissible column") {
    SkewTableau t = SkewTableau::straight(
        4, {{Letter{2}, Letter{4}, Letter{-2}}});
    SkewTableau s = split_form(t);
    CHECK(s.column_letters(1) ==
          std::vector<Letter>{Letter{1}, Letter{4}, Letter{-2}});
    CHECK(s.column_letters(2) ==
          std::vector<Letter>{Letter{2}, Letter{4}, Letter{-1}});
  }
  SUBCASE("no symmetric pairs: columns duplicate") {
    SkewTableau t = tab(3, "1 2\n2");
    SkewTableau s = split_form(t);
    CHECK(s.column_letters(1) == s.column_letters(2));
    CHECK(s.column_letters(3) == s.column_letters(4));
    CHECK(s.shape().outer() == Partition({4, 2}));
  }
  SUBCASE("skew shape doubles columnwise") {
    SkewTableau t = tab(3, ". 2\n1 3\n2 -1");
    SkewTableau s = split_form(t);
    CHECK(s.shape().outer() == Partition({4, 4, 4}));
    CHECK(s.shape().inner() == Partition({2}));
  }
}

TEST_CASE("kashiwara-nakashima validity") {
  CHECK(is_kn(tab(3, "2 2\n3 3\n-3")));
  SUBCASE("one-column condition failure is reported") {
    auto rep = check_kn(tab(3, "1\n2\n-1"));
    CHECK_FALSE(rep.ok);
    CHECK(rep.reason.find("one-column") != std::string::npos);
  }
  SUBCASE("split-form row failure is reported") {
    // columns are admissible but the split form row decreases
    auto rep = check_kn(tab(2, "2 2\n-2 -2"));
    CHECK_FALSE(rep.ok);
    CHECK(rep.reason.find("row") != std::string::npos);
  }
  SUBCASE("unbarred semistandard tableaux are KN") {
    for_each_kn(Partition({2, 1}), 2, [](const SkewTableau& t) {
      bool unbarred = true;
      for (int j = 1; j <= t.num_columns(); ++j)
        for (Letter a : t.column_letters(j))
          if (is_barred(a)) unbarred = false;
      if (unbarred) CHECK(is_kn(t));
    });
  }
}

TEST_CASE("weight") {
  CHECK(weight(tab(3, "2 2\n3 3\n-3")) == WeightVector{0, 2, 1});
  CHECK(weight(SkewTableau::straight(3, {})) == WeightVector{0, 0, 0});
  CHECK(weight(kntest::hexagon_key()) == WeightVector{-3, -1, 2});
}

TEST_CASE("key tableaux") {
  CHECK(is_key(kntest::hexagon_key()));
  CHECK_FALSE(is_key(kntest::hexagon()));  // symmetric pair, not nested
  CHECK(is_key(tab(3, "2\n-3")));          // single column, no pair
  CHECK_THROWS_AS(is_key(tab(3, ". 2\n1 3\n2 -1")), DomainError);
}

TEST_CASE("key from vector") {
  CHECK(key_from_vector({-3, -1, 2}, 3) == kntest::hexagon_key());
  SUBCASE("highest weight key has constant rows") {
    CHECK(key_from_vector({2, 2, 1}, 3) == tab(3, "1 1\n2 2\n3"));
  }
  CHECK(key_from_vector({0, -1, 0}, 3) == tab(3, "-2"));
  CHECK_THROWS_AS(key_from_vector({1, 2}, 3), DomainError);
  CHECK(key_from_vector({4, 0, 0}, 3) == tab(3, "1 1 1 1"));
}

TEST_CASE("enumeration") {
  SUBCASE("single cell: the whole alphabet") {
    auto ts = enumerate_kn(Partition({1}), 2);
    CHECK(ts.size() == 4);
  }
  SUBCASE("one column of two cells, n=2: the admissible pairs") {
    auto ts = enumerate_kn(Partition({1, 1}), 2);
    CHECK(ts.size() == 5);
  }
  SUBCASE("matches the brute-force filter") {
    for (int n = 1; n <= 2; ++n)
      for (const Partition& lambda : kntest::shapes(4, n))
        CHECK(static_cast<long>(enumerate_kn(lambda, n).size()) ==
              brute_force_count(lambda, n));
  }
  SUBCASE("shapes taller than the rank are empty") {
    CHECK(enumerate_kn(Partition({1, 1, 1}), 2).empty());
  }
  SUBCASE("no duplicates, all valid, stable count") {
    for (const Partition& lambda : kntest::shapes(5, 3)) {
      std::set<std::string> seen;
      long count = 0;
      for_each_kn(lambda, 3, [&](const SkewTableau& t) {
        CHECK(is_kn(t));
        CHECK(t.shape().outer() == lambda);
        CHECK(seen.insert(format_tableau(t)).second);
        ++count;
      });
      CHECK(count == static_cast<long>(enumerate_kn(lambda, 3).size()));
    }
  }
}

TEST_CASE("orbit keys") {
  for (int n = 2; n <= 3; ++n)
    for (const Partition& lambda : kntest::shapes(4, n))
      for (const auto& v : orbit_vectors(lambda, n)) {
        SkewTableau k = key_from_vector(v, n);
        CHECK(weight(k) == v);
        CHECK(is_key(k));
        CHECK(k.shape().outer() == lambda);
      }
  // keys are the weight-unique elements: every enumerated key tableau is
  // recovered from its own weight
  for (const Partition& lambda : kntest::shapes(4, 2))
    for_each_kn(lambda, 2, [&](const SkewTableau& t) {
      if (is_key(t)) CHECK(key_from_vector(weight(t), 2) == t);
    });
}

TEST_CASE("orbit size matches the signed permutation count") {
  // lambda = (2,1), n=2: 2 arrangements x 4 sign choices
  CHECK(orbit_vectors(Partition({2, 1}), 2).size() == 8);
  // a repeated part halves the arrangements: (1,1) gives signs only
  CHECK(orbit_vectors(Partition({1, 1}), 2).size() == 4);
}
