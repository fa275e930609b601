#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "hecke/weyl.hpp"

using namespace hecke;

namespace {

Perm p(const char* s, int n) { return Perm::parse(s, n); }

// x <= y iff a reduced word of y has a subword whose product is x.
bool bruhat_by_subwords(const Perm& x, const Perm& y) {
  const std::vector<int> word = y.reduced_word();
  const int k = static_cast<int>(word.size());
  for (int mask = 0; mask < (1 << k); ++mask) {
    std::vector<int> sub;
    for (int i = 0; i < k; ++i)
      if (mask & (1 << i)) sub.push_back(word[i]);
    if (Perm::from_word(sub, y.rank()) == x) return true;
  }
  return false;
}

int inversions(const Perm& w) {
  int c = 0;
  for (int i = 1; i <= w.rank(); ++i)
    for (int j = i + 1; j <= w.rank(); ++j)
      if (w(i) > w(j)) ++c;
  return c;
}

}  // namespace

TEST_SUITE("weyl") {

TEST_CASE("group operations") {
  const Perm s = p("213", 3), t = p("132", 3), e = Perm::identity(3);
  CHECK(compose(s, s) == e);
  CHECK(compose(s, t) == p("231", 3));
  CHECK(inverse(p("231", 3)) == p("312", 3));
  CHECK(compose(e, s) == s);
  CHECK(Perm::simple(1, 3) == s);
  CHECK(p("s1 s2", 3) == p("231", 3));
  CHECK(p("s1,s2,s1", 3) == longest_element(3));
  CHECK(p("e", 3) == e);
  CHECK_THROWS_AS(compose(s, Perm::identity(4)), std::invalid_argument);
  CHECK_THROWS_AS(p("2134", 3), std::invalid_argument);
  CHECK_THROWS_AS(p("s0", 3), std::invalid_argument);
  CHECK_THROWS_AS(p("221", 3), std::invalid_argument);
}

TEST_CASE("length, descents and reduced words") {
  CHECK(length(Perm::identity(4)) == 0);
  CHECK(length(longest_element(4)) == 6);
  CHECK(length(p("s1 s2 s1", 3)) == 3);
  CHECK(Perm::identity(3).reduced_word().empty());
  CHECK(longest_element(3).reduced_word().size() == 3);
  CHECK(longest_element(5).right_descents() == std::vector<int>{1, 2, 3, 4});
  for (int n = 1; n <= 5; ++n)
    for (const Perm& w : all_elements(n)) {
      CHECK(w.length() == inversions(w));
      CHECK(compose(w, inverse(w)) == Perm::identity(n));
      const auto word = w.reduced_word();
      CHECK(static_cast<int>(word.size()) == w.length());
      CHECK(Perm::from_word(word, n) == w);
      const auto rd = w.right_descents(), ld = w.left_descents();
      for (int i = 1; i < n; ++i) {
        const Perm s = Perm::simple(i, n);
        const bool right = std::count(rd.begin(), rd.end(), i) > 0;
        const bool left = std::count(ld.begin(), ld.end(), i) > 0;
        CHECK(right == (compose(w, s).length() < w.length()));
        CHECK(left == (compose(s, w).length() < w.length()));
      }
    }
}

TEST_CASE("subadditivity of length and reduced concatenation in S4") {
  const auto all = all_elements(4);
  for (const Perm& x : all)
    for (const Perm& y : all) {
      const int lxy = compose(x, y).length();
      CHECK(lxy <= x.length() + y.length());
      CHECK((lxy - x.length() - y.length()) % 2 == 0);
      // The concatenated word is reduced iff each letter raises the length.
      Perm acc = x;
      bool increasing = true;
      for (int i : y.reduced_word()) {
        const Perm next = compose(acc, Perm::simple(i, 4));
        if (next.length() < acc.length()) increasing = false;
        acc = next;
      }
      CHECK((lxy == x.length() + y.length()) == increasing);
    }
}

TEST_CASE("Bruhat order against subwords") {
  CHECK(bruhat_leq(p("213", 3), p("321", 3)));
  CHECK_FALSE(bruhat_leq(p("231", 3), p("312", 3)));
  for (int n = 3; n <= 4; ++n) {
    const auto all = all_elements(n);
    for (const Perm& x : all) {
      CHECK(bruhat_leq(Perm::identity(n), x));
      for (const Perm& y : all) CHECK(bruhat_leq(x, y) == bruhat_by_subwords(x, y));
    }
  }
}

TEST_CASE("enumeration and involutions") {
  CHECK(all_elements(4).size() == 24);
  CHECK(longest_element(4).is_involution());
  const auto all = all_elements(4);
  CHECK(std::count_if(all.begin(), all.end(), [](const Perm& w) { return w.is_involution(); }) == 10);
  CHECK(std::set<Perm>(all.begin(), all.end()).size() == 24);
  const bool ordered = std::is_sorted(all.begin(), all.end(), LengthLexLess{}) ||
                       std::is_sorted(all.begin(), all.end());
  CHECK(ordered);
}

TEST_CASE("standard parabolics") {
  CHECK(parabolic_longest(Parabolic::trivial(4)) == Perm::identity(4));
  CHECK(parabolic_longest(Parabolic::full(4)) == longest_element(4));
  CHECK(parabolic_elements(Parabolic(4, {1, 2})).size() == 6);
  CHECK(parabolic_longest(Parabolic(4, {1, 3})) == p("2143", 4));
  CHECK(Parabolic::all(4).size() == 8);
  CHECK_THROWS_AS(Parabolic(3, {3}), std::invalid_argument);
  for (const Parabolic& J : Parabolic::all(4)) {
    const auto elems = parabolic_elements(J);
    const Perm w0 = parabolic_longest(J);
    int longest_count = 0;
    for (const Perm& x : elems) {
      CHECK(x.length() <= w0.length());
      if (x.length() == w0.length()) ++longest_count;
    }
    CHECK(longest_count == 1);
    CHECK(std::find(elems.begin(), elems.end(), w0) != elems.end());
  }
}

TEST_CASE("coset representatives") {
  CHECK(coset_min_representatives(Parabolic::full(4), CosetSide::kLeft) ==
        std::vector<Perm>{Perm::identity(4)});
  CHECK(coset_min_representatives(Parabolic::trivial(3), CosetSide::kRight).size() == 6);
  for (const Parabolic& J : Parabolic::all(4)) {
    const auto elems = parabolic_elements(J);
    const int lw0 = parabolic_longest(J).length();
    CHECK(coset_min_representatives(J, CosetSide::kLeft).size() * elems.size() == 24);
    for (const Perm& w : all_elements(4)) {
      for (CosetSide side : {CosetSide::kLeft, CosetSide::kRight}) {
        // Brute force over the coset.
        std::vector<Perm> coset;
        for (const Perm& a : elems) coset.push_back(side == CosetSide::kLeft ? compose(a, w) : compose(w, a));
        auto by_length = [](const Perm& a, const Perm& b) { return a.length() < b.length(); };
        const Perm lo = *std::min_element(coset.begin(), coset.end(), by_length);
        const Perm hi = *std::max_element(coset.begin(), coset.end(), by_length);
        CHECK(coset_min_representative(J, w, side) == lo);
        CHECK(coset_max_representative(J, w, side) == hi);
        CHECK(hi.length() == lw0 + lo.length());
      }
    }
  }
}

TEST_CASE("group tables") {
  const WeylGroup W(4);
  CHECK(W.size() == 24);
  CHECK(W.elem(W.identity()) == Perm::identity(4));
  CHECK(W.elem(W.longest()) == longest_element(4));
  for (int x = 0; x < W.size(); ++x) {
    CHECK(W.index(W.elem(x)) == x);
    CHECK(W.length(x) == W.elem(x).length());
    CHECK(W.elem(W.inverse(x)) == inverse(W.elem(x)));
    if (x > 0) CHECK(LengthLexLess{}(W.elem(x - 1), W.elem(x)));
    for (int y = 0; y < W.size(); ++y) {
      CHECK(W.elem(W.mul(x, y)) == compose(W.elem(x), W.elem(y)));
      CHECK(W.bruhat_leq(x, y) == bruhat_leq(W.elem(x), W.elem(y)));
    }
  }
  const WeylGroup P(Parabolic(4, {1, 3}));
  CHECK(P.size() == 4);
  CHECK(P.contains(p("2143", 4)));
  CHECK_FALSE(P.contains(p("1324", 4)));
  CHECK_THROWS_AS(P.index(p("1324", 4)), std::out_of_range);
}

}  // TEST_SUITE
