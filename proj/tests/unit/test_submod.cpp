#include <doctest.h>

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hecke/cells.hpp"
#include "hecke/rs.hpp"
#include "hecke/submod.hpp"
#include "support.hpp"

using namespace hecke;
using testing_support::algebra;
using testing_support::idx;
using testing_support::qnum;

namespace {

const CellData& cells(int n) {
  static std::map<int, std::unique_ptr<CellData>> cache;
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<CellData>(algebra(n).kl_ptr());
  return *slot;
}

Coords combo(const HeckeAlgebra& H, const std::vector<std::pair<std::string, LaurentPoly>>& terms) {
  Coords c(H.size());
  for (const auto& [w, a] : terms) c[idx(H, w)] += a;
  return c;
}

Coords unit(const HeckeAlgebra& H, const std::string& w) { return unit_coords(H.size(), idx(H, w)); }

// Re-multiplies a certificate against the generators.
Coords recombine(const SubmoduleBasis& B, const Coords& cert) {
  Coords out(B.generators()[0].size());
  for (std::size_t z = 0; z < cert.size(); ++z)
    if (!cert[z].is_zero())
      for (std::size_t c = 0; c < out.size(); ++c) out[c].add_product(cert[z], B.generators()[z][c]);
  return out;
}

// The module spanned by `claimed` equals B and `claimed` is linearly independent.
void check_free_basis(const SubmoduleBasis& B, const std::vector<Coords>& claimed) {
  SubmoduleBasis C(B.group_ptr(), B.basis(), claimed);
  CHECK(rank_over_fraction_field(claimed) == static_cast<int>(claimed.size()));
  CHECK(B.rank_over_fraction_field() == static_cast<int>(claimed.size()));
  for (const Coords& c : claimed) CHECK(B.contains(c));
  for (const Coords& g : B.generators()) CHECK(C.contains(g));
}

}  // namespace

TEST_SUITE("submod") {

TEST_CASE("integer tools") {
  const std::vector<std::vector<Integer>> A = {{2, 4}, {3, 6}, {1, 1}};
  const auto K = integer_left_kernel(A);
  REQUIRE(K.size() == 1);
  for (int c = 0; c < 2; ++c) CHECK(K[0][0] * A[0][c] + K[0][1] * A[1][c] + K[0][2] * A[2][c] == 0);
  CHECK(abs(K[0][0]) == 3);
  CHECK(abs(K[0][1]) == 2);
  CHECK(lattice_contains({{2, 0}, {0, 3}}, {4, 9}));
  CHECK_FALSE(lattice_contains({{2, 0}, {0, 3}}, {1, 3}));
  CHECK(lattice_contains({{2, 3}, {3, 5}}, {1, 0}));
  const LaurentPoly v = LaurentPoly::v();
  CHECK(rank_over_fraction_field({{v, LaurentPoly(1)}, {v * v, v}}) == 1);
  CHECK(rank_over_fraction_field({{v, LaurentPoly(1)}, {LaurentPoly(1), v}}) == 2);
}

TEST_CASE("membership that needs more than the rank") {
  // The span of (v+v^-1, 0) and (1, 1) has full rank, contains
  // (0, v+v^-1) and misses (1, 0).
  auto W = std::make_shared<const WeylGroup>(2);
  const LaurentPoly q = qnum();
  SubmoduleBasis B(W, CoordBasis::kKL, {{q, LaurentPoly()}, {LaurentPoly(1), LaurentPoly(1)}});
  CHECK(B.rank_over_fraction_field() == 2);
  const auto no = B.membership({LaurentPoly(1), LaurentPoly()});
  CHECK_FALSE(no.member);
  CHECK_FALSE(no.rank_witness);
  CHECK_FALSE(no.normal_form.empty());
  REQUIRE(no.fp_obstruction);
  CHECK(no.fp_obstruction->first == 2);
  const auto yes = B.membership({LaurentPoly(), q});
  REQUIRE(yes.member);
  CHECK((recombine(B, yes.certificate) == Coords{LaurentPoly(), q}));
  // v-saturation: the span of v^2 (1, 0) is A (1, 0).
  SubmoduleBasis S(W, CoordBasis::kKL, {{LaurentPoly::monomial(2), LaurentPoly()}});
  CHECK(S.contains({LaurentPoly::monomial(-5, 3), LaurentPoly()}));
  CHECK_FALSE(S.contains({LaurentPoly(), LaurentPoly(1)}));
}

TEST_CASE("saturation needs a division by v") {
  // (1+v, 2) - (1-v, 2) = v (2, 0), but (2, 0) is not a Z[v]-combination.
  auto W = std::make_shared<const WeylGroup>(2);
  const LaurentPoly v = LaurentPoly::v();
  const LaurentPoly one(1), two(2);
  SubmoduleBasis B(W, CoordBasis::kKL, {{one + v, two}, {one - v, two}});
  const auto r = B.membership({two, LaurentPoly()});
  REQUIRE(r.member);
  CHECK((recombine(B, r.certificate) == Coords{two, LaurentPoly()}));
  CHECK_FALSE(B.contains({one, LaurentPoly()}));
}

TEST_CASE("KL cyclic modules in S3") {
  const auto& H = algebra(3);
  const auto Bs = cyclic_submodule_kl(H, idx(H, "213"));
  check_free_basis(Bs, {unit(H, "213"), unit(H, "312"), unit(H, "321")});
  const auto Bts = cyclic_submodule_kl(H, idx(H, "312"));
  check_free_basis(Bts, {unit(H, "312"), combo(H, {{"213", LaurentPoly(1)}, {"321", LaurentPoly(1)}}),
                         combo(H, {{"321", qnum()}})});

  const auto in = Bs.membership(unit(H, "312"));
  REQUIRE(in.member);
  CHECK((recombine(Bs, in.certificate) == unit(H, "312")));

  const auto out = Bts.membership(unit(H, "213"));
  CHECK_FALSE(out.member);
  CHECK_FALSE(out.rank_witness);
  CHECK_FALSE(is_zero(out.normal_form));
  REQUIRE(out.fp_obstruction);
  // v+v^-1 vanishes at v = 1 in F_2.
  CHECK(out.fp_obstruction->first == 2);
}

TEST_CASE("dual cyclic modules in S3") {
  const auto& H = algebra(3);
  const auto Bts = cyclic_submodule_dual(H, idx(H, "312"));
  check_free_basis(Bts, {unit(H, "312"), unit(H, "213"), unit(H, "123")});
  const auto Bs = cyclic_submodule_dual(H, idx(H, "213"));
  check_free_basis(Bs, {unit(H, "213"), combo(H, {{"312", LaurentPoly(1)}, {"123", LaurentPoly(1)}}),
                        combo(H, {{"312", qnum()}})});
  const auto in = Bts.membership(unit(H, "213"));
  REQUIRE(in.member);
  CHECK((recombine(Bts, in.certificate) == unit(H, "213")));
  CHECK_FALSE(Bs.contains(unit(H, "312")));
}

TEST_CASE("trivial ranks") {
  for (int n = 2; n <= 4; ++n) {
    const auto& H = algebra(n);
    CHECK(cyclic_submodule_kl(H, H.group().longest()).rank_over_fraction_field() == 1);
    CHECK(cyclic_submodule_kl(H, 0).rank_over_fraction_field() == H.size());
    // H H_w is everything.
    const int w = H.size() / 2;
    const auto B = cyclic_submodule(H, H.standard(w));
    CHECK(B.rank_over_fraction_field() == H.size());
    for (int u = 0; u < H.size(); ++u) CHECK(B.contains(unit_coords(H.size(), u)));
  }
}

TEST_CASE("the S4 element with small cyclic module") {
  const auto& H = algebra(4);
  const auto& C = cells(4);
  const int w = H.index(inverse_rs({{1, 3}, {2, 4}}, {{1, 2}, {3, 4}}));
  int nonvanishing = 0;
  for (int y = 0; y < H.size(); ++y)
    if (!is_zero(H.dual_right_products(unit_coords(H.size(), y), w)[w])) ++nonvanishing;
  CHECK(nonvanishing == 6);
  const auto B = cyclic_submodule_kl(H, w);
  CHECK(B.rank_over_fraction_field() <= 6);
  CHECK(B.rank_over_fraction_field() == nonvanishing);
  CHECK(C.lm_set(w).size() == 9);
  const auto cmp = equals_lm(H, C, w);
  CHECK_FALSE(cmp.equal);
  CHECK(cmp.span_size == 9);
  CHECK(cmp.missing.size() >= 3);
}

TEST_CASE("parabolic longest elements generate LM") {
  for (int n = 1; n <= 4; ++n) {
    const auto& H = algebra(n);
    for (const Parabolic& J : Parabolic::all(n)) {
      CAPTURE(J.to_string());
      const int w = H.index(parabolic_longest(J));
      CHECK(equals_lm(H, cells(n), w).equal);
    }
  }
}

TEST_CASE("dual modules of w0' w0 and w0 w0' equal LN") {
  for (int n = 1; n <= 4; ++n) {
    const auto& H = algebra(n);
    const WeylGroup& W = H.group();
    for (const Parabolic& J : Parabolic::all(n)) {
      CAPTURE(J.to_string());
      const int p = H.index(parabolic_longest(J));
      CHECK(equals_ln_dual(H, cells(n), W.mul(p, W.longest())).equal);
      CHECK(equals_ln_dual(H, cells(n), W.mul(W.longest(), p)).equal);
    }
  }
}

TEST_CASE("quasi-idempotents are the parabolic longest elements") {
  const auto& H2 = algebra(2);
  CHECK(*quasi_idempotent_check(H2, 1) == qnum());
  const auto& H3 = algebra(3);
  CHECK(*quasi_idempotent_check(H3, H3.group().longest()) ==
        (LaurentPoly{{3, 1}, {1, 2}, {-1, 2}, {-3, 1}}));
  CHECK_FALSE(quasi_idempotent_check(H3, idx(H3, "312")));
  for (int n = 1; n <= 4; ++n) {
    const auto& H = algebra(n);
    std::map<int, Parabolic> longest;
    for (const Parabolic& J : Parabolic::all(n)) longest[H.index(parabolic_longest(J))] = J;
    for (int w = 0; w < H.size(); ++w) {
      CAPTURE(H.group().elem(w).to_string());
      const auto a = quasi_idempotent_check(H, w);
      REQUIRE(a.has_value() == (longest.count(w) == 1));
      if (a) CHECK(*a == parabolic_quasi_idempotent_scalar(longest[w]));
    }
  }
}

TEST_CASE("inclusions of cyclic modules respect the left order") {
  for (int n = 2; n <= 4; ++n) {
    const auto& H = algebra(n);
    const auto& C = cells(n);
    const int N = H.size();
    for (int y = 0; y < N; ++y) {
      const auto B = cyclic_submodule_kl(H, y);
      const auto D = cyclic_submodule_dual(H, y);
      CHECK(B.rank_over_fraction_field() <= static_cast<int>(C.lm_set(y).size()));
      for (int x = 0; x < N; ++x) {
        const auto r = B.membership(unit_coords(N, x));
        if (r.member) {
          CHECK(C.left().leq(y, x));
          CHECK((recombine(B, r.certificate) == unit_coords(N, x)));
        } else if (!r.rank_witness) {
          // The witness is reproducible.
          CHECK((cyclic_submodule_kl(H, y).membership(unit_coords(N, x)).normal_form == r.normal_form));
        }
        const auto d = D.membership(unit_coords(N, x));
        if (d.member) {
          CHECK(C.left().leq(x, y));
          CHECK((recombine(D, d.certificate) == unit_coords(N, x)));
        }
      }
    }
  }
}

TEST_CASE("reduced-prefix coideals") {
  const auto& H = algebra(4);
  const WeylGroup& W = H.group();
  CHECK_FALSE(corollary_3345_hypothesis(W, cells(4), idx(H, "4231")));
  CHECK_FALSE(corollary_3345_hypothesis(W, cells(4), idx(H, "3412")));
  for (int n = 1; n <= 4; ++n) {
    const auto& Hn = algebra(n);
    const auto s = corollary_3345_survey(Hn.group(), cells(n));
    CHECK(s.parabolic_not_passing.empty());
    CHECK(s.parabolic_longest.size() == (std::size_t{1} << (n > 0 ? n - 1 : 0)));
  }
  const auto j = to_json(W, corollary_3345_survey(W, cells(4)));
  CHECK(j["parabolic_longest"].size() == 8);
}

TEST_CASE("verdict JSON") {
  const auto& H = algebra(3);
  const auto B = cyclic_submodule_kl(H, idx(H, "312"));
  const auto j = to_json(H.group(), B.membership(unit(H, "213")));
  CHECK(j["member"] == false);
  CHECK(j.contains("normal_form"));
  CHECK(j["fp_obstruction"]["p"] == 2);
  const auto k = to_json(H.group(), B.membership(unit(H, "312")));
  CHECK(k["member"] == true);
  CHECK(k.contains("certificate"));
}

}  // TEST_SUITE
