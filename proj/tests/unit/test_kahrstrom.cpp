#include <doctest.h>

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "hecke/kahrstrom.hpp"
#include "support.hpp"

using namespace hecke;
using testing_support::algebra_ptr;

namespace {

const KhContext& context(int n) {
  static std::map<int, std::unique_ptr<KhContext>> cache;
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<KhContext>(algebra_ptr(n), nullptr);
  return *slot;
}

// dual(w) KL(x) by multiplying in the standard basis and converting back.
Coords direct_product(const HeckeAlgebra& H, int w, int x) {
  return H.to_dual_kl_coords(H.mul(H.dual_kl_element(w), H.kl_element(x)));
}

std::set<std::string> kh_names(int n, bool graded) {
  const auto& ctx = context(n);
  std::set<std::string> out;
  for (const auto& v : kahrstrom_all(ctx))
    if (graded ? v.graded : v.ungraded) out.insert(ctx.group().elem(v.w).to_string());
  return out;
}

}  // namespace

TEST_SUITE("kahrstrom") {

TEST_CASE("mode names") {
  CHECK(kh_mode_from_string("graded") == KhMode::kGraded);
  CHECK(to_string(KhMode::kBoth) == "both");
  CHECK_THROWS_AS(kh_mode_from_string("mixed"), std::invalid_argument);
}

TEST_CASE("products agree with direct multiplication") {
  for (int n = 2; n <= 4; ++n) {
    const auto& ctx = context(n);
    const auto& H = ctx.algebra();
    for (int w = 0; w < H.size(); ++w)
      for (int x = 0; x < H.size(); ++x) REQUIRE((ctx.products(w)[x] == direct_product(H, w, x)));
  }
}

TEST_CASE("vanishing criteria for mixed products") {
  for (int n = 2; n <= 4; ++n) {
    const auto& ctx = context(n);
    const auto& H = ctx.algebra();
    const WeylGroup& W = H.group();
    for (int y = 0; y < H.size(); ++y) {
      const auto left = H.dual_left_products(unit_coords(H.size(), y));
      for (int x = 0; x < H.size(); ++x) {
        // dual(y) KL(x) != 0 iff y >=_L x^-1; KL(x) dual(y) != 0 iff y >=_R x^-1.
        CHECK(!is_zero(ctx.products(y)[x]) == ctx.cells().left().leq(W.inverse(x), y));
        CHECK(!is_zero(left[x]) == ctx.cells().right().leq(W.inverse(x), y));
      }
    }
  }
}

TEST_CASE("no witnesses in S2 and S3") {
  for (int n = 1; n <= 3; ++n) {
    CHECK(kh_names(n, true).empty());
    CHECK(kh_names(n, false).empty());
  }
  const auto& ctx = context(2);
  CHECK_FALSE(kh_graded(ctx, 0));
  CHECK_FALSE(kh_ungraded(ctx, 1));
}

TEST_CASE("pruned search matches the unpruned reference") {
  for (int n = 3; n <= 4; ++n) {
    const auto& ctx = context(n);
    for (int w = 0; w < ctx.size(); ++w) {
      const auto a = kahrstrom_verdict(ctx, w);
      const auto b = kahrstrom_reference(ctx, w);
      CHECK(a.graded_witnesses == b.graded_witnesses);
      CHECK(a.ungraded_witnesses == b.ungraded_witnesses);
    }
  }
}

TEST_CASE("S4 verdicts against an independent product oracle") {
  const auto& ctx = context(4);
  const auto& H = ctx.algebra();
  const int N = H.size();
  std::set<std::string> oracle_graded, oracle_ungraded;
  for (int w = 0; w < N; ++w) {
    std::vector<Coords> P(N);
    for (int x = 0; x < N; ++x) P[x] = direct_product(H, w, x);
    bool g = false, u = false;
    for (int x = 0; x < N; ++x)
      for (int y = x + 1; y < N; ++y) {
        if (!is_zero(P[x]) && P[x] == P[y]) g = true;
        if (!is_zero(eval_at_one(P[x])) && eval_at_one(P[x]) == eval_at_one(P[y])) u = true;
      }
    if (g) oracle_graded.insert(H.group().elem(w).to_string());
    if (u) oracle_ungraded.insert(H.group().elem(w).to_string());
  }
  CHECK(kh_names(4, true) == oracle_graded);
  CHECK(kh_names(4, false) == oracle_ungraded);
  // Frozen from the oracle above.
  CHECK(oracle_graded == std::set<std::string>{"2143", "3142"});
  CHECK(oracle_ungraded == oracle_graded);
  const auto v = kahrstrom_verdict(ctx, H.index(Perm::parse("2143", 4)));
  REQUIRE(v.graded_witnesses.size() == 3);
  CHECK(H.group().elem(v.graded_witnesses[0].first).to_string() == "1243");
  CHECK(H.group().elem(v.graded_witnesses[0].second).to_string() == "2341");
}

TEST_CASE("witnesses re-verify and lie in one left cell") {
  for (int n = 4; n <= 5; ++n) {
    const auto& ctx = context(n);
    const auto& H = ctx.algebra();
    for (const auto& v : kahrstrom_all(ctx)) {
      for (const auto& [x, y] : v.graded_witnesses) {
        CHECK(x != y);
        CHECK(ctx.cells().left().equiv(x, y));
        const Coords a = direct_product(H, v.w, x);
        CHECK_FALSE(is_zero(a));
        CHECK((a == direct_product(H, v.w, y)));
      }
      for (const auto& [x, y] : v.ungraded_witnesses) {
        CHECK(ctx.cells().left().equiv(x, y));
        CHECK((eval_at_one(ctx.products(v.w)[x]) == eval_at_one(ctx.products(v.w)[y])));
      }
    }
  }
}

TEST_CASE("S5 verdict counts") {
  // Regression values from the exhaustive scan.
  CHECK(kh_names(5, true).size() == 26);
  CHECK(kh_names(5, false) == kh_names(5, true));
}

TEST_CASE("scans at n = 4") {
  const auto& ctx = context(4);
  const auto inv = scan_left_cell_invariance(ctx, KhMode::kBoth);
  const auto var = scan_witness_variation(ctx, KhMode::kBoth, 2);
  const auto nec = check_necessary_conditions(ctx);
  CHECK(inv.witnesses == 12);
  CHECK(var.witnesses == 12);
  CHECK(nec.witnesses == 24);
  for (const auto* r : {&inv, &var, &nec})
    for (const auto& c : r->checks) {
      CAPTURE(c.name);
      CHECK(c.passed);
      if (r != &nec) CHECK(c.checked > 0);
    }
  CHECK(exit_code({inv, var, nec}) == 0);
  // Deterministic under threading.
  CHECK(to_json(scan_witness_variation(ctx, KhMode::kBoth, 1)).dump() == to_json(var).dump());
}

TEST_CASE("sampled necessary conditions at n = 5") {
  const auto r = check_necessary_conditions(context(5), 10000);
  for (const auto& c : r.checks) {
    CHECK(c.passed);
    CHECK(c.checked == 10000);
  }
  CHECK(to_json(check_necessary_conditions(context(5), 10000)).dump() == to_json(r).dump());
}

TEST_CASE("parabolic induction") {
  const auto& ctx3 = context(3);
  const auto r = parabolic_induction_check(ctx3, Parabolic(3, {1}), KhMode::kBoth);
  for (const auto& c : r.checks) CHECK(c.passed);
  CHECK(r.witnesses == 0);
  for (const Parabolic& J : Parabolic::all(4)) {
    CAPTURE(J.to_string());
    const auto s = parabolic_induction_check(context(4), J, KhMode::kBoth);
    for (const auto& c : s.checks) CHECK(c.passed);
  }
  const auto full = parabolic_induction_check(context(4), Parabolic(4, {1, 2}), KhMode::kGraded);
  CHECK(full.checks[1].checked == 6);
  CHECK(full.checks[2].checked == 0);
}

TEST_CASE("exit codes") {
  ScanReport ok;
  ok.checks.push_back(PropertyCheck{"fine"});
  ScanReport open = ok;
  open.checks.push_back(PropertyCheck{"conjecture", false, false});
  ScanReport broken = ok;
  broken.checks.push_back(PropertyCheck{"proved", true, false});
  CHECK(exit_code({ok}) == 0);
  CHECK(exit_code({ok, open}) == 2);
  CHECK(exit_code({open, broken}) == 1);
}

TEST_CASE("verdict JSON") {
  const auto& ctx = context(4);
  const auto j = to_json(ctx.group(), kahrstrom_verdict(ctx, ctx.algebra().index(Perm::parse("3142", 4))));
  CHECK(j["graded"] == true);
  CHECK(j["graded_witnesses"][0].dump() == R"(["1243","2341"])");
}

}  // TEST_SUITE
