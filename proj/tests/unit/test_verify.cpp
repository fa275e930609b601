#include <doctest.h>

#include <string>

#include "hecke/verify.hpp"
#include "support.hpp"

using namespace hecke;
using testing_support::algebra_ptr;

namespace {

void require_all_pass(const VerifyReport& r) {
  for (const auto& c : r.checks) {
    CAPTURE(c.name);
    CAPTURE(c.witnesses.empty() ? std::string() : c.witnesses.front());
    if (c.asserted) CHECK(c.passed);
    if (r.n >= 2) CHECK(c.checked > 0);
  }
  CHECK(r.passed());
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("suite names") {
  CHECK(verify_suites().size() == 2);
  CHECK_THROWS_AS(run_verify("tables", algebra_ptr(2)), std::invalid_argument);
}

TEST_CASE("golden tables pass for n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    require_all_pass(run_verify("paper-tables", algebra_ptr(n)));
  }
  CHECK(run_verify("paper-tables", algebra_ptr(2)).checks.size() == 12);
}

TEST_CASE("identities pass for n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    require_all_pass(run_verify("identities", algebra_ptr(n), 2));
  }
}

TEST_CASE("identity checks count every element") {
  const auto r = run_verify("identities", algebra_ptr(3));
  // Duality is checked on all pairs, dual gamma on all triples.
  bool saw_duality = false, saw_dual_gamma = false;
  for (const auto& c : r.checks) {
    if (c.name.rfind("duality", 0) == 0) {
      saw_duality = true;
      CHECK(c.checked == 36);
    }
    if (c.name.rfind("dual gamma", 0) == 0) {
      saw_dual_gamma = true;
      CHECK(c.checked == 216);
    }
  }
  CHECK(saw_duality);
  CHECK(saw_dual_gamma);
}

TEST_CASE("a broken table is detected") {
  VerifyReport r;
  r.checks.push_back(PropertyCheck{"reported", false, false});
  CHECK(r.passed());
  r.checks.push_back(PropertyCheck{"asserted", true, false});
  CHECK_FALSE(r.passed());
  CHECK(to_json(r)["passed"] == false);
}

}  // TEST_SUITE
