#include "hecke/verify.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <utility>

#include "hecke/parallel.hpp"
#include "hecke/rs.hpp"
#include "hecke/submod.hpp"

namespace hecke {

namespace {

using Expansion = std::vector<std::pair<std::string, LaurentPoly>>;

PropertyCheck check(std::string title, bool asserted = true) {
  PropertyCheck c;
  c.name = std::move(title);
  c.asserted = asserted;
  return c;
}

void record(PropertyCheck& c, bool ok, const std::string& witness) {
  ++c.checked;
  if (ok) return;
  c.passed = false;
  if (c.witnesses.size() < 5) c.witnesses.push_back(witness);
}

// Folds per-thread copies of the same checks into one list.
void merge_into(std::vector<PropertyCheck>& into, const std::vector<PropertyCheck>& part) {
  for (std::size_t i = 0; i < into.size(); ++i) {
    into[i].checked += part[i].checked;
    into[i].passed = into[i].passed && part[i].passed;
    for (const auto& w : part[i].witnesses)
      if (into[i].witnesses.size() < 5) into[i].witnesses.push_back(w);
  }
}

int at(const HeckeAlgebra& H, const std::string& w) {
  return H.index(Perm::parse(w, H.group().rank()));
}

Coords coords_of(const HeckeAlgebra& H, const Expansion& e) {
  Coords c(H.size());
  for (const auto& [w, p] : e) c[at(H, w)] += p;
  return c;
}

std::string name(const WeylGroup& W, int x) { return W.elem(x).to_string(); }

LaurentPoly qnum() { return LaurentPoly{{1, 1}, {-1, 1}}; }

const char* const kE = "123";
const char* const kS = "213";
const char* const kT = "132";
const char* const kST = "231";
const char* const kTS = "312";
const char* const kW0 = "321";

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const PropertyCheck& c) { return c.passed || !c.asserted; });
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names = {"paper-tables", "identities"};
  return names;
}

// ------------------------------------------------------------- golden data

std::vector<PropertyCheck> s2_golden_checks() {
  const auto Hp = HeckeAlgebra::for_rank(2);
  const HeckeAlgebra& H = *Hp;
  const WeylGroup& W = H.group();
  std::vector<PropertyCheck> out;
  auto compare = [&](const std::string& title, const nlohmann::ordered_json& got, const std::string& want) {
    PropertyCheck c = check("S2 " + title);
    record(c, got.dump() == want, got.dump());
    out.push_back(std::move(c));
  };
  const int e = 0, s = 1;
  compare("KL(e)", coords_to_json(W, H.kl_element(e).coords()), R"({"12":{"0":1}})");
  compare("KL(s)", coords_to_json(W, H.kl_element(s).coords()), R"({"12":{"1":1},"21":{"0":1}})");
  compare("dual(e)", coords_to_json(W, H.dual_kl_element(e).coords()), R"({"12":{"0":1},"21":{"1":-1}})");
  compare("dual(s)", coords_to_json(W, H.dual_kl_element(s).coords()), R"({"21":{"0":1}})");
  compare("H(s) in KL coordinates", coords_to_json(W, H.to_kl_coords(H.standard(s))),
          R"({"12":{"1":-1},"21":{"0":1}})");
  compare("H(e) in dual KL coordinates", coords_to_json(W, H.to_dual_kl_coords(H.standard(e))),
          R"({"12":{"0":1},"21":{"1":1}})");
  compare("KL(s) in dual KL coordinates", coords_to_json(W, H.to_dual_kl_coords(H.kl_element(s))),
          R"({"12":{"1":1},"21":{"0":1,"2":1}})");
  auto table = [&](auto f, int w) {
    nlohmann::ordered_json t = nlohmann::ordered_json::array();
    for (int x : {e, s}) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (int y : {e, s}) row.push_back(to_json(f(x, y, w)));
      t.push_back(row);
    }
    return t;
  };
  auto gamma = [&](int x, int y, int w) { return H.gamma(x, y, w); };
  auto gamma_hat = [&](int x, int y, int w) { return H.gamma_hat(x, y, w); };
  compare("gamma table at e", table(gamma, e), R"([[{"0":1},{}],[{},{}]])");
  compare("gamma table at s", table(gamma, s), R"([[{},{"0":1}],[{"0":1},{"-1":1,"1":1}]])");
  compare("dual gamma table at e", table(gamma_hat, e), R"([[{"0":1,"2":1},{"1":-1}],[{"1":-1},{"0":1}]])");
  compare("dual gamma table at s", table(gamma_hat, s), R"([[{},{}],[{},{"-1":1}]])");
  return out;
}

std::vector<PropertyCheck> s3_golden_checks() {
  const auto Hp = HeckeAlgebra::for_rank(3);
  const HeckeAlgebra& H = *Hp;
  const WeylGroup& W = H.group();
  const LaurentPoly v = LaurentPoly::monomial(1), v2 = LaurentPoly::monomial(2),
                    v3 = LaurentPoly::monomial(3);
  const LaurentPoly q = qnum(), q2 = q * q, q3 = LaurentPoly{{3, 1}, {1, 2}, {-1, 2}, {-3, 1}};
  const std::vector<std::string> names = {kE, kS, kT, kST, kTS, kW0};
  std::vector<PropertyCheck> out;

  PropertyCheck kl = check("S3 KL elements");
  const std::map<std::string, Expansion> kl_rows = {
      {kE, {{kE, 1}}},
      {kS, {{kS, 1}, {kE, v}}},
      {kT, {{kT, 1}, {kE, v}}},
      {kST, {{kST, 1}, {kS, v}, {kT, v}, {kE, v2}}},
      {kTS, {{kTS, 1}, {kS, v}, {kT, v}, {kE, v2}}},
      {kW0, {{kW0, 1}, {kST, v}, {kTS, v}, {kS, v2}, {kT, v2}, {kE, v3}}},
  };
  for (const auto& [w, e] : kl_rows) record(kl, H.kl_element(at(H, w)).coords() == coords_of(H, e), w);
  out.push_back(std::move(kl));

  PropertyCheck dual = check("S3 dual KL elements");
  const std::map<std::string, Expansion> dual_rows = {
      {kE, {{kE, 1}, {kS, -v}, {kT, -v}, {kST, v2}, {kTS, v2}, {kW0, -v3}}},
      {kS, {{kS, 1}, {kST, -v}, {kTS, -v}, {kW0, v2}}},
      {kT, {{kT, 1}, {kST, -v}, {kTS, -v}, {kW0, v2}}},
      {kST, {{kST, 1}, {kW0, -v}}},
      {kTS, {{kTS, 1}, {kW0, -v}}},
      {kW0, {{kW0, 1}}},
  };
  for (const auto& [w, e] : dual_rows) record(dual, H.dual_kl_element(at(H, w)).coords() == coords_of(H, e), w);
  out.push_back(std::move(dual));

  // KL(x) KL(y) in KL coordinates; rows with x or y = e are omitted.
  const std::map<std::pair<std::string, std::string>, Expansion> kl_table = {
      {{kS, kS}, {{kS, q}}},
      {{kS, kT}, {{kST, 1}}},
      {{kS, kST}, {{kST, q}}},
      {{kS, kTS}, {{kS, 1}, {kW0, 1}}},
      {{kS, kW0}, {{kW0, q}}},
      {{kT, kS}, {{kTS, 1}}},
      {{kT, kT}, {{kT, q}}},
      {{kT, kST}, {{kT, 1}, {kW0, 1}}},
      {{kT, kTS}, {{kTS, q}}},
      {{kT, kW0}, {{kW0, q}}},
      {{kST, kS}, {{kS, 1}, {kW0, 1}}},
      {{kST, kT}, {{kST, q}}},
      {{kST, kST}, {{kST, 1}, {kW0, q}}},
      {{kST, kTS}, {{kS, q}, {kW0, q}}},
      {{kST, kW0}, {{kW0, q2}}},
      {{kTS, kS}, {{kTS, q}}},
      {{kTS, kT}, {{kT, 1}, {kW0, 1}}},
      {{kTS, kST}, {{kT, q}, {kW0, q}}},
      {{kTS, kTS}, {{kTS, 1}, {kW0, q}}},
      {{kTS, kW0}, {{kW0, q2}}},
      {{kW0, kS}, {{kW0, q}}},
      {{kW0, kT}, {{kW0, q}}},
      {{kW0, kST}, {{kW0, q2}}},
      {{kW0, kTS}, {{kW0, q2}}},
      {{kW0, kW0}, {{kW0, q3}}},
  };
  PropertyCheck mult = check("S3 KL multiplication table");
  for (const auto& x : names)
    for (const auto& y : names) {
      Expansion want;
      if (x == kE) want = {{y, 1}};
      else if (y == kE) want = {{x, 1}};
      else want = kl_table.at({x, y});
      const Coords got = H.to_kl_coords(H.mul(H.kl_element(at(H, x)), H.kl_element(at(H, y))));
      record(mult, got == coords_of(H, want), x + " * " + y);
    }
  out.push_back(std::move(mult));

  // KL(x) dual(y) in dual KL coordinates; absent entries are zero.
  const Expansion X1 = {{kW0, q2}, {kST, q}, {kTS, q}, {kT, 1}};
  const Expansion X2 = {{kW0, q2}, {kST, q}, {kTS, q}, {kS, 1}};
  const Expansion X3 = {{kW0, q3}, {kST, q2}, {kTS, q2}, {kS, q}, {kT, q}, {kE, 1}};
  const std::map<std::pair<std::string, std::string>, Expansion> mixed = {
      {{kS, kS}, {{kS, q}, {kE, 1}, {kTS, 1}}},
      {{kS, kST}, {{kST, q}, {kT, 1}}},
      {{kS, kW0}, {{kW0, q}, {kTS, 1}}},
      {{kT, kT}, {{kT, q}, {kE, 1}, {kST, 1}}},
      {{kT, kTS}, {{kTS, q}, {kS, 1}}},
      {{kT, kW0}, {{kW0, q}, {kST, 1}}},
      {{kST, kT}, {{kST, q}, {kT, 1}}},
      {{kST, kTS}, {{kS, q}, {kE, 1}, {kTS, 1}}},
      {{kST, kW0}, X1},
      {{kTS, kS}, {{kTS, q}, {kS, 1}}},
      {{kTS, kST}, {{kT, q}, {kE, 1}, {kST, 1}}},
      {{kTS, kW0}, X2},
      {{kW0, kW0}, X3},
  };
  PropertyCheck mix = check("S3 mixed KL times dual KL table");
  for (const auto& x : names)
    for (const auto& y : names) {
      Expansion want;
      if (x == kE) want = {{y, 1}};
      else if (auto it = mixed.find({x, y}); it != mixed.end()) want = it->second;
      const Coords got = H.to_dual_kl_coords(H.mul(H.kl_element(at(H, x)), H.dual_kl_element(at(H, y))));
      record(mix, got == coords_of(H, want), x + " * " + y);
    }
  out.push_back(std::move(mix));

  PropertyCheck cells = check("S3 left cells {e}, {s, ts}, {t, st}, {w0}");
  const CellData C(H.kl_ptr());
  std::set<std::set<std::string>> got;
  for (const auto& cls : C.left().classes()) {
    std::set<std::string> names_of;
    for (int x : cls) names_of.insert(name(W, x));
    got.insert(names_of);
  }
  const std::set<std::set<std::string>> want = {{kE}, {kS, kTS}, {kT, kST}, {kW0}};
  record(cells, got == want, "left cells differ");
  out.push_back(std::move(cells));
  return out;
}

std::vector<PropertyCheck> s4_cell_checks() {
  const auto Hp = HeckeAlgebra::for_rank(4);
  const WeylGroup& W = Hp->group();
  const CellData C(Hp->kl_ptr());
  std::vector<PropertyCheck> out;

  PropertyCheck sizes = check("S4 left cell sizes 1,3,3,3,2,2,3,3,3,1");
  std::multiset<std::size_t> got_sizes;
  for (const auto& cls : C.left().classes()) got_sizes.insert(cls.size());
  record(sizes, got_sizes == std::multiset<std::size_t>{1, 3, 3, 3, 2, 2, 3, 3, 3, 1}, "sizes differ");
  out.push_back(std::move(sizes));

  PropertyCheck hook = check("S4 left cell sizes are hook length counts");
  for (const auto& cls : C.left().classes())
    record(hook, Integer(cls.size()) == hook_length_count(shape(W.elem(cls.front()))), name(W, cls.front()));
  out.push_back(std::move(hook));

  // Edges of the figure, by tableau of the involution; smaller end first.
  PropertyCheck hasse = check("S4 involution Hasse diagram");
  std::set<std::set<std::string>> got;
  for (const auto& [a, b] : involution_hasse_edges(W, C.left()))
    got.insert({tableau_to_string(rs(W.elem(a)).P), tableau_to_string(rs(W.elem(b)).P)});
  const std::set<std::set<std::string>> figure = {
      {"1/2/3/4", "12/3/4"}, {"1/2/3/4", "13/2/4"}, {"1/2/3/4", "14/2/3"},
      {"12/3/4", "123/4"},   {"12/3/4", "12/34"},   {"13/2/4", "13/24"},
      {"14/2/3", "134/2"},   {"14/2/3", "12/34"},   {"12/34", "124/3"},
      {"13/24", "134/2"},    {"13/24", "123/4"},    {"123/4", "1234"},
      {"124/3", "1234"},     {"134/2", "1234"}};
  record(hasse, got == figure, std::to_string(got.size()) + " edges");
  out.push_back(std::move(hasse));
  return out;
}

std::vector<PropertyCheck> s3_cyclic_checks() {
  std::vector<PropertyCheck> out;
  const auto H3p = HeckeAlgebra::for_rank(3);
  const HeckeAlgebra& H = *H3p;
  const int N = H.size();
  auto unit = [&](const char* w) { return unit_coords(N, at(H, w)); };
  // The A-span of `claimed` is the module and `claimed` is independent.
  auto free_basis = [&](const std::string& title, const SubmoduleBasis& B, const std::vector<Coords>& claimed) {
    PropertyCheck c = check(title);
    const SubmoduleBasis span(B.group_ptr(), B.basis(), claimed);
    record(c, rank_over_fraction_field(claimed) == static_cast<int>(claimed.size()), "claimed rows dependent");
    record(c, B.rank_over_fraction_field() == static_cast<int>(claimed.size()), "rank differs");
    for (const Coords& x : claimed) record(c, B.contains(x), "claimed element outside the module");
    for (const Coords& g : B.generators()) record(c, span.contains(g), "generator outside the claimed span");
    out.push_back(std::move(c));
  };
  Coords s_w0(N), w0q(N);
  s_w0[at(H, kS)] = 1;
  s_w0[at(H, kW0)] = 1;
  w0q[at(H, kW0)] = qnum();
  const auto Bs = cyclic_submodule_kl(H, at(H, kS));
  const auto Bts = cyclic_submodule_kl(H, at(H, kTS));
  free_basis("S3 H KL(s) has basis KL(s), KL(ts), KL(w0)", Bs, {unit(kS), unit(kTS), unit(kW0)});
  free_basis("S3 H KL(ts) has basis KL(ts), KL(s) + KL(w0), (v+v^-1) KL(w0)", Bts, {unit(kTS), s_w0, w0q});

  PropertyCheck incl = check("S3 H KL(ts) inside H KL(s), KL(s) not in H KL(ts)");
  record(incl, Bs.contains(unit(kTS)), "KL(ts) not in H KL(s)");
  record(incl, !Bts.contains(unit(kS)), "KL(s) in H KL(ts)");
  out.push_back(std::move(incl));

  Coords e_ts(N);
  e_ts[at(H, kE)] = 1;
  e_ts[at(H, kTS)] = 1;
  Coords tsq(N);
  tsq[at(H, kTS)] = qnum();
  const auto Ds = cyclic_submodule_dual(H, at(H, kS));
  const auto Dts = cyclic_submodule_dual(H, at(H, kTS));
  free_basis("S3 H dual(ts) has basis dual(ts), dual(s), dual(e)", Dts, {unit(kTS), unit(kS), unit(kE)});
  free_basis("S3 H dual(s) has basis dual(s), dual(e) + dual(ts), (v+v^-1) dual(ts)", Ds, {unit(kS), e_ts, tsq});
  PropertyCheck dincl = check("S3 dual(s) in H dual(ts), dual(ts) not in H dual(s)");
  record(dincl, Dts.contains(unit(kS)), "dual(s) not in H dual(ts)");
  record(dincl, !Ds.contains(unit(kTS)), "dual(ts) in H dual(s)");
  out.push_back(std::move(dincl));
  return out;
}

std::vector<PropertyCheck> s4_cyclic_checks() {
  std::vector<PropertyCheck> out;
  const auto H4p = HeckeAlgebra::for_rank(4);
  const HeckeAlgebra& H4 = *H4p;
  const CellData C4(H4.kl_ptr());
  const int w = H4.index(inverse_rs({{1, 3}, {2, 4}}, {{1, 2}, {3, 4}}));
  PropertyCheck small = check("S4 element " + name(H4.group(), w) +
                              ": 6 nonvanishing dual products, rank <= 6, 9 elements above, H KL(w) != LM");
  int nonvanishing = 0;
  for (int y = 0; y < H4.size(); ++y)
    if (!is_zero(H4.dual_right_products(unit_coords(H4.size(), y), w)[w])) ++nonvanishing;
  record(small, nonvanishing == 6, std::to_string(nonvanishing) + " nonvanishing");
  const int rank = cyclic_submodule_kl(H4, w).rank_over_fraction_field();
  record(small, rank <= 6, "rank " + std::to_string(rank));
  record(small, C4.lm_set(w).size() == 9, std::to_string(C4.lm_set(w).size()) + " elements above");
  record(small, !equals_lm(H4, C4, w).equal, "H KL(w) = LM");
  out.push_back(std::move(small));
  return out;
}

// ------------------------------------------------------------- identities

std::vector<PropertyCheck> identity_checks(const HeckeAlgebra& H, const CellData& C, int jobs) {
  const WeylGroup& W = H.group();
  const KLCache& K = H.kl();
  const int N = H.size();
  const int w0 = W.longest();
  const HeckeElt Hw0 = H.standard(w0);
  std::vector<PropertyCheck> out;

  // Per-element checks, evaluated in parallel and merged in a fixed order.
  std::vector<PropertyCheck> proto = {
      check("KL(w) is bar invariant and KL(w) - H(w) has coefficients in vZ[v]"),
      check("h(x,y) != 0 implies y <= x in the Bruhat order, deg h(x,y) <= l(x) - l(y)"),
      check("duality: tau(dual(x) KL(y^-1)) = delta(x,y)"),
      check("structure constants gamma are bar invariant with nonnegative coefficients"),
      check("KL(s) KL(y) by the simple reflection rule"),
      check("KL inversion: sum_w (-1)^(l(y)-l(w)) h(w,x) h(w0 w, w0 y) = delta(x,y)"),
      check("H(w0 a) = sum_z (-1)^(l(w0 a)-l(z)) h(w0 z, a) KL(z)"),
      check("tilting: H(w0) KL(x) = sum_y h(x,y)(v^-1) H(w0 y)"),
      check("dual(w w0) = beta(KL(w) H(w0)) = beta(KL(w)) H(w0)"),
      check("star(KL(w)) = KL(w^-1) and star(dual(w)) = dual(w^-1)"),
      check("H(w0) KL(w) H(w0)^-1 = KL(w0 w w0)"),
      check("H(w0) dual(w) H(w0)^-1 = dual(w0 w w0)"),
      check("dual gamma from the KL data formula equals direct dual gamma"),
      check("dual(y) KL(x) != 0 iff y >=_L x^-1"),
      check("KL(x) dual(y) != 0 iff y >=_R x^-1"),
      check("dual(w) KL(x) has nonnegative dual KL coordinates supported on y <=_R w"),
      check("KL(x) dual(w) has nonnegative dual KL coordinates"),
      check("dual(a) KL(b) != 0: every KL(f) in it has f >=_L b, some has f ~_L b"),
  };
  enum {
    kDefining, kBruhat, kDuality, kPositive, kSimpleRule, kInversion, kInversionExpansion, kTilt, kVirk,
    kStar, kKLConj, kDualConj, kProp271, kVanishL, kVanishR, kMPositive, kNPositive, kLemma452
  };

  // Coefficients of the dual gamma formula that do not depend on x:
  // F[y][z] = sum_a (-1)^(l(w0 a) - l(z)) h(w0 z, a) h(y w0, a)(v^-1).
  std::vector<Coords> F(N, Coords(N));
  parallel_for(N, jobs, [&](int y) {
    const int yw0 = W.mul(y, w0);
    for (int a = 0; a < N; ++a) {
      const LaurentPoly& hya = K.h(yw0, a);
      if (hya.is_zero()) continue;
      const LaurentPoly bar_hya = bar(hya);
      const int w0a = W.mul(w0, a);
      for (int z = 0; z < N; ++z) {
        const LaurentPoly& hza = K.h(W.mul(w0, z), a);
        if (hza.is_zero()) continue;
        LaurentPoly t = hza * bar_hya;
        if ((W.length(w0a) - W.length(z)) % 2 != 0) t = -t;
        F[y][z] += t;
      }
    }
  });

  std::vector<std::vector<PropertyCheck>> parts(N, proto);
  parallel_for(N, jobs, [&](int x) {
    auto& P = parts[x];
    const std::string nx = name(W, x);
    const HeckeElt klx = H.kl_element(x);

    // Defining properties.
    bool ok = H.bar(klx) == klx && klx[x] == 1;
    for (int y = 0; y < N; ++y)
      if (y != x && !klx[y].is_zero() && klx[y].valuation() < 1) ok = false;
    record(P[kDefining], ok, nx);
    for (int y = 0; y < N; ++y) {
      const LaurentPoly& h = K.h(x, y);
      if (h.is_zero()) continue;
      record(P[kBruhat], W.bruhat_leq(y, x) && h.degree() <= W.length(x) - W.length(y), nx + "," + name(W, y));
    }

    // Duality.
    const HeckeElt& dx = H.dual_kl_element(x);
    for (int y = 0; y < N; ++y) {
      const LaurentPoly f = H.form(dx, H.kl_element(W.inverse(y)));
      record(P[kDuality], f == LaurentPoly(x == y ? 1 : 0), nx + "," + name(W, y));
    }

    // Structure constants: G[y] = KL(x) KL(y) in KL coordinates.
    const auto G = H.kl_right_products(unit_coords(N, x));
    for (int y = 0; y < N; ++y)
      for (int w = 0; w < N; ++w) {
        const LaurentPoly& g = G[y][w];
        if (g.is_zero()) continue;
        record(P[kPositive], g.is_nonneg() && g.is_bar_symmetric(), nx + "," + name(W, y) + "," + name(W, w));
      }
    // Simple reflection rule, with x in the role of y.
    for (int k = 0; k < W.num_simples(); ++k) {
      const int s = W.lmul(k, 0);
      const Coords got = H.kl_left_products(unit_coords(N, x), s)[s];
      Coords want(N);
      if (W.left_descent(k, x)) {
        want[x] = qnum();
      } else {
        for (int w = 0; w < N; ++w)
          if (W.left_descent(k, w)) want[w] = LaurentPoly(Integer(K.mu(x, w)));
      }
      record(P[kSimpleRule], got == want, name(W, s) + "," + nx);
    }

    // KL inversion with x fixed.
    for (int y = 0; y < N; ++y) {
      LaurentPoly sum;
      for (int w = 0; w < N; ++w) {
        const LaurentPoly& a = K.h(w, x);
        if (a.is_zero()) continue;
        const LaurentPoly& b = K.h(W.mul(w0, w), W.mul(w0, y));
        if (b.is_zero()) continue;
        LaurentPoly t = a * b;
        if ((W.length(y) - W.length(w)) % 2 != 0) t = -t;
        sum += t;
      }
      record(P[kInversion], sum == LaurentPoly(x == y ? 1 : 0), nx + "," + name(W, y));
    }
    {
      const int a = x;
      const int w0a = W.mul(w0, a);
      Coords want(N);
      for (int z = 0; z < N; ++z) {
        LaurentPoly t = K.h(W.mul(w0, z), a);
        if ((W.length(w0a) - W.length(z)) % 2 != 0) t = -t;
        want[z] = t;
      }
      record(P[kInversionExpansion], H.to_kl_coords(H.standard(w0a)) == want, nx);
    }

    // Tilting identity.
    {
      Coords want(N);
      for (int y = 0; y < N; ++y) want[W.mul(w0, y)] = bar(K.h(x, y));
      record(P[kTilt], H.mul(Hw0, klx).coords() == want, nx);
    }
    // eq-virk with w = x.
    {
      const HeckeElt& d = H.dual_kl_element(W.mul(x, w0));
      record(P[kVirk], d == H.beta(H.mul(klx, Hw0)) && d == H.mul(H.beta(klx), Hw0), nx);
    }
    record(P[kStar], H.star(klx) == H.kl_element(W.inverse(x)) &&
                         H.star(dx) == H.dual_kl_element(W.inverse(x)), nx);
    const int conj = W.mul(W.mul(w0, x), w0);
    record(P[kKLConj], H.mul(Hw0, klx) == H.mul(H.kl_element(conj), Hw0), nx);
    record(P[kDualConj], H.mul(Hw0, dx) == H.mul(H.dual_kl_element(conj), Hw0), nx);

    // Dual gamma: gamma^_{x,y}^w = beta(sum_z F[y][z] gamma_{x w0, z}^{w w0}).
    {
      const auto Gx = H.kl_right_products(unit_coords(N, W.mul(x, w0)));
      for (int y = 0; y < N; ++y) {
        const Coords direct = H.to_dual_kl_coords(H.mul(dx, H.dual_kl_element(y)));
        for (int w = 0; w < N; ++w) {
          const int ww0 = W.mul(w, w0);
          LaurentPoly sum;
          for (int z = 0; z < N; ++z)
            if (!F[y][z].is_zero() && !Gx[z][ww0].is_zero()) sum.add_product(F[y][z], Gx[z][ww0]);
          record(P[kProp271], beta_scalar(sum) == direct[w], nx + "," + name(W, y) + "," + name(W, w));
        }
      }
    }

    // Mixed products with the dual element of x.
    const auto right = H.dual_right_products(unit_coords(N, x));  // dual(x) KL(b)
    const auto left = H.dual_left_products(unit_coords(N, x));    // KL(b) dual(x)
    for (int b = 0; b < N; ++b) {
      const std::string tag = nx + "," + name(W, b);
      record(P[kVanishL], !is_zero(right[b]) == C.left().leq(W.inverse(b), x), tag);
      record(P[kVanishR], !is_zero(left[b]) == C.right().leq(W.inverse(b), x), tag);
      bool m_ok = true, n_ok = true;
      for (int y = 0; y < N; ++y) {
        if (!right[b][y].is_zero() && (!right[b][y].is_nonneg() || !C.right().leq(y, x))) m_ok = false;
        if (!left[b][y].is_zero() && !left[b][y].is_nonneg()) n_ok = false;
      }
      record(P[kMPositive], m_ok, tag);
      record(P[kNPositive], n_ok, tag);
      if (is_zero(right[b])) continue;
      const Coords kl = H.to_kl_coords(H.from_dual_kl_coords(right[b]));
      bool above = true, some = false;
      for (int f = 0; f < N; ++f) {
        if (kl[f].is_zero()) continue;
        if (!C.left().leq(b, f)) above = false;
        if (C.left().equiv(f, b)) some = true;
      }
      record(P[kLemma452], above && some, tag);
    }
  });
  for (const auto& p : parts) merge_into(proto, p);
  out = std::move(proto);

  // a-function properties.
  const auto a = a_function(H);
  for (auto& c : afunction_property_report(H, C, a)) out.push_back(std::move(c));

  // gamma_{w0', w}^u != 0 for u the longest element of W' w.
  PropertyCheck lemma = check("gamma(w0', w, u) != 0 for u longest in W' w");
  for (const Parabolic& J : Parabolic::all(W.rank())) {
    if (!W.is_full()) break;
    const int p = W.index(parabolic_longest(J));
    const auto G = H.kl_right_products(unit_coords(N, p));
    for (int w = 0; w < N; ++w) {
      const int u = W.index(coset_max_representative(J, W.elem(w), CosetSide::kLeft));
      record(lemma, !G[w][u].is_zero(), J.to_string() + "," + name(W, w));
    }
  }
  out.push_back(std::move(lemma));
  return out;
}

VerifyReport run_verify(std::string_view suite, const HeckeAlgebraPtr& H, int jobs) {
  VerifyReport r;
  r.suite = std::string(suite);
  r.n = H->group().rank();
  auto append = [&](std::vector<PropertyCheck> cs) {
    for (auto& c : cs) r.checks.push_back(std::move(c));
  };
  if (suite == "paper-tables") {
    PropertyCheck one = check("S1 KL(e) = H(e)");
    const auto H1 = HeckeAlgebra::for_rank(1);
    record(one, H1->size() == 1 && H1->kl_element(0) == H1->one(), "e");
    r.checks.push_back(std::move(one));
    if (r.n >= 2) append(s2_golden_checks());
    if (r.n >= 3) {
      append(s3_golden_checks());
      append(s3_cyclic_checks());
    }
    if (r.n >= 4) {
      append(s4_cell_checks());
      append(s4_cyclic_checks());
    }
  } else if (suite == "identities") {
    const CellData C(H->kl_ptr());
    append(identity_checks(*H, C, jobs));
  } else {
    throw std::invalid_argument("unknown verify suite: " + std::string(suite));
  }
  return r;
}

nlohmann::ordered_json to_json(const VerifyReport& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["n"] = r.n;
  j["passed"] = r.passed();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) j["checks"].push_back(to_json(c));
  return j;
}

}  // namespace hecke
