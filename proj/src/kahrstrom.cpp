#include "hecke/kahrstrom.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <tuple>

#include "hecke/parallel.hpp"
#include "hecke/submod.hpp"

namespace hecke {

std::string to_string(KhMode m) {
  switch (m) {
    case KhMode::kGraded: return "graded";
    case KhMode::kUngraded: return "ungraded";
    case KhMode::kBoth: return "both";
  }
  return "?";
}

KhMode kh_mode_from_string(std::string_view s) {
  if (s == "graded") return KhMode::kGraded;
  if (s == "ungraded") return KhMode::kUngraded;
  if (s == "both") return KhMode::kBoth;
  throw std::invalid_argument("unknown mode: " + std::string(s));
}

KhContext::KhContext(HeckeAlgebraPtr H, std::shared_ptr<const CellData> C)
    : H_(std::move(H)), C_(std::move(C)), rows_(new Row[H_->size()]) {
  if (!C_) C_ = std::make_shared<const CellData>(H_->kl_ptr());
}

void KhContext::fill(int w) const {
  Row& r = rows_[w];
  std::call_once(r.once, [&] {
    r.graded = H_->dual_right_products(unit_coords(size(), w));
    r.ungraded.reserve(r.graded.size());
    for (const Coords& c : r.graded) r.ungraded.push_back(eval_at_one(c));
  });
}

const std::vector<Coords>& KhContext::products(int w) const {
  fill(w);
  return rows_[w].graded;
}

const std::vector<IntCoords>& KhContext::products_at_one(int w) const {
  fill(w);
  return rows_[w].ungraded;
}

void KhContext::precompute(int jobs) const {
  parallel_for(size(), jobs, [&](int w) { fill(w); });
}

namespace {

std::string name(const WeylGroup& W, int x) { return W.elem(x).to_string(); }

PropertyCheck check(std::string title, bool asserted = true) {
  PropertyCheck c;
  c.name = std::move(title);
  c.asserted = asserted;
  return c;
}

void record(PropertyCheck& c, bool ok, const std::string& witness,
            std::vector<std::string>* all = nullptr) {
  ++c.checked;
  if (ok) return;
  c.passed = false;
  if (c.witnesses.size() < 5) c.witnesses.push_back(witness);
  if (all) all->push_back(c.name + ": " + witness);
}

void sort_pairs(const WeylGroup& W, std::vector<std::pair<int, int>>& pairs) {
  std::sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
    return std::make_tuple(W.length(a.first) + W.length(a.second), a.first, a.second) <
           std::make_tuple(W.length(b.first) + W.length(b.second), b.first, b.second);
  });
}

KhVerdict search(const KhContext& ctx, int w, bool pruned) {
  const WeylGroup& W = ctx.group();
  const int N = ctx.size();
  const auto& D = ctx.products(w);
  const auto& E = ctx.products_at_one(w);
  std::vector<int> graded_cand, ungraded_cand;
  for (int x = 0; x < N; ++x) {
    const bool nonzero = !is_zero(D[x]);
    if (pruned && nonzero != ctx.cells().left().leq(W.inverse(x), w))
      throw std::logic_error("nonvanishing criterion fails for w=" + name(W, w) + " x=" + name(W, x));
    if (nonzero) graded_cand.push_back(x);
    if (!is_zero(E[x])) ungraded_cand.push_back(x);
  }
  auto pairs_of = [&](const std::vector<int>& cand) {
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < cand.size(); ++i)
      for (std::size_t j = i + 1; j < cand.size(); ++j)
        if (!pruned || ctx.cells().left().equiv(cand[i], cand[j])) pairs.emplace_back(cand[i], cand[j]);
    sort_pairs(W, pairs);
    return pairs;
  };
  KhVerdict v;
  v.w = w;
  for (const auto& [x, y] : pairs_of(graded_cand))
    if (D[x] == D[y]) v.graded_witnesses.emplace_back(x, y);
  for (const auto& [x, y] : pairs_of(ungraded_cand))
    if (E[x] == E[y]) v.ungraded_witnesses.emplace_back(x, y);
  v.graded = !v.graded_witnesses.empty();
  v.ungraded = !v.ungraded_witnesses.empty();
  for (const auto& p : v.graded_witnesses)
    if (std::find(v.ungraded_witnesses.begin(), v.ungraded_witnesses.end(), p) ==
        v.ungraded_witnesses.end())
      throw std::logic_error("graded witness does not specialize for w=" + name(W, w));
  return v;
}

Coords difference(const Coords& a, const Coords& b) {
  Coords d = a;
  for (std::size_t i = 0; i < d.size(); ++i) d[i] -= b[i];
  return d;
}

IntCoords difference(const IntCoords& a, const IntCoords& b) {
  IntCoords d = a;
  for (std::size_t i = 0; i < d.size(); ++i) d[i] -= b[i];
  return d;
}

bool wants_graded(KhMode m) { return m != KhMode::kUngraded; }
bool wants_ungraded(KhMode m) { return m != KhMode::kGraded; }

std::string triple(const WeylGroup& W, int w, int x, int y) {
  return "w=" + name(W, w) + " x=" + name(W, x) + " y=" + name(W, y);
}

// Per-w partial reports, merged in w order so the output is deterministic.
struct Partial {
  long long witnesses = 0;
  std::vector<PropertyCheck> checks;
  std::vector<std::string> counterexamples;
};

ScanReport merge(std::string scan, const KhContext& ctx, KhMode mode, std::vector<Partial>& parts,
                 std::vector<PropertyCheck> checks) {
  ScanReport r;
  r.scan = std::move(scan);
  r.n = ctx.group().rank();
  r.mode = mode;
  r.checks = std::move(checks);
  for (Partial& p : parts) {
    r.witnesses += p.witnesses;
    for (std::size_t i = 0; i < r.checks.size(); ++i) {
      PropertyCheck& c = r.checks[i];
      const PropertyCheck& d = p.checks[i];
      c.checked += d.checked;
      c.passed = c.passed && d.passed;
      for (const auto& s : d.witnesses)
        if (c.witnesses.size() < 5) c.witnesses.push_back(s);
    }
    for (auto& s : p.counterexamples) r.counterexamples.push_back(std::move(s));
  }
  return r;
}

}  // namespace

KhVerdict kahrstrom_verdict(const KhContext& ctx, int w) { return search(ctx, w, true); }
KhVerdict kahrstrom_reference(const KhContext& ctx, int w) { return search(ctx, w, false); }
bool kh_graded(const KhContext& ctx, int w) { return kahrstrom_verdict(ctx, w).graded; }
bool kh_ungraded(const KhContext& ctx, int w) { return kahrstrom_verdict(ctx, w).ungraded; }

std::vector<KhVerdict> kahrstrom_all(const KhContext& ctx, int jobs) {
  std::vector<KhVerdict> out(ctx.size());
  parallel_for(ctx.size(), jobs, [&](int w) { out[w] = kahrstrom_verdict(ctx, w); });
  return out;
}

int exit_code(const std::vector<ScanReport>& reports) {
  bool open_failure = false;
  for (const auto& r : reports)
    for (const auto& c : r.checks) {
      if (c.passed) continue;
      if (c.asserted) return 1;
      open_failure = true;
    }
  return open_failure ? 2 : 0;
}

ScanReport scan_left_cell_invariance(const KhContext& ctx, KhMode mode, int jobs) {
  const WeylGroup& W = ctx.group();
  const CellData& C = ctx.cells();
  const std::vector<PropertyCheck> proto = {
      check("conjecture (graded): dual(w') KL(x) = dual(w') KL(y) for w' ~_L w", false),
      check("conjecture (v=1): dual(w') KL(x) = dual(w') KL(y) at v=1 for w' ~_L w", false),
      check("dual(w') (KL(x) - KL(y)) is supported on a <_R w'"),
      check("dual(w') (KL(x) - KL(y)) lies in the A-span of dual(a) (KL(x) - KL(y)), a <_R w"),
      check("at v=1, dual(w') (KL(x) - KL(y)) lies in the Z-span of dual(a) (KL(x) - KL(y)), a <_R w"),
  };
  std::vector<Partial> parts(ctx.size());
  parallel_for(ctx.size(), jobs, [&](int w) {
    Partial& P = parts[w];
    P.checks = proto;
    const KhVerdict v = kahrstrom_verdict(ctx, w);
    const auto& mates = C.left().classes()[C.left().class_of(w)];
    std::vector<int> below;  // a <_R w
    for (int a = 0; a < ctx.size(); ++a)
      if (C.right().less(a, w)) below.push_back(a);

    if (wants_graded(mode))
      for (const auto& [x, y] : v.graded_witnesses) {
        ++P.witnesses;
        std::vector<Coords> rows;
        for (int a : below) rows.push_back(difference(ctx.products(a)[x], ctx.products(a)[y]));
        SubmoduleBasis span(ctx.algebra().group_ptr(), CoordBasis::kDualKL,
                            rows);
        for (int w2 : mates) {
          if (w2 == w) continue;
          const std::string where = triple(W, w, x, y) + " w'=" + name(W, w2);
          const Coords d = difference(ctx.products(w2)[x], ctx.products(w2)[y]);
          record(P.checks[0], is_zero(d), where, &P.counterexamples);
          bool support = true;
          for (int a = 0; a < ctx.size(); ++a)
            if (!d[a].is_zero() && !C.right().less(a, w2)) support = false;
          record(P.checks[2], support, where);
          record(P.checks[3], rows.empty() ? is_zero(d) : span.contains(d), where);
        }
      }
    if (wants_ungraded(mode))
      for (const auto& [x, y] : v.ungraded_witnesses) {
        ++P.witnesses;
        std::vector<IntCoords> rows;
        for (int a : below)
          rows.push_back(difference(ctx.products_at_one(a)[x], ctx.products_at_one(a)[y]));
        for (int w2 : mates) {
          if (w2 == w) continue;
          const std::string where = triple(W, w, x, y) + " w'=" + name(W, w2);
          const IntCoords d = difference(ctx.products_at_one(w2)[x], ctx.products_at_one(w2)[y]);
          record(P.checks[1], is_zero(d), where, &P.counterexamples);
          record(P.checks[4], lattice_contains(rows, d), where);
        }
      }
  });
  return merge("invariance", ctx, mode, parts, proto);
}

ScanReport scan_witness_variation(const KhContext& ctx, KhMode mode, int jobs) {
  const WeylGroup& W = ctx.group();
  const CellData& C = ctx.cells();
  const std::vector<PropertyCheck> proto = {
      check("conjecture (graded): dual(w) KL(x') = dual(w) KL(y')", false),
      check("conjecture (v=1): dual(w) KL(x') = dual(w) KL(y') at v=1", false),
      check("dual(w) (KL(x') - KL(y')) lies in the A-span of dual(w) KL(a), a >_R x and a >_R y"),
      check("at v=1, dual(w) (KL(x') - KL(y')) lies in the Z-span of dual(w) KL(a), a >_R x and a >_R y"),
  };
  std::vector<Partial> parts(ctx.size());
  parallel_for(ctx.size(), jobs, [&](int w) {
    Partial& P = parts[w];
    P.checks = proto;
    const KhVerdict v = kahrstrom_verdict(ctx, w);
    const auto& D = ctx.products(w);
    const auto& E = ctx.products_at_one(w);
    auto above = [&](int x, int y) {
      std::vector<int> out;
      for (int a = 0; a < ctx.size(); ++a)
        if (C.right().less(x, a) && C.right().less(y, a)) out.push_back(a);
      return out;
    };
    auto variations = [&](int x, int y) {
      std::vector<std::pair<int, int>> out;
      for (int x2 : C.right().classes()[C.right().class_of(x)])
        for (int y2 : C.right().classes()[C.right().class_of(y)])
          if (x2 != y2 && C.left().equiv(x2, y2) && !(x2 == x && y2 == y)) out.emplace_back(x2, y2);
      return out;
    };
    if (wants_graded(mode))
      for (const auto& [x, y] : v.graded_witnesses) {
        ++P.witnesses;
        std::vector<Coords> rows;
        for (int a : above(x, y)) rows.push_back(D[a]);
        SubmoduleBasis span(ctx.algebra().group_ptr(), CoordBasis::kDualKL, rows);
        for (const auto& [x2, y2] : variations(x, y)) {
          const std::string where = triple(W, w, x, y) + " x'=" + name(W, x2) + " y'=" + name(W, y2);
          const Coords d = difference(D[x2], D[y2]);
          record(P.checks[0], is_zero(d), where, &P.counterexamples);
          record(P.checks[2], rows.empty() ? is_zero(d) : span.contains(d), where);
        }
      }
    if (wants_ungraded(mode))
      for (const auto& [x, y] : v.ungraded_witnesses) {
        ++P.witnesses;
        std::vector<IntCoords> rows;
        for (int a : above(x, y)) rows.push_back(E[a]);
        for (const auto& [x2, y2] : variations(x, y)) {
          const std::string where = triple(W, w, x, y) + " x'=" + name(W, x2) + " y'=" + name(W, y2);
          const IntCoords d = difference(E[x2], E[y2]);
          record(P.checks[1], is_zero(d), where, &P.counterexamples);
          record(P.checks[3], lattice_contains(rows, d), where);
        }
      }
  });
  return merge("variation", ctx, mode, parts, proto);
}

ScanReport check_necessary_conditions(const KhContext& ctx, long long samples,
                                      unsigned long long seed) {
  const WeylGroup& W = ctx.group();
  const CellData& C = ctx.cells();
  const int N = ctx.size();
  ScanReport r;
  r.scan = "necessary";
  r.n = W.rank();
  r.mode = KhMode::kBoth;
  r.checks = {
      check("dual(z) KL(x) = dual(z) KL(y) != 0 implies x ~_L y"),
      check("at v=1, dual(z) KL(x) = dual(z) KL(y) != 0 implies x ~_L y"),
      check("dual(x) KL(z) = dual(y) KL(z) != 0 implies x ~_R y"),
      check("at v=1, dual(x) KL(z) = dual(y) KL(z) != 0 implies x ~_R y"),
  };
  auto test = [&](int z, int x, int y) {
    const std::string where = "z=" + name(W, z) + " x=" + name(W, x) + " y=" + name(W, y);
    const Coords& a = ctx.products(z)[x];
    const Coords& b = ctx.products(z)[y];
    if (!is_zero(a) && a == b) {
      ++r.witnesses;
      record(r.checks[0], C.left().equiv(x, y), where);
    }
    const IntCoords& a1 = ctx.products_at_one(z)[x];
    const IntCoords& b1 = ctx.products_at_one(z)[y];
    if (!is_zero(a1) && a1 == b1) {
      ++r.witnesses;
      record(r.checks[1], C.left().equiv(x, y), where);
    }
    const Coords& c = ctx.products(x)[z];
    const Coords& d = ctx.products(y)[z];
    if (!is_zero(c) && c == d) {
      ++r.witnesses;
      record(r.checks[2], C.right().equiv(x, y), where);
    }
    const IntCoords& c1 = ctx.products_at_one(x)[z];
    const IntCoords& d1 = ctx.products_at_one(y)[z];
    if (!is_zero(c1) && c1 == d1) {
      ++r.witnesses;
      record(r.checks[3], C.right().equiv(x, y), where);
    }
  };
  if (samples <= 0) {
    for (int z = 0; z < N; ++z)
      for (int x = 0; x < N; ++x)
        for (int y = x + 1; y < N; ++y) test(z, x, y);
  } else if (N >= 2) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, N - 1);
    for (long long i = 0; i < samples; ++i) {
      const int z = pick(rng);
      const int x = pick(rng);
      int y = pick(rng);
      while (y == x) y = pick(rng);
      test(z, std::min(x, y), std::max(x, y));
    }
  }
  // Every triple counts once even when none of the hypotheses holds.
  const long long triples = samples > 0 ? samples : static_cast<long long>(N) * N * (N - 1) / 2;
  for (auto& c : r.checks) c.checked = triples;
  return r;
}

ScanReport parabolic_induction_check(const KhContext& big, const Parabolic& J, KhMode mode) {
  const WeylGroup& W = big.group();
  if (J.rank() != W.rank()) throw std::invalid_argument("parabolic of the wrong rank");
  auto Hj = HeckeAlgebra::for_parabolic(J);
  KhContext small(Hj, nullptr);
  const WeylGroup& Wj = Hj->group();
  ScanReport r;
  r.scan = "parabolic " + J.to_string();
  r.n = W.rank();
  r.mode = mode;
  r.checks = {
      check("KL polynomials of the parabolic agree with those of S_n"),
      check("graded: condition (a) in W' iff condition (b) for w w0' w0"),
      check("v=1: condition (a) in W' iff condition (b) for w w0' w0"),
  };
  std::vector<int> embed(Wj.size());
  for (int i = 0; i < Wj.size(); ++i) embed[i] = W.index(Wj.elem(i));
  for (int x = 0; x < Wj.size(); ++x)
    for (int y = 0; y < Wj.size(); ++y)
      record(r.checks[0], Hj->kl().h(x, y) == big.algebra().kl().h(embed[x], embed[y]),
             Wj.elem(x).to_string() + "," + Wj.elem(y).to_string());
  const int w0p = embed[Wj.longest()];
  for (int w = 0; w < Wj.size(); ++w) {
    const int b = W.mul(W.mul(embed[w], w0p), W.longest());
    const KhVerdict va = kahrstrom_verdict(small, w);
    const KhVerdict vb = kahrstrom_verdict(big, b);
    const std::string where = "w=" + Wj.elem(w).to_string() + " w w0' w0=" + name(W, b);
    if (va.graded || va.ungraded) ++r.witnesses;
    if (wants_graded(mode)) record(r.checks[1], va.graded == vb.graded, where);
    if (wants_ungraded(mode)) record(r.checks[2], va.ungraded == vb.ungraded, where);
  }
  return r;
}

nlohmann::ordered_json to_json(const WeylGroup& W, const KhVerdict& v) {
  auto pairs = [&](const std::vector<std::pair<int, int>>& ps) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& [x, y] : ps) j.push_back({name(W, x), name(W, y)});
    return j;
  };
  nlohmann::ordered_json j;
  j["w"] = name(W, v.w);
  j["graded"] = v.graded;
  j["ungraded"] = v.ungraded;
  j["graded_witnesses"] = pairs(v.graded_witnesses);
  j["ungraded_witnesses"] = pairs(v.ungraded_witnesses);
  return j;
}

nlohmann::ordered_json to_json(const ScanReport& r) {
  nlohmann::ordered_json j;
  j["scan"] = r.scan;
  j["n"] = r.n;
  j["mode"] = to_string(r.mode);
  j["witnesses"] = r.witnesses;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  j["checks"] = std::move(checks);
  j["counterexamples"] = r.counterexamples;
  return j;
}

}  // namespace hecke
