#include "hecke/submod.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

namespace hecke {

std::string to_string(CoordBasis b) { return b == CoordBasis::kKL ? "kl" : "dualkl"; }

namespace {

int lead_pos(const Coords& v) {
  for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
    if (!v[i].is_zero()) return i;
  return -1;
}

int nonzeros(const Coords& v) {
  int k = 0;
  for (const auto& p : v) k += !p.is_zero();
  return k;
}

// a += c * v^k * b, entrywise.
void axpy(Coords& a, const Coords& b, const Integer& c, int k) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i].add_scaled(b[i], c, k);
}

void axpy(Coords& a, const Coords& b, const LaurentPoly& c) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i].add_product(c, b[i]);
}

Coords shifted(const Coords& v, int k) {
  Coords out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].shifted(k);
  return out;
}

int min_valuation(const Coords& v) {
  int m = 0;
  bool any = false;
  for (const auto& p : v)
    if (!p.is_zero()) {
      m = any ? std::min(m, p.valuation()) : p.valuation();
      any = true;
    }
  return m;
}

// Extended gcd: a*x + b*y = g >= 0.
Integer ext_gcd(const Integer& a, const Integer& b, Integer& x, Integer& y) {
  Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long long mod_p(const Integer& c, int p) {
  Integer r = c % p;
  if (r < 0) r += p;
  return r.convert_to<long long>();
}

long long pow_mod(long long a, long long e, int p) {
  long long r = 1;
  a %= p;
  while (e > 0) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

long long eval_mod(const LaurentPoly& f, int p, long long a, long long a_inv) {
  long long s = 0;
  for (const auto& t : f.terms()) {
    const long long base = t.exp >= 0 ? pow_mod(a, t.exp, p) : pow_mod(a_inv, -t.exp, p);
    s = (s + mod_p(t.coeff, p) * base) % p;
  }
  return s;
}

// Is target in the F_p-span of rows?
bool in_span_mod_p(std::vector<std::vector<long long>> rows, std::vector<long long> target, int p) {
  const int N = static_cast<int>(target.size());
  int r = 0;
  std::vector<int> pivcol;
  for (int c = 0; c < N && r < static_cast<int>(rows.size()); ++c) {
    int sel = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(rows[r], rows[sel]);
    const long long inv = pow_mod(rows[r][c], p - 2, p);
    for (auto& x : rows[r]) x = x * inv % p;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const long long f = rows[i][c];
      for (int j = 0; j < N; ++j) rows[i][j] = ((rows[i][j] - f * rows[r][j]) % p + p) % p;
    }
    pivcol.push_back(c);
    ++r;
  }
  for (int i = 0; i < r; ++i) {
    const long long f = target[pivcol[i]];
    if (f == 0) continue;
    for (int j = 0; j < N; ++j) target[j] = ((target[j] - f * rows[i][j]) % p + p) % p;
  }
  return std::all_of(target.begin(), target.end(), [](long long x) { return x == 0; });
}

}  // namespace

// --------------------------------------------------------- integer tools

std::vector<std::vector<Integer>> integer_left_kernel(const std::vector<std::vector<Integer>>& A) {
  const int m = static_cast<int>(A.size());
  if (m == 0) return {};
  const int n = static_cast<int>(A[0].size());
  // Rows [A_i | e_i], reduced by unimodular row operations on the A part.
  std::vector<std::vector<Integer>> M(m, std::vector<Integer>(n + m));
  for (int i = 0; i < m; ++i) {
    std::copy(A[i].begin(), A[i].end(), M[i].begin());
    M[i][n + i] = 1;
  }
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    while (true) {
      int best = -1;
      for (int i = r; i < m; ++i)
        if (M[i][c] != 0 && (best < 0 || abs(M[i][c]) < abs(M[best][c]))) best = i;
      if (best < 0) break;
      std::swap(M[r], M[best]);
      bool done = true;
      for (int i = r + 1; i < m; ++i) {
        if (M[i][c] == 0) continue;
        const Integer q = floor_div(M[i][c], M[r][c]);
        for (int j = c; j < n + m; ++j) M[i][j] -= q * M[r][j];
        if (M[i][c] != 0) done = false;
      }
      if (done) {
        ++r;
        break;
      }
    }
  }
  std::vector<std::vector<Integer>> ker;
  for (int i = r; i < m; ++i) ker.emplace_back(M[i].begin() + n, M[i].end());
  return ker;
}

bool lattice_contains(const std::vector<IntCoords>& rows, const IntCoords& target) {
  const int n = static_cast<int>(target.size());
  std::vector<IntCoords> M = rows;
  const int m = static_cast<int>(M.size());
  std::vector<int> pivcol;
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    while (true) {
      int best = -1;
      for (int i = r; i < m; ++i)
        if (M[i][c] != 0 && (best < 0 || abs(M[i][c]) < abs(M[best][c]))) best = i;
      if (best < 0) break;
      std::swap(M[r], M[best]);
      bool done = true;
      for (int i = r + 1; i < m; ++i) {
        if (M[i][c] == 0) continue;
        const Integer q = floor_div(M[i][c], M[r][c]);
        for (int j = c; j < n; ++j) M[i][j] -= q * M[r][j];
        if (M[i][c] != 0) done = false;
      }
      if (done) {
        pivcol.push_back(c);
        ++r;
        break;
      }
    }
  }
  IntCoords t = target;
  for (int i = 0; i < r; ++i) {
    const int c = pivcol[i];
    if (t[c] == 0) continue;
    if (t[c] % M[i][c] != 0) return false;
    const Integer q = t[c] / M[i][c];
    for (int j = c; j < n; ++j) t[j] -= q * M[i][j];
  }
  return hecke::is_zero(t);
}

int rank_over_fraction_field(std::vector<Coords> M) {
  if (M.empty()) return 0;
  const int m = static_cast<int>(M.size());
  const int n = static_cast<int>(M[0].size());
  LaurentPoly prev(1);
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int sel = -1;
    for (int i = r; i < m; ++i)
      if (!M[i][c].is_zero() && (sel < 0 || M[i][c].size() < M[sel][c].size())) sel = i;
    if (sel < 0) continue;
    std::swap(M[r], M[sel]);
    for (int i = r + 1; i < m; ++i) {
      for (int j = c + 1; j < n; ++j) {
        LaurentPoly x = M[r][c] * M[i][j] - M[i][c] * M[r][j];
        if (x.is_zero()) {
          M[i][j] = LaurentPoly();
          continue;
        }
        auto q = divide_exact(x, prev);
        if (!q) throw std::logic_error("fraction-free elimination: inexact division");
        M[i][j] = std::move(*q);
      }
      M[i][c] = LaurentPoly();
    }
    prev = M[r][c];
    ++r;
  }
  return r;
}

// ------------------------------------------------------- SubmoduleBasis

struct SubmoduleBasis::Reduced {
  struct Row {
    Coords vec;
    Coords cert;  // vec = sum_z cert[z] * generator[z]
  };
  struct GbElt {
    Coords vec;  // in Z[v]^N
    Coords cert;
    int pos = -1;
    int deg = 0;
    Integer lc;
  };

  int N = 0;  // columns
  int m = 0;  // generators
  std::vector<int> pivot_col;
  std::vector<Row> pivots;
  std::vector<Row> residual;  // zero at pivot columns, in A
  int residual_rank = 0;
  std::vector<GbElt> gb;
  std::map<int, std::vector<int>> by_pos;

  void reduce_by_pivots(Coords& t, Coords& cert) const {
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      const int c = pivot_col[i];
      if (t[c].is_zero()) continue;
      const LaurentPoly f = t[c];
      axpy(t, pivots[i].vec, -f);
      axpy(cert, pivots[i].cert, f);
    }
  }

  // Full reduction of p by the Groebner elements. Returns the remainder;
  // acc collects the multiples subtracted (as generator combinations).
  Coords reduce(Coords p, Coords& acc) const {
    Coords rem(N);
    while (true) {
      const int pos = lead_pos(p);
      if (pos < 0) break;
      const int d = p[pos].degree();
      const Integer c = p[pos].coeff_at(d);
      const GbElt* red = nullptr;
      if (auto it = by_pos.find(pos); it != by_pos.end())
        for (int gi : it->second) {
          const GbElt& g = gb[gi];
          if (g.deg <= d && c % g.lc == 0) {
            red = &g;
            break;
          }
        }
      if (!red) {
        rem[pos] += LaurentPoly::monomial(d, c);
        p[pos] -= LaurentPoly::monomial(d, c);
        continue;
      }
      const Integer q = c / red->lc;
      axpy(p, red->vec, -q, d - red->deg);
      axpy(acc, red->cert, q, d - red->deg);
    }
    return rem;
  }

  void insert(Coords vec, Coords cert, std::deque<std::pair<int, int>>& pairs) {
    Coords acc(m);
    Coords r = reduce(std::move(vec), acc);
    if (hecke::is_zero(r)) return;
    axpy(cert, acc, Integer(-1), 0);
    GbElt g;
    g.pos = lead_pos(r);
    g.deg = r[g.pos].degree();
    g.lc = r[g.pos].coeff_at(g.deg);
    if (g.lc < 0) {
      for (auto& x : r) x = -x;
      for (auto& x : cert) x = -x;
      g.lc = -g.lc;
    }
    g.vec = std::move(r);
    g.cert = std::move(cert);
    const int id = static_cast<int>(gb.size());
    for (int other : by_pos[g.pos]) pairs.emplace_back(other, id);
    gb.push_back(std::move(g));
    by_pos[gb.back().pos].push_back(id);
  }

  void complete(std::deque<std::pair<int, int>>& pairs) {
    while (!pairs.empty()) {
      const auto [i, j] = pairs.front();
      pairs.pop_front();
      const GbElt f = gb[i];
      const GbElt g = gb[j];
      const int D = std::max(f.deg, g.deg);
      const Integer L = boost::multiprecision::lcm(f.lc, g.lc);
      Coords s(N), sc(m);
      axpy(s, f.vec, L / f.lc, D - f.deg);
      axpy(s, g.vec, -(L / g.lc), D - g.deg);
      axpy(sc, f.cert, L / f.lc, D - f.deg);
      axpy(sc, g.cert, -(L / g.lc), D - g.deg);
      insert(std::move(s), std::move(sc), pairs);
      if (f.lc % g.lc != 0 && g.lc % f.lc != 0) {
        Integer a, b;
        ext_gcd(f.lc, g.lc, a, b);
        Coords h(N), hc(m);
        axpy(h, f.vec, a, D - f.deg);
        axpy(h, g.vec, b, D - g.deg);
        axpy(hc, f.cert, a, D - f.deg);
        axpy(hc, g.cert, b, D - g.deg);
        insert(std::move(h), std::move(hc), pairs);
      }
    }
  }

  // Closes the Z[v]-module under division by v.
  void saturate() {
    while (true) {
      std::vector<std::vector<Integer>> constants;
      for (const auto& g : gb) {
        std::vector<Integer> row(N);
        for (int c = 0; c < N; ++c) row[c] = g.vec[c].coeff_at(0);
        constants.push_back(std::move(row));
      }
      const auto ker = integer_left_kernel(constants);
      bool changed = false;
      std::deque<std::pair<int, int>> pairs;
      for (const auto& k : ker) {
        Coords u(N), uc(m);
        for (std::size_t i = 0; i < k.size(); ++i)
          if (k[i] != 0) {
            axpy(u, gb[i].vec, k[i], 0);
            axpy(uc, gb[i].cert, k[i], 0);
          }
        if (hecke::is_zero(u)) continue;
        const std::size_t before = gb.size();
        insert(shifted(u, -1), shifted(uc, -1), pairs);
        complete(pairs);
        if (gb.size() != before) changed = true;
      }
      if (!changed) break;
    }
  }
};

SubmoduleBasis::SubmoduleBasis(WeylGroupPtr W, CoordBasis basis, std::vector<Coords> generators)
    : W_(std::move(W)), basis_(basis), gens_(std::move(generators)) {}
SubmoduleBasis::~SubmoduleBasis() = default;
SubmoduleBasis::SubmoduleBasis(SubmoduleBasis&& o) noexcept
    : W_(std::move(o.W_)), basis_(o.basis_), gens_(std::move(o.gens_)), red_(std::move(o.red_)) {}

const SubmoduleBasis::Reduced& SubmoduleBasis::reduced() const {
  std::call_once(once_, [this] {
    auto R = std::make_unique<Reduced>();
    const int N = W_->size();
    const int m = static_cast<int>(gens_.size());
    R->N = N;
    R->m = m;
    std::vector<Reduced::Row> rows;
    for (int i = 0; i < m; ++i) {
      Reduced::Row r{gens_[i], Coords(m)};
      r.cert[i] = LaurentPoly(1);
      if (!hecke::is_zero(r.vec)) rows.push_back(std::move(r));
    }
    // Unit pivots, columns from the top; repeat until no new pivot appears.
    std::vector<bool> used(rows.size(), false), pivcol(N, false);
    std::vector<int> pivot_row;
    bool progress = true;
    while (progress) {
      progress = false;
      for (int c = N - 1; c >= 0; --c) {
        if (pivcol[c]) continue;
        int sel = -1;
        for (std::size_t i = 0; i < rows.size(); ++i) {
          if (used[i] || !rows[i].vec[c].is_unit()) continue;
          if (sel < 0 || nonzeros(rows[i].vec) < nonzeros(rows[sel].vec)) sel = static_cast<int>(i);
        }
        if (sel < 0) continue;
        auto& p = rows[sel];
        const auto& unit = p.vec[c].terms().front();
        const LaurentPoly inv = LaurentPoly::monomial(-unit.exp, unit.coeff);  // unit^-1 (coeff is +-1)
        for (auto& x : p.vec) x = x * inv;
        for (auto& x : p.cert) x = x * inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
          if (static_cast<int>(i) == sel || rows[i].vec[c].is_zero()) continue;
          const LaurentPoly f = rows[i].vec[c];
          axpy(rows[i].vec, p.vec, -f);
          axpy(rows[i].cert, p.cert, -f);
        }
        used[sel] = true;
        pivcol[c] = true;
        R->pivot_col.push_back(c);
        pivot_row.push_back(sel);
        progress = true;
      }
    }
    for (int i : pivot_row) R->pivots.push_back(rows[i]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (!used[i] && !hecke::is_zero(rows[i].vec)) R->residual.push_back(rows[i]);

    std::vector<Coords> res;
    for (const auto& r : R->residual) res.push_back(r.vec);
    R->residual_rank = hecke::rank_over_fraction_field(res);

    std::deque<std::pair<int, int>> pairs;
    for (const auto& r : R->residual) {
      const int k = min_valuation(r.vec);
      R->insert(shifted(r.vec, -k), shifted(r.cert, -k), pairs);
      R->complete(pairs);
    }
    R->saturate();
    red_ = std::move(R);
  });
  return *red_;
}

int SubmoduleBasis::rank_over_fraction_field() const {
  const Reduced& R = reduced();
  return static_cast<int>(R.pivots.size()) + R.residual_rank;
}

std::vector<Coords> SubmoduleBasis::lattice_basis() const {
  const Reduced& R = reduced();
  std::vector<Coords> out;
  for (const auto& p : R.pivots) out.push_back(p.vec);
  for (const auto& g : R.gb) out.push_back(g.vec);
  return out;
}

MembershipVerdict SubmoduleBasis::membership(const Coords& target) const {
  const Reduced& R = reduced();
  if (static_cast<int>(target.size()) != R.N)
    throw std::invalid_argument("membership: target has the wrong length");
  MembershipVerdict out;
  Coords t = target;
  Coords cert(R.m);
  R.reduce_by_pivots(t, cert);
  if (hecke::is_zero(t)) {
    out.member = true;
    out.certificate = std::move(cert);
    return out;
  }

  auto find_fp = [&](const Coords& tt) -> std::optional<std::pair<int, int>> {
    for (int p : {2, 3, 5, 7, 11, 13})
      for (int a = 1; a < p; ++a) {
        const long long ainv = pow_mod(a, p - 2, p);
        std::vector<std::vector<long long>> rows;
        for (const auto& r : R.residual) {
          std::vector<long long> row(R.N);
          for (int c = 0; c < R.N; ++c) row[c] = eval_mod(r.vec[c], p, a, ainv);
          rows.push_back(std::move(row));
        }
        std::vector<long long> tv(R.N);
        for (int c = 0; c < R.N; ++c) tv[c] = eval_mod(tt[c], p, a, ainv);
        if (!in_span_mod_p(rows, tv, p)) return std::make_pair(p, a);
      }
    return std::nullopt;
  };

  std::vector<Coords> with_target;
  for (const auto& r : R.residual) with_target.push_back(r.vec);
  with_target.push_back(t);
  if (hecke::rank_over_fraction_field(with_target) > R.residual_rank) {
    out.rank_witness = true;
    out.fp_obstruction = find_fp(t);
    return out;
  }

  const int k = min_valuation(t);
  Coords acc(R.m);
  Coords rem = R.reduce(shifted(t, -k), acc);
  if (hecke::is_zero(rem)) {
    axpy(cert, shifted(acc, k), LaurentPoly(1));
    out.member = true;
    out.certificate = std::move(cert);
    return out;
  }
  out.normal_form = std::move(rem);
  out.fp_obstruction = find_fp(t);
  return out;
}

SubmoduleBasis cyclic_submodule_kl(const HeckeAlgebra& H, int w) {
  return SubmoduleBasis(H.group_ptr(), CoordBasis::kKL,
                        H.kl_left_products(unit_coords(H.size(), w)));
}

SubmoduleBasis cyclic_submodule_dual(const HeckeAlgebra& H, int w) {
  return SubmoduleBasis(H.group_ptr(), CoordBasis::kDualKL,
                        H.dual_left_products(unit_coords(H.size(), w)));
}

SubmoduleBasis cyclic_submodule(const HeckeAlgebra& H, const HeckeElt& g) {
  return SubmoduleBasis(H.group_ptr(), CoordBasis::kKL, H.kl_left_products(H.to_kl_coords(g)));
}

namespace {

SpanComparison compare_span(const HeckeAlgebra& H, const SubmoduleBasis& B,
                            const std::vector<int>& span, const char* what) {
  const int N = H.size();
  std::vector<bool> in_span(N, false);
  for (int u : span) in_span[u] = true;
  for (const Coords& g : B.generators())
    for (int c = 0; c < N; ++c)
      if (!g[c].is_zero() && !in_span[c])
        throw std::logic_error(std::string("cyclic module leaves ") + what + " at " +
                               H.group().elem(c).to_string());
  SpanComparison out;
  out.rank = B.rank_over_fraction_field();
  out.span_size = static_cast<int>(span.size());
  if (out.rank < out.span_size) {
    // Rank already decides; still name the spanning elements that are missing.
    for (int u : span)
      if (!B.contains(unit_coords(N, u))) out.missing.push_back(u);
    out.equal = false;
    return out;
  }
  for (int u : span)
    if (!B.contains(unit_coords(N, u))) out.missing.push_back(u);
  out.equal = out.missing.empty();
  return out;
}

}  // namespace

SpanComparison equals_lm(const HeckeAlgebra& H, const CellData& C, int w) {
  return compare_span(H, cyclic_submodule_kl(H, w), C.lm_set(w), "LM_w");
}

SpanComparison equals_ln_dual(const HeckeAlgebra& H, const CellData& C, int w) {
  return compare_span(H, cyclic_submodule_dual(H, w), C.ln_set(w), "LN_w");
}

std::optional<LaurentPoly> quasi_idempotent_check(const HeckeAlgebra& H, int w) {
  const Coords sq = H.kl_right_products(unit_coords(H.size(), w), w)[w];
  for (int c = 0; c < H.size(); ++c)
    if (c != w && !sq[c].is_zero()) return std::nullopt;
  return sq[w];
}

LaurentPoly parabolic_quasi_idempotent_scalar(const Parabolic& J) {
  const int L = parabolic_longest(J).length();
  LaurentPoly a;
  for (const Perm& x : parabolic_elements(J)) a += LaurentPoly::monomial(L - 2 * x.length());
  return a;
}

bool corollary_3345_hypothesis(const WeylGroup& W, const CellData& C, int w) {
  const int winv = W.inverse(w);
  for (int x = 0; x < W.size(); ++x) {
    const bool coideal = C.left().leq(w, x);
    const int a = W.mul(x, winv);
    const bool reduced_prefix = W.length(a) + W.length(w) == W.length(x);
    if (coideal != reduced_prefix) return false;
  }
  return true;
}

Cor3345Survey corollary_3345_survey(const WeylGroup& W, const CellData& C) {
  Cor3345Survey s;
  std::vector<bool> parabolic(W.size(), false);
  for (const Parabolic& J : Parabolic::all(W.rank())) parabolic[W.index(parabolic_longest(J))] = true;
  for (int w = 0; w < W.size(); ++w) {
    const bool pass = corollary_3345_hypothesis(W, C, w);
    if (pass) s.passing.push_back(w);
    if (parabolic[w]) s.parabolic_longest.push_back(w);
    if (pass && !parabolic[w]) s.passing_not_parabolic.push_back(w);
    if (!pass && parabolic[w]) s.parabolic_not_passing.push_back(w);
  }
  return s;
}

namespace {

nlohmann::ordered_json names(const WeylGroup& W, const std::vector<int>& xs) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (int x : xs) j.push_back(W.elem(x).to_string());
  return j;
}

}  // namespace

nlohmann::ordered_json to_json(const WeylGroup& W, const MembershipVerdict& v) {
  nlohmann::ordered_json j;
  j["member"] = v.member;
  if (v.member) {
    j["certificate"] = coords_to_json(W, v.certificate);
  } else {
    j["rank_witness"] = v.rank_witness;
    if (!v.normal_form.empty()) j["normal_form"] = coords_to_json(W, v.normal_form);
    if (v.fp_obstruction)
      j["fp_obstruction"] = {{"p", v.fp_obstruction->first}, {"v", v.fp_obstruction->second}};
  }
  return j;
}

nlohmann::ordered_json to_json(const WeylGroup& W, const SpanComparison& s) {
  nlohmann::ordered_json j;
  j["equal"] = s.equal;
  j["rank"] = s.rank;
  j["span_size"] = s.span_size;
  j["missing"] = names(W, s.missing);
  return j;
}

nlohmann::ordered_json to_json(const WeylGroup& W, const Cor3345Survey& s) {
  nlohmann::ordered_json j;
  j["passing"] = names(W, s.passing);
  j["parabolic_longest"] = names(W, s.parabolic_longest);
  j["passing_not_parabolic"] = names(W, s.passing_not_parabolic);
  j["parabolic_not_passing"] = names(W, s.parabolic_not_passing);
  return j;
}

}  // namespace hecke
