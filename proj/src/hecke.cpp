#include "hecke/hecke.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hecke {

namespace {

const LaurentPoly kVPlusVInv{{1, 1}, {-1, 1}};
const LaurentPoly kVInvMinusV{{-1, 1}, {1, -1}};
const LaurentPoly kVMinusVInv{{1, 1}, {-1, -1}};
const LaurentPoly kV{{1, 1}};
const LaurentPoly kVInv{{-1, 1}};

std::string coeff_prefix(const LaurentPoly& c) {
  if (c == LaurentPoly(1)) return "";
  if (c == LaurentPoly(-1)) return "-";
  if (c.is_monomial()) return c.to_string();
  return "(" + c.to_string() + ")";
}

}  // namespace

bool is_zero(const Coords& c) {
  for (const auto& a : c)
    if (!a.is_zero()) return false;
  return true;
}

bool is_zero(const IntCoords& c) {
  for (const auto& a : c)
    if (a != 0) return false;
  return true;
}

Coords unit_coords(int size, int x) {
  Coords c(size);
  c[x] = LaurentPoly(1);
  return c;
}

IntCoords eval_at_one(const Coords& c) {
  IntCoords out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = eval_at_one(c[i]);
  return out;
}

HeckeElt::HeckeElt(WeylGroupPtr W) : W_(std::move(W)), c_(W_->size()) {}

HeckeElt::HeckeElt(WeylGroupPtr W, Coords standard) : W_(std::move(W)), c_(std::move(standard)) {
  if (static_cast<int>(c_.size()) != W_->size())
    throw std::invalid_argument("coordinate vector does not match the group size");
}

HeckeElt HeckeElt::basis(WeylGroupPtr W, int x) {
  HeckeElt e(std::move(W));
  e.c_[x] = LaurentPoly(1);
  return e;
}

std::vector<int> HeckeElt::support() const {
  std::vector<int> s;
  for (int i = 0; i < static_cast<int>(c_.size()); ++i)
    if (!c_[i].is_zero()) s.push_back(i);
  return s;
}

void HeckeElt::check_same(const HeckeElt& o) const {
  if (W_ != o.W_ && !(W_ && o.W_ && W_->parabolic() == o.W_->parabolic()))
    throw std::invalid_argument("Hecke elements of different groups");
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

HeckeElt& HeckeElt::add_scaled(const HeckeElt& o, const LaurentPoly& a) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!o.c_[i].is_zero()) c_[i].add_product(a, o.c_[i]);
  return *this;
}

HeckeElt operator*(const LaurentPoly& a, const HeckeElt& b) {
  HeckeElt r(b.W_);
  r.add_scaled(b, a);
  return r;
}

bool HeckeElt::operator==(const HeckeElt& o) const {
  check_same(o);
  return c_ == o.c_;
}

std::string HeckeElt::to_string() const { return coords_to_string(*W_, c_, "H"); }

IntHeckeElt operator*(const IntHeckeElt& a, const IntHeckeElt& b) {
  const WeylGroup& W = *a.W_;
  IntCoords out(W.size());
  for (int x = 0; x < W.size(); ++x) {
    if (a.c_[x] == 0) continue;
    for (int y = 0; y < W.size(); ++y)
      if (b.c_[y] != 0) out[W.mul(x, y)] += a.c_[x] * b.c_[y];
  }
  return IntHeckeElt(a.W_, std::move(out));
}

std::string coords_to_string(const WeylGroup& W, const Coords& c, const std::string& symbol) {
  std::string s;
  for (int x = W.size() - 1; x >= 0; --x) {
    if (c[x].is_zero()) continue;
    std::string term = coeff_prefix(c[x]) + symbol + "_{" + W.elem(x).to_string() + "}";
    if (!s.empty() && term[0] != '-') s += '+';
    s += term;
  }
  return s.empty() ? "0" : s;
}

nlohmann::ordered_json coords_to_json(const WeylGroup& W, const Coords& c) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (int x = 0; x < W.size(); ++x)
    if (!c[x].is_zero()) j[W.elem(x).to_string()] = to_json(c[x]);
  return j;
}

// ---------------------------------------------------------------- KLCache

KLCache::KLCache(WeylGroupPtr W) : W_(std::move(W)) {}

std::shared_ptr<const KLCache> KLCache::build(WeylGroupPtr W) {
  auto cache = std::shared_ptr<KLCache>(new KLCache(W));
  const int N = W->size();
  cache->h_.assign(N, Coords(N));
  cache->mu_.assign(N, {});
  cache->h_[0][0] = LaurentPoly(1);
  for (int x = 1; x < N; ++x) {
    int k = 0;
    while (!W->left_descent(k, x)) ++k;
    const int y = W->lmul(k, x);
    const Coords& hy = cache->h_[y];
    Coords& row = cache->h_[x];
    // (H_s + v) * sum_u hy[u] H_u.
    for (int u = 0; u <= y; ++u) {
      if (hy[u].is_zero()) continue;
      const int su = W->lmul(k, u);
      row[su] += hy[u];
      row[u].add_scaled(hy[u], 1, W->length(su) > W->length(u) ? 1 : -1);
    }
    // Subtract mu(z, y) * KL(z) over z < y with s z < z.
    for (const auto& [z, m] : cache->mu_[y]) {
      if (W->length(z) >= W->length(y) || !W->left_descent(k, z)) continue;
      const Coords& hz = cache->h_[z];
      for (int u = 0; u <= z; ++u)
        if (!hz[u].is_zero()) row[u].add_scaled(hz[u], -m);
    }
    for (int u = 0; u < x; ++u) {
      const Integer m = row[u].coeff_at(1);
      if (m != 0) {
        cache->mu_[x].emplace_back(u, m);
        cache->mu_[u].emplace_back(x, m);
      }
    }
  }
  for (auto& edges : cache->mu_) std::sort(edges.begin(), edges.end());
  return cache;
}

void KLCache::build_mu() {
  const int N = size();
  mu_.assign(N, {});
  for (int x = 0; x < N; ++x)
    for (int u = 0; u < x; ++u) {
      const Integer m = h_[x][u].coeff_at(1);
      if (m != 0) {
        mu_[x].emplace_back(u, m);
        mu_[u].emplace_back(x, m);
      }
    }
  for (auto& edges : mu_) std::sort(edges.begin(), edges.end());
}

Integer KLCache::mu(int x, int y) const {
  for (const auto& [z, m] : mu_[x])
    if (z == y) return m;
  return 0;
}

void KLCache::validate() const {
  const WeylGroup& W = *W_;
  const int N = size();
  for (int x = 0; x < N; ++x) {
    if (h_[x][x] != LaurentPoly(1))
      throw std::runtime_error("KL cache: h_{x,x} != 1 at x = " + W.elem(x).to_string());
    for (int y = 0; y < N; ++y) {
      const LaurentPoly& p = h_[x][y];
      if (p.is_zero() || y == x) continue;
      const std::string where = W.elem(x).to_string() + "|" + W.elem(y).to_string();
      if (!W.bruhat_leq(y, x))
        throw std::runtime_error("KL cache: nonzero h with y not below x at " + where);
      if (p.valuation() < 1)
        throw std::runtime_error("KL cache: h_{x,y} not in vZ[v] at " + where);
      if (p.degree() > W.length(x) - W.length(y))
        throw std::runtime_error("KL cache: degree exceeds the length gap at " + where);
    }
  }
}

KLCache::DegreeStats KLCache::degree_stats() const {
  DegreeStats st;
  for (int x = 0; x < size(); ++x)
    for (int y = 0; y < size(); ++y) {
      if (y == x || h_[x][y].is_zero()) continue;
      ++st.nonzero_offdiagonal;
      if (h_[x][y].degree() == W_->length(x) - W_->length(y))
        ++st.degree_equals_length_gap;
      else
        ++st.degree_below_length_gap;
    }
  return st;
}

nlohmann::json KLCache::to_json() const {
  nlohmann::json h = nlohmann::json::object();
  for (int x = 0; x < size(); ++x)
    for (int y = 0; y < size(); ++y)
      if (!h_[x][y].is_zero())
        h[W_->elem(x).to_string() + "|" + W_->elem(y).to_string()] = hecke::to_json(h_[x][y]);
  nlohmann::json j;
  j["version"] = 1;
  j["n"] = W_->rank();
  j["h"] = std::move(h);
  return j;
}

void KLCache::save(const std::filesystem::path& file) const {
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  const std::filesystem::path tmp = file.string() + ".tmp";
  {
    std::ofstream os(tmp);
    if (!os) throw std::runtime_error("cannot write " + tmp.string());
    os << to_json().dump() << '\n';
  }
  std::filesystem::rename(tmp, file);
}

std::shared_ptr<const KLCache> KLCache::from_json(const nlohmann::json& j, WeylGroupPtr W) {
  if (j.value("version", 0) != 1) throw std::runtime_error("KL cache: unsupported version");
  if (j.at("n").get<int>() != W->rank()) throw std::runtime_error("KL cache: rank mismatch");
  auto cache = std::shared_ptr<KLCache>(new KLCache(W));
  const int N = W->size();
  cache->h_.assign(N, Coords(N));
  for (const auto& [key, val] : j.at("h").items()) {
    const auto bar = key.find('|');
    if (bar == std::string::npos) throw std::runtime_error("KL cache: bad key " + key);
    const int x = W->index(Perm::parse(key.substr(0, bar), W->rank()));
    const int y = W->index(Perm::parse(key.substr(bar + 1), W->rank()));
    cache->h_[x][y] = laurent_from_json(nlohmann::ordered_json(val));
  }
  cache->validate();
  cache->build_mu();
  return cache;
}

std::shared_ptr<const KLCache> KLCache::load(const std::filesystem::path& file, WeylGroupPtr W) {
  std::ifstream is(file);
  if (!is) throw std::runtime_error("cannot read " + file.string());
  return from_json(nlohmann::json::parse(is), std::move(W));
}

std::filesystem::path KLCache::file_name(int n) {
  return "kl-cache-s" + std::to_string(n) + ".json";
}

std::shared_ptr<const KLCache> KLCache::load_or_build(int n, const std::filesystem::path& dir) {
  auto W = std::make_shared<const WeylGroup>(n);
  if (dir.empty()) return build(W);
  const auto file = dir / file_name(n);
  if (std::filesystem::exists(file)) return load(file, W);
  auto cache = build(W);
  cache->save(file);
  return cache;
}

// ----------------------------------------------------------- HeckeAlgebra

HeckeAlgebra::HeckeAlgebra(KLCachePtr kl) : kl_(std::move(kl)), lazy_(std::make_unique<Lazy>()) {}

std::shared_ptr<HeckeAlgebra> HeckeAlgebra::for_rank(int n) {
  return std::make_shared<HeckeAlgebra>(KLCache::build(std::make_shared<const WeylGroup>(n)));
}

std::shared_ptr<HeckeAlgebra> HeckeAlgebra::for_parabolic(const Parabolic& J) {
  return std::make_shared<HeckeAlgebra>(KLCache::build(std::make_shared<const WeylGroup>(J)));
}

HeckeElt HeckeAlgebra::mul_simple_right(const HeckeElt& a, int slot) const {
  const WeylGroup& W = group();
  HeckeElt r(group_ptr());
  Coords out(W.size());
  for (int x = 0; x < W.size(); ++x) {
    const LaurentPoly& c = a[x];
    if (c.is_zero()) continue;
    const int xs = W.rmul(slot, x);
    out[xs] += c;
    if (W.length(xs) < W.length(x)) out[x].add_product(kVInvMinusV, c);
  }
  return HeckeElt(group_ptr(), std::move(out));
}

HeckeElt HeckeAlgebra::mul_simple_left(int slot, const HeckeElt& a) const {
  const WeylGroup& W = group();
  Coords out(W.size());
  for (int x = 0; x < W.size(); ++x) {
    const LaurentPoly& c = a[x];
    if (c.is_zero()) continue;
    const int sx = W.lmul(slot, x);
    out[sx] += c;
    if (W.length(sx) < W.length(x)) out[x].add_product(kVInvMinusV, c);
  }
  return HeckeElt(group_ptr(), std::move(out));
}

HeckeElt HeckeAlgebra::mul(const HeckeElt& a, const HeckeElt& b) const {
  HeckeElt r = zero();
  for (int x : b.support()) {
    HeckeElt t = a;
    for (int k : group().reduced_slots(x)) t = mul_simple_right(t, k);
    r.add_scaled(t, b[x]);
  }
  return r;
}

const HeckeElt& HeckeAlgebra::dual_kl_element(int x) const {
  std::call_once(lazy_->dual_once, [this] {
    const WeylGroup& W = group();
    const HeckeElt hw0 = standard(W.longest());
    lazy_->dual.reserve(W.size());
    for (int w = 0; w < W.size(); ++w)
      lazy_->dual.push_back(mul(beta(kl_element(W.mul(w, W.longest()))), hw0));
  });
  return lazy_->dual[x];
}

const HeckeElt& HeckeAlgebra::tilting_element(int x) const {
  std::call_once(lazy_->tilt_once, [this] {
    const WeylGroup& W = group();
    const HeckeElt hw0 = standard(W.longest());
    lazy_->tilt.reserve(W.size());
    for (int w = 0; w < W.size(); ++w)
      lazy_->tilt.push_back(mul(hw0, kl_element(W.mul(W.longest(), w))));
  });
  return lazy_->tilt[x];
}

Coords HeckeAlgebra::to_kl_coords(const HeckeElt& a) const {
  Coords r = a.coords();
  Coords out(size());
  for (int x = size() - 1; x >= 0; --x) {
    if (r[x].is_zero()) continue;
    const LaurentPoly c = r[x];
    const Coords& hx = kl_->row(x);
    for (int y = 0; y <= x; ++y)
      if (!hx[y].is_zero()) r[y].add_product(-c, hx[y]);
    out[x] = c;
  }
  return out;
}

namespace {

// Back-substitution for bases that are unitriangular with support at or
// above the diagonal in index order.
template <class Elem>
Coords upper_unitriangular_coords(const HeckeElt& a, int N, Elem elem) {
  Coords r = a.coords();
  Coords out(N);
  for (int x = 0; x < N; ++x) {
    if (r[x].is_zero()) continue;
    const LaurentPoly c = r[x];
    const HeckeElt& b = elem(x);
    for (int y = x; y < N; ++y)
      if (!b[y].is_zero()) r[y].add_product(-c, b[y]);
    out[x] = c;
  }
  return out;
}

}  // namespace

Coords HeckeAlgebra::to_dual_kl_coords(const HeckeElt& a) const {
  return upper_unitriangular_coords(a, size(),
                                    [this](int x) -> const HeckeElt& { return dual_kl_element(x); });
}

Coords HeckeAlgebra::to_tilting_coords(const HeckeElt& a) const {
  return upper_unitriangular_coords(a, size(),
                                    [this](int x) -> const HeckeElt& { return tilting_element(x); });
}

HeckeElt HeckeAlgebra::from_kl_coords(const Coords& c) const {
  HeckeElt r = zero();
  for (int x = 0; x < size(); ++x)
    if (!c[x].is_zero()) r.add_scaled(kl_element(x), c[x]);
  return r;
}

HeckeElt HeckeAlgebra::from_dual_kl_coords(const Coords& c) const {
  HeckeElt r = zero();
  for (int x = 0; x < size(); ++x)
    if (!c[x].is_zero()) r.add_scaled(dual_kl_element(x), c[x]);
  return r;
}

LaurentPoly HeckeAlgebra::tau(const HeckeElt& a) const { return a[0]; }

LaurentPoly HeckeAlgebra::form(const HeckeElt& a, const HeckeElt& b) const {
  LaurentPoly r;
  for (int x = 0; x < size(); ++x)
    if (!a[x].is_zero()) r.add_product(a[x], b[group().inverse(x)]);
  return r;
}

HeckeElt HeckeAlgebra::star(const HeckeElt& a) const {
  Coords out(size());
  for (int x = 0; x < size(); ++x) out[group().inverse(x)] = a[x];
  return HeckeElt(group_ptr(), std::move(out));
}

HeckeElt HeckeAlgebra::beta(const HeckeElt& a) const {
  Coords out(size());
  for (int x = 0; x < size(); ++x) out[x] = beta_scalar(a[x]);
  return HeckeElt(group_ptr(), std::move(out));
}

const HeckeElt& HeckeAlgebra::bar_standard(int x) const {
  std::call_once(lazy_->bar_once, [this] {
    const WeylGroup& W = group();
    auto& table = lazy_->bar;
    table.reserve(W.size());
    table.push_back(one());
    for (int u = 1; u < W.size(); ++u) {
      int k = 0;
      while (!W.right_descent(k, u)) ++k;
      // bar(H_u) = bar(H_{us}) * (H_s + v - v^-1).
      const HeckeElt& prev = table[W.rmul(k, u)];
      HeckeElt next = mul_simple_right(prev, k);
      next.add_scaled(prev, kVMinusVInv);
      table.push_back(std::move(next));
    }
  });
  return lazy_->bar[x];
}

HeckeElt HeckeAlgebra::bar(const HeckeElt& a) const {
  HeckeElt r = zero();
  for (int x : a.support()) r.add_scaled(bar_standard(x), hecke::bar(a[x]));
  return r;
}

IntHeckeElt HeckeAlgebra::specialize(const HeckeElt& a) const {
  return IntHeckeElt(group_ptr(), eval_at_one(a.coords()));
}

LaurentPoly HeckeAlgebra::gamma(int x, int y, int w) const {
  return to_kl_coords(mul(kl_element(x), kl_element(y)))[w];
}

LaurentPoly HeckeAlgebra::gamma_hat(int x, int y, int w) const {
  return to_dual_kl_coords(mul(dual_kl_element(x), dual_kl_element(y)))[w];
}

LaurentPoly HeckeAlgebra::gamma_hat_via_prop271(int x, int y, int w) const {
  const WeylGroup& W = group();
  const int w0 = W.longest();
  const int xw0 = W.mul(x, w0), yw0 = W.mul(y, w0), ww0 = W.mul(w, w0);
  // G[z][ww0] = gamma_{x w0, z}^{w w0}.
  const std::vector<Coords> G = kl_right_products(unit_coords(size(), xw0));
  LaurentPoly total;
  for (int a = 0; a < size(); ++a) {
    const LaurentPoly& hya = kl_->h(yw0, a);
    if (hya.is_zero()) continue;
    const int w0a = W.mul(w0, a);
    const LaurentPoly bar_hya = hecke::bar(hya);
    for (int z = 0; z < size(); ++z) {
      const LaurentPoly& g = G[z][ww0];
      if (g.is_zero()) continue;
      const LaurentPoly& hza = kl_->h(W.mul(w0, z), a);
      if (hza.is_zero()) continue;
      LaurentPoly term = beta_scalar(hza * bar_hya * g);
      if ((W.length(w0a) - W.length(z)) % 2 != 0) term = -term;
      total += term;
    }
  }
  return total;
}

LaurentPoly HeckeAlgebra::m_coeff(int w, int x, int y) const {
  return dual_right_products(unit_coords(size(), w), x)[x][y];
}

LaurentPoly HeckeAlgebra::n_coeff(int x, int w, int y) const {
  return dual_left_products(unit_coords(size(), w), x)[x][y];
}

// ------------------------------------------------------ W-graph kernels

Coords HeckeAlgebra::kl_left_simple(int slot, const Coords& c) const {
  const WeylGroup& W = group();
  Coords out(size());
  for (int y = 0; y < size(); ++y) {
    if (c[y].is_zero()) continue;
    const int sy = W.lmul(slot, y);
    if (W.length(sy) < W.length(y)) {
      out[y].add_product(kVPlusVInv, c[y]);
      continue;
    }
    out[sy] += c[y];
    for (const auto& [z, m] : kl_->mu_edges(y))
      if (W.length(z) < W.length(y) && W.left_descent(slot, z)) out[z].add_scaled(c[y], m);
  }
  return out;
}

Coords HeckeAlgebra::kl_right_simple(const Coords& c, int slot) const {
  const WeylGroup& W = group();
  Coords out(size());
  for (int y = 0; y < size(); ++y) {
    if (c[y].is_zero()) continue;
    const int ys = W.rmul(slot, y);
    if (W.length(ys) < W.length(y)) {
      out[y].add_product(kVPlusVInv, c[y]);
      continue;
    }
    out[ys] += c[y];
    for (const auto& [z, m] : kl_->mu_edges(y))
      if (W.length(z) < W.length(y) && W.right_descent(slot, z)) out[z].add_scaled(c[y], m);
  }
  return out;
}

Coords HeckeAlgebra::dual_left_simple(int slot, const Coords& c) const {
  const WeylGroup& W = group();
  Coords out(size());
  for (int y = 0; y < size(); ++y) {
    if (c[y].is_zero() || !W.left_descent(slot, y)) continue;
    out[y].add_product(kVPlusVInv, c[y]);
    for (const auto& [z, m] : kl_->mu_edges(y))
      if (!W.left_descent(slot, z)) out[z].add_scaled(c[y], m);
  }
  return out;
}

Coords HeckeAlgebra::dual_right_simple(const Coords& c, int slot) const {
  const WeylGroup& W = group();
  Coords out(size());
  for (int y = 0; y < size(); ++y) {
    if (c[y].is_zero() || !W.right_descent(slot, y)) continue;
    out[y].add_product(kVPlusVInv, c[y]);
    for (const auto& [z, m] : kl_->mu_edges(y))
      if (!W.right_descent(slot, z)) out[z].add_scaled(c[y], m);
  }
  return out;
}

template <class Kernel>
std::vector<Coords> HeckeAlgebra::products(const Coords& c, int upto, Side side,
                                           Kernel kernel) const {
  const WeylGroup& W = group();
  const int last = upto < 0 ? size() - 1 : upto;
  std::vector<Coords> P(last + 1);
  P[0] = c;
  for (int x = 1; x <= last; ++x) {
    int k = 0;
    if (side == Side::kLeft) {
      while (!W.left_descent(k, x)) ++k;
    } else {
      while (!W.right_descent(k, x)) ++k;
    }
    const int y = side == Side::kLeft ? W.lmul(k, x) : W.rmul(k, x);
    Coords cur = kernel(k, P[y]);
    // KL(s) KL(y) = KL(x) + sum mu(z, y) KL(z) over z < y with s a descent
    // of z on the same side.
    for (const auto& [z, m] : kl_->mu_edges(y)) {
      if (W.length(z) >= W.length(y)) continue;
      const bool desc = side == Side::kLeft ? W.left_descent(k, z) : W.right_descent(k, z);
      if (!desc) continue;
      const Coords& pz = P[z];
      for (int u = 0; u < size(); ++u)
        if (!pz[u].is_zero()) cur[u].add_scaled(pz[u], -m);
    }
    P[x] = std::move(cur);
  }
  return P;
}

std::vector<Coords> HeckeAlgebra::kl_left_products(const Coords& c, int upto) const {
  return products(c, upto, Side::kLeft,
                  [this](int k, const Coords& v) { return kl_left_simple(k, v); });
}

std::vector<Coords> HeckeAlgebra::kl_right_products(const Coords& c, int upto) const {
  return products(c, upto, Side::kRight,
                  [this](int k, const Coords& v) { return kl_right_simple(v, k); });
}

std::vector<Coords> HeckeAlgebra::dual_left_products(const Coords& c, int upto) const {
  return products(c, upto, Side::kLeft,
                  [this](int k, const Coords& v) { return dual_left_simple(k, v); });
}

std::vector<Coords> HeckeAlgebra::dual_right_products(const Coords& c, int upto) const {
  return products(c, upto, Side::kRight,
                  [this](int k, const Coords& v) { return dual_right_simple(v, k); });
}

}  // namespace hecke
