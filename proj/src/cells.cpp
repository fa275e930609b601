#include "hecke/cells.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "hecke/rs.hpp"

namespace hecke {

std::string to_string(Order o) {
  switch (o) {
    case Order::kLeft: return "left";
    case Order::kRight: return "right";
    case Order::kTwoSided: return "two-sided";
  }
  return "?";
}

Order order_from_string(std::string_view s) {
  if (s == "left" || s == "L") return Order::kLeft;
  if (s == "right" || s == "R") return Order::kRight;
  if (s == "two-sided" || s == "twosided" || s == "J") return Order::kTwoSided;
  throw std::invalid_argument("unknown order: " + std::string(s));
}

namespace {

// Successors of x under KL(s) * - (left) or - * KL(s) (right).
void add_edges(const KLCache& kl, bool left, std::vector<std::vector<int>>& edges) {
  const WeylGroup& W = kl.weyl();
  for (int x = 0; x < W.size(); ++x)
    for (int k = 0; k < W.num_simples(); ++k) {
      const bool desc = left ? W.left_descent(k, x) : W.right_descent(k, x);
      if (desc) continue;  // KL(s) KL(x) = (v+v^-1) KL(x)
      edges[x].push_back(left ? W.lmul(k, x) : W.rmul(k, x));
      for (const auto& [z, m] : kl.mu_edges(x)) {
        if (W.length(z) >= W.length(x)) continue;
        if (left ? W.left_descent(k, z) : W.right_descent(k, z)) edges[x].push_back(z);
      }
    }
}

}  // namespace

Preorder::Preorder(const KLCache& kl, Order order) : order_(order) {
  const int N = kl.size();
  edges_.assign(N, {});
  if (order != Order::kRight) add_edges(kl, true, edges_);
  if (order != Order::kLeft) add_edges(kl, false, edges_);
  for (auto& e : edges_) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
  }

  reach_.assign(N, boost::dynamic_bitset<>(N));
  std::deque<int> queue;
  for (int x = 0; x < N; ++x) {
    auto& seen = reach_[x];
    seen.set(x);
    queue.assign(1, x);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int y : edges_[u])
        if (!seen[y]) {
          seen.set(y);
          queue.push_back(y);
        }
    }
  }

  class_.assign(N, -1);
  for (int x = 0; x < N; ++x) {
    if (class_[x] >= 0) continue;
    const int id = static_cast<int>(classes_.size());
    classes_.emplace_back();
    for (int y = x; y < N; ++y)
      if (reach_[x][y] && reach_[y][x]) {
        class_[y] = id;
        classes_.back().push_back(y);
      }
  }

  const int C = static_cast<int>(classes_.size());
  auto below = [&](int a, int b) {
    return a != b && leq(classes_[a][0], classes_[b][0]);
  };
  for (int a = 0; a < C; ++a)
    for (int b = 0; b < C; ++b) {
      if (!below(a, b)) continue;
      bool cover = true;
      for (int c = 0; c < C && cover; ++c)
        if (below(a, c) && below(c, b)) cover = false;
      if (cover) hasse_.emplace_back(a, b);
    }
}

std::vector<int> Preorder::up_set(int w) const {
  std::vector<int> out;
  for (int u = 0; u < size(); ++u)
    if (leq(w, u)) out.push_back(u);
  return out;
}

std::vector<int> Preorder::down_set(int w) const {
  std::vector<int> out;
  for (int u = 0; u < size(); ++u)
    if (leq(u, w)) out.push_back(u);
  return out;
}

CellData::CellData(KLCachePtr kl)
    : kl_(std::move(kl)),
      left_(*kl_, Order::kLeft),
      right_(*kl_, Order::kRight),
      two_sided_(*kl_, Order::kTwoSided) {}

const Preorder& CellData::get(Order o) const {
  switch (o) {
    case Order::kLeft: return left_;
    case Order::kRight: return right_;
    case Order::kTwoSided: return two_sided_;
  }
  throw std::logic_error("bad order");
}

std::vector<int> a_function(const HeckeAlgebra& H) {
  const int N = H.size();
  std::vector<int> a(N, 0);
  for (int x = 0; x < N; ++x) {
    const auto P = H.kl_right_products(unit_coords(N, x));
    for (const Coords& row : P)
      for (int z = 0; z < N; ++z)
        if (!row[z].is_zero()) a[z] = std::max(a[z], row[z].degree());
  }
  return a;
}

nlohmann::ordered_json to_json(const PropertyCheck& c) {
  nlohmann::ordered_json j;
  j["name"] = c.name;
  j["asserted"] = c.asserted;
  j["passed"] = c.passed;
  j["checked"] = c.checked;
  j["witnesses"] = c.witnesses;
  return j;
}

namespace {

void record(PropertyCheck& c, bool ok, const std::string& witness) {
  ++c.checked;
  if (ok) return;
  c.passed = false;
  if (c.witnesses.size() < 5) c.witnesses.push_back(witness);
}

}  // namespace

std::vector<PropertyCheck> afunction_property_report(const HeckeAlgebra& H, const CellData& C,
                                                     const std::vector<int>& a) {
  const WeylGroup& W = H.group();
  const int N = W.size();
  auto name = [&](int x) { return W.elem(x).to_string(); };
  std::vector<PropertyCheck> out;

  for (Order o : {Order::kLeft, Order::kRight, Order::kTwoSided}) {
    const Preorder& P = C.get(o);
    PropertyCheck mono{"monotone under " + to_string(o) + " order: x <= y implies a(x) <= a(y)"};
    PropertyCheck strict{"strict under " + to_string(o) + " order: x < y implies a(x) < a(y)",
                         false};
    for (int x = 0; x < N; ++x)
      for (int y = 0; y < N; ++y) {
        if (!P.leq(x, y)) continue;
        record(mono, a[x] <= a[y], name(x) + " <= " + name(y));
        if (!P.leq(y, x)) record(strict, a[x] < a[y], name(x) + " < " + name(y));
      }
    out.push_back(std::move(mono));
    out.push_back(std::move(strict));
  }

  PropertyCheck bound{"a(x) <= l(x)"};
  for (int x = 0; x < N; ++x) record(bound, a[x] <= W.length(x), name(x));
  out.push_back(std::move(bound));

  PropertyCheck longest{"a(w0') = l(w0') for every standard parabolic"};
  for (const Parabolic& J : Parabolic::all(W.rank())) {
    const int w = W.index(parabolic_longest(J));
    record(longest, a[w] == W.length(w), J.to_string());
  }
  out.push_back(std::move(longest));

  PropertyCheck first{"first-index reading: max deg gamma_{w,x}^y over x,y equals a(w)", false};
  PropertyCheck top{"deg gamma_{w,x}^y = a(w) implies x ~_J w", false};
  PropertyCheck out_top{"deg gamma_{x,y}^z = a(z) implies x ~_J y ~_J z", false};
  for (int w = 0; w < N; ++w) {
    const auto P = H.kl_right_products(unit_coords(N, w));
    int best = 0;
    for (int x = 0; x < N; ++x)
      for (int y = 0; y < N; ++y) {
        const LaurentPoly& g = P[x][y];
        if (g.is_zero()) continue;
        best = std::max(best, g.degree());
        const std::string where = "w=" + name(w) + " x=" + name(x) + " y=" + name(y);
        if (g.degree() == a[w]) record(top, C.two_sided().equiv(x, w), where);
        if (g.degree() == a[y])
          record(out_top, C.two_sided().equiv(w, x) && C.two_sided().equiv(x, y), where);
      }
    record(first, best == a[w], name(w) + ": " + std::to_string(best) + " vs " + std::to_string(a[w]));
  }
  out.push_back(std::move(first));
  out.push_back(std::move(top));
  out.push_back(std::move(out_top));
  return out;
}

std::vector<std::pair<int, int>> involution_hasse_edges(const WeylGroup& W, const Preorder& left) {
  std::vector<int> inv;
  for (int x = 0; x < W.size(); ++x)
    if (W.inverse(x) == x) inv.push_back(x);
  std::vector<std::pair<int, int>> out;
  for (int a : inv)
    for (int b : inv) {
      if (a == b || !left.leq(a, b)) continue;
      bool cover = true;
      for (int c : inv)
        if (c != a && c != b && left.leq(a, c) && left.leq(c, b)) {
          cover = false;
          break;
        }
      if (cover) out.emplace_back(a, b);
    }
  return out;
}

std::string involution_hasse_dot(const WeylGroup& W, const Preorder& left) {
  std::ostringstream os;
  os << "digraph involutions {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int x = 0; x < W.size(); ++x)
    if (W.inverse(x) == x)
      os << "  \"" << W.elem(x).to_string() << "\" [label=\""
         << tableau_to_string(rs(W.elem(x)).P) << "\"];\n";
  for (const auto& [a, b] : involution_hasse_edges(W, left))
    os << "  \"" << W.elem(a).to_string() << "\" -> \"" << W.elem(b).to_string() << "\";\n";
  os << "}\n";
  return os.str();
}

nlohmann::ordered_json cells_to_json(const WeylGroup& W, const Preorder& P) {
  nlohmann::ordered_json j;
  j["version"] = 1;
  j["n"] = W.rank();
  j["order"] = to_string(P.order());
  nlohmann::ordered_json classes = nlohmann::ordered_json::array();
  for (const auto& cls : P.classes()) {
    nlohmann::ordered_json c = nlohmann::ordered_json::array();
    for (int x : cls) c.push_back(W.elem(x).to_string());
    classes.push_back(std::move(c));
  }
  j["classes"] = std::move(classes);
  nlohmann::ordered_json hasse = nlohmann::ordered_json::array();
  for (const auto& [a, b] : P.hasse()) hasse.push_back({a, b});
  j["hasse"] = std::move(hasse);
  return j;
}

}  // namespace hecke
