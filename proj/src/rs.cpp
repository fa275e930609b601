#include "hecke/rs.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace hecke {

TableauPair rs(const Perm& w) {
  TableauPair out;
  for (int i = 1; i <= w.rank(); ++i) {
    int x = w(i);
    std::size_t r = 0;
    while (true) {
      if (r == out.P.size()) {
        out.P.push_back({x});
        out.Q.push_back({i});
        break;
      }
      auto& row = out.P[r];
      auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        row.push_back(x);
        out.Q[r].push_back(i);
        break;
      }
      std::swap(x, *it);
      ++r;
    }
  }
  return out;
}

Shape shape_of(const Tableau& T) {
  Shape s;
  for (const auto& row : T) s.push_back(static_cast<int>(row.size()));
  return s;
}

Shape shape(const Perm& w) { return shape_of(rs(w).P); }

bool is_standard(const Tableau& T) {
  int n = 0;
  for (std::size_t r = 0; r < T.size(); ++r) {
    if (T[r].empty()) return false;
    if (r > 0 && T[r].size() > T[r - 1].size()) return false;
    n += static_cast<int>(T[r].size());
  }
  std::vector<bool> seen(n + 1, false);
  for (std::size_t r = 0; r < T.size(); ++r) {
    for (std::size_t c = 0; c < T[r].size(); ++c) {
      const int x = T[r][c];
      if (x < 1 || x > n || seen[x]) return false;
      seen[x] = true;
      if (c > 0 && T[r][c - 1] >= x) return false;
      if (r > 0 && T[r - 1][c] >= x) return false;
    }
  }
  return true;
}

Perm inverse_rs(const Tableau& Pin, const Tableau& Qin) {
  if (shape_of(Pin) != shape_of(Qin)) throw std::invalid_argument("inverse_rs: shape mismatch");
  if (!is_standard(Pin) || !is_standard(Qin))
    throw std::invalid_argument("inverse_rs: tableaux must be standard");
  Tableau P = Pin, Q = Qin;
  int n = 0;
  for (const auto& row : P) n += static_cast<int>(row.size());
  std::vector<int> img(n);
  for (int i = n; i >= 1; --i) {
    // Locate i in Q; it sits at the end of its row.
    std::size_t r = 0;
    while (Q[r].back() != i) ++r;
    Q[r].pop_back();
    int x = P[r].back();
    P[r].pop_back();
    if (P[r].empty()) {
      P.pop_back();
      Q.pop_back();
    }
    // Reverse bumping up through the rows above.
    while (r > 0) {
      --r;
      auto& row = P[r];
      auto it = std::lower_bound(row.begin(), row.end(), x);
      --it;
      std::swap(x, *it);
    }
    img[i - 1] = x;
  }
  return Perm::from_one_line(img);
}

bool dominance_leq(const Shape& lambda, const Shape& mu) {
  const int a = std::accumulate(lambda.begin(), lambda.end(), 0);
  const int b = std::accumulate(mu.begin(), mu.end(), 0);
  if (a != b) throw std::invalid_argument("dominance order needs partitions of the same n");
  int sl = 0, sm = 0;
  for (std::size_t k = 0; k < std::max(lambda.size(), mu.size()); ++k) {
    sl += k < lambda.size() ? lambda[k] : 0;
    sm += k < mu.size() ? mu[k] : 0;
    if (sl > sm) return false;
  }
  return true;
}

Integer hook_length_count(const Shape& lambda) {
  int n = 0;
  for (int p : lambda) n += p;
  Integer num = 1;
  for (int i = 2; i <= n; ++i) num *= i;
  Integer den = 1;
  for (std::size_t r = 0; r < lambda.size(); ++r) {
    for (int c = 0; c < lambda[r]; ++c) {
      int below = 0;
      for (std::size_t rr = r + 1; rr < lambda.size() && lambda[rr] > c; ++rr) ++below;
      den *= lambda[r] - c - 1 + below + 1;
    }
  }
  return num / den;
}

std::vector<Shape> partitions(int n) {
  std::vector<Shape> out;
  Shape cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Tableau> standard_tableaux(const Shape& lambda) {
  std::vector<Tableau> out;
  int n = 0;
  for (int p : lambda) n += p;
  Tableau T(lambda.size());
  std::function<void(int)> rec = [&](int next) {
    if (next > n) {
      out.push_back(T);
      return;
    }
    for (std::size_t r = 0; r < lambda.size(); ++r) {
      const int len = static_cast<int>(T[r].size());
      if (len < lambda[r] && (r == 0 || static_cast<int>(T[r - 1].size()) > len)) {
        T[r].push_back(next);
        rec(next + 1);
        T[r].pop_back();
      }
    }
  };
  rec(1);
  return out;
}

namespace {

std::vector<Perm> cell_by(const Perm& w, bool use_q) {
  const TableauPair t = rs(w);
  const Tableau& key = use_q ? t.Q : t.P;
  std::vector<Perm> out;
  for (const Tableau& other : standard_tableaux(shape_of(key)))
    out.push_back(use_q ? inverse_rs(other, key) : inverse_rs(key, other));
  std::sort(out.begin(), out.end(), LengthLexLess{});
  return out;
}

}  // namespace

std::vector<Perm> left_cell_of(const Perm& w) { return cell_by(w, true); }
std::vector<Perm> right_cell_of(const Perm& w) { return cell_by(w, false); }

Perm duflo_involution_of_left_cell(const Tableau& Q) { return inverse_rs(Q, Q); }

std::string tableau_to_string(const Tableau& T) {
  std::string s;
  for (std::size_t r = 0; r < T.size(); ++r) {
    if (r) s += '/';
    for (std::size_t c = 0; c < T[r].size(); ++c) {
      if (c && T[r][c] > 9) s += ',';
      s += std::to_string(T[r][c]);
    }
  }
  return s;
}

nlohmann::ordered_json tableau_to_json(const Tableau& T) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& row : T) j.push_back(row);
  return j;
}

Tableau tableau_from_json(const nlohmann::ordered_json& j) {
  Tableau T = j.get<Tableau>();
  if (!is_standard(T)) throw std::invalid_argument("tableau JSON is not a standard tableau");
  return T;
}

}  // namespace hecke
