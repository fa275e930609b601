#include "hecke/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace hecke {

namespace {

void check_rank(int n) {
  if (n < 1 || n > Perm::kMaxRank)
    throw std::invalid_argument("rank must be in 1.." + std::to_string(Perm::kMaxRank));
}

void check_same_rank(const Perm& a, const Perm& b) {
  if (a.rank() != b.rank())
    throw std::invalid_argument("rank mismatch: S_" + std::to_string(a.rank()) + " vs S_" +
                                std::to_string(b.rank()));
}

}  // namespace

Perm Perm::identity(int n) {
  check_rank(n);
  Perm p;
  p.n_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) p.img_[i] = static_cast<std::uint8_t>(i + 1);
  return p;
}

Perm Perm::from_one_line(std::span<const int> images) {
  const int n = static_cast<int>(images.size());
  check_rank(n);
  Perm p;
  p.n_ = static_cast<std::uint8_t>(n);
  std::array<bool, kMaxRank + 1> seen{};
  for (int i = 0; i < n; ++i) {
    const int v = images[i];
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("not a permutation of 1..n");
    seen[v] = true;
    p.img_[i] = static_cast<std::uint8_t>(v);
  }
  return p;
}

Perm Perm::simple(int i, int n) {
  Perm p = identity(n);
  if (i < 1 || i >= n) throw std::invalid_argument("simple reflection index out of range");
  std::swap(p.img_[i - 1], p.img_[i]);
  return p;
}

Perm Perm::from_word(std::span<const int> word, int n) {
  Perm p = identity(n);
  for (int i : word) {
    if (i < 1 || i >= n) throw std::invalid_argument("simple reflection index out of range");
    std::swap(p.img_[i - 1], p.img_[i]);
  }
  return p;
}

Perm Perm::parse(std::string_view text, int n) {
  std::string s(text);
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  if (s == "e") return identity(n);
  if (!s.empty() && s[0] == 's') {
    std::vector<int> word;
    for (char& c : s)
      if (c == ',') c = ' ';
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) {
      if (tok.size() < 2 || tok[0] != 's') throw std::invalid_argument("bad reduced word: " + s);
      word.push_back(std::stoi(tok.substr(1)));
    }
    return from_word(word, n);
  }
  std::vector<int> images;
  for (char c : s) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) continue;
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("bad permutation text: " + s);
    images.push_back(c - '0');
  }
  if (static_cast<int>(images.size()) != n)
    throw std::invalid_argument("permutation '" + s + "' is not of rank " + std::to_string(n));
  return from_one_line(images);
}

std::vector<int> Perm::one_line() const { return {img_.begin(), img_.begin() + n_}; }

std::string Perm::to_string() const {
  std::string s;
  for (int i = 0; i < n_; ++i) {
    if (n_ > 9 && i > 0) s += ',';
    s += std::to_string(img_[i]);
  }
  return s;
}

Perm Perm::compose(const Perm& y) const {
  check_same_rank(*this, y);
  Perm r;
  r.n_ = n_;
  for (int i = 0; i < n_; ++i) r.img_[i] = img_[y.img_[i] - 1];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.n_ = n_;
  for (int i = 0; i < n_; ++i) r.img_[img_[i] - 1] = static_cast<std::uint8_t>(i + 1);
  return r;
}

int Perm::length() const {
  int inv = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (img_[i] > img_[j]) ++inv;
  return inv;
}

bool Perm::has_left_descent(int i) const {
  // s_i w < w iff value i+1 appears before value i.
  for (int k = 0; k < n_; ++k) {
    if (img_[k] == i) return false;
    if (img_[k] == i + 1) return true;
  }
  return false;
}

std::vector<int> Perm::right_descents() const {
  std::vector<int> d;
  for (int i = 1; i < n_; ++i)
    if (has_right_descent(i)) d.push_back(i);
  return d;
}

std::vector<int> Perm::left_descents() const {
  std::vector<int> d;
  for (int i = 1; i < n_; ++i)
    if (has_left_descent(i)) d.push_back(i);
  return d;
}

std::vector<int> Perm::reduced_word() const {
  std::vector<int> word;
  Perm w = *this;
  while (true) {
    int i = 1;
    while (i < w.n_ && !w.has_right_descent(i)) ++i;
    if (i >= w.n_) break;
    std::swap(w.img_[i - 1], w.img_[i]);
    word.push_back(i);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::uint64_t Perm::key() const {
  std::uint64_t k = 0;
  for (int i = 0; i < n_; ++i) k |= static_cast<std::uint64_t>(img_[i] - 1) << (4 * i);
  return k;
}

std::strong_ordering Perm::operator<=>(const Perm& o) const {
  if (auto c = n_ <=> o.n_; c != 0) return c;
  for (int i = 0; i < n_; ++i)
    if (auto c = img_[i] <=> o.img_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

Perm compose(const Perm& x, const Perm& y) { return x.compose(y); }
Perm inverse(const Perm& x) { return x.inverse(); }
int length(const Perm& w) { return w.length(); }

bool bruhat_leq(const Perm& x, const Perm& y) {
  check_same_rank(x, y);
  const int n = x.rank();
  // x <= y iff for every prefix, the sorted prefix of x is entrywise <= the
  // sorted prefix of y.
  std::vector<int> a, b;
  for (int i = 1; i <= n; ++i) {
    a.insert(std::upper_bound(a.begin(), a.end(), x(i)), x(i));
    b.insert(std::upper_bound(b.begin(), b.end(), y(i)), y(i));
    for (int k = 0; k < i; ++k)
      if (a[k] > b[k]) return false;
  }
  return true;
}

Perm longest_element(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = n - i;
  return Perm::from_one_line(img);
}

bool LengthLexLess::operator()(const Perm& a, const Perm& b) const {
  const int la = a.length(), lb = b.length();
  if (la != lb) return la < lb;
  return a < b;
}

std::vector<Perm> all_elements(int n) {
  check_rank(n);
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(Perm::from_one_line(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

Parabolic::Parabolic(int n, std::vector<int> J) : n_(n), J_(std::move(J)) {
  check_rank(n);
  std::sort(J_.begin(), J_.end());
  J_.erase(std::unique(J_.begin(), J_.end()), J_.end());
  for (int i : J_)
    if (i < 1 || i >= n) throw std::invalid_argument("parabolic simple index out of range");
}

Parabolic Parabolic::full(int n) {
  std::vector<int> J(std::max(n - 1, 0));
  std::iota(J.begin(), J.end(), 1);
  return Parabolic(n, std::move(J));
}

std::vector<Parabolic> Parabolic::all(int n) {
  std::vector<Parabolic> out;
  const int m = std::max(n - 1, 0);
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> J;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) J.push_back(i + 1);
    out.emplace_back(n, std::move(J));
  }
  return out;
}

bool Parabolic::contains_simple(int i) const {
  return std::binary_search(J_.begin(), J_.end(), i);
}

std::vector<std::pair<int, int>> Parabolic::blocks() const {
  std::vector<std::pair<int, int>> out;
  int start = 1;
  for (int i = 1; i <= n_; ++i) {
    if (i == n_ || !contains_simple(i)) {
      out.emplace_back(start, i);
      start = i + 1;
    }
  }
  return out;
}

std::string Parabolic::to_string() const {
  std::string s = "{";
  for (std::size_t k = 0; k < J_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(J_[k]);
  }
  return s + "}";
}

Perm parabolic_longest(const Parabolic& J) {
  std::vector<int> img(J.rank());
  for (auto [a, b] : J.blocks())
    for (int i = a; i <= b; ++i) img[i - 1] = a + b - i;
  return Perm::from_one_line(img);
}

std::vector<Perm> parabolic_elements(const Parabolic& J) {
  const int n = J.rank();
  std::vector<Perm> out;
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  const auto blocks = J.blocks();
  // Odometer over the per-block permutations.
  std::function<void(std::size_t)> rec = [&](std::size_t b) {
    if (b == blocks.size()) {
      out.push_back(Perm::from_one_line(img));
      return;
    }
    auto [lo, hi] = blocks[b];
    std::sort(img.begin() + lo - 1, img.begin() + hi);
    do {
      rec(b + 1);
    } while (std::next_permutation(img.begin() + lo - 1, img.begin() + hi));
  };
  rec(0);
  std::sort(out.begin(), out.end(), LengthLexLess{});
  return out;
}

Perm coset_min_representative(const Parabolic& J, const Perm& w, CosetSide side) {
  Perm x = w;
  // Strip descents in J from the relevant side until none remain.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i : J.simples()) {
      if (side == CosetSide::kLeft ? x.has_left_descent(i) : x.has_right_descent(i)) {
        const Perm s = Perm::simple(i, J.rank());
        x = side == CosetSide::kLeft ? s.compose(x) : x.compose(s);
        changed = true;
      }
    }
  }
  return x;
}

Perm coset_max_representative(const Parabolic& J, const Perm& w, CosetSide side) {
  const Perm m = coset_min_representative(J, w, side);
  const Perm w0p = parabolic_longest(J);
  return side == CosetSide::kLeft ? w0p.compose(m) : m.compose(w0p);
}

std::vector<Perm> coset_min_representatives(const Parabolic& J, CosetSide side) {
  std::vector<Perm> out;
  for (const Perm& w : all_elements(J.rank())) {
    bool minimal = true;
    for (int i : J.simples())
      if (side == CosetSide::kLeft ? w.has_left_descent(i) : w.has_right_descent(i)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(w);
  }
  std::sort(out.begin(), out.end(), LengthLexLess{});
  return out;
}

WeylGroup::WeylGroup(int n) : J_(Parabolic::full(n)) { build(); }
WeylGroup::WeylGroup(Parabolic J) : J_(std::move(J)) { build(); }

void WeylGroup::build() {
  if (J_.rank() > 8) throw std::invalid_argument("group tables are limited to rank <= 8");
  elems_ = parabolic_elements(J_);
  const int N = size();
  index_.reserve(N * 2);
  for (int i = 0; i < N; ++i) index_.emplace(elems_[i].key(), i);
  len_.resize(N);
  inv_.resize(N);
  for (int i = 0; i < N; ++i) {
    len_[i] = elems_[i].length();
    inv_[i] = index(elems_[i].inverse());
  }
  const int m = num_simples();
  lmul_.assign(m, std::vector<int>(N));
  rmul_.assign(m, std::vector<int>(N));
  for (int k = 0; k < m; ++k) {
    const Perm s = Perm::simple(J_.simples()[k], rank());
    for (int i = 0; i < N; ++i) {
      lmul_[k][i] = index(s.compose(elems_[i]));
      rmul_[k][i] = index(elems_[i].compose(s));
    }
  }
}

int WeylGroup::index(const Perm& w) const {
  if (w.rank() != rank()) throw std::invalid_argument("rank mismatch in group lookup");
  auto it = index_.find(w.key());
  if (it == index_.end()) throw std::out_of_range(w.to_string() + " is not in the group");
  return it->second;
}

bool WeylGroup::contains(const Perm& w) const {
  return w.rank() == rank() && index_.count(w.key()) > 0;
}

int WeylGroup::slot_of(int i) const {
  const auto& J = J_.simples();
  auto it = std::lower_bound(J.begin(), J.end(), i);
  if (it == J.end() || *it != i) throw std::out_of_range("simple reflection not in the group");
  return static_cast<int>(it - J.begin());
}

int WeylGroup::mul(int x, int y) const { return index(elems_[x].compose(elems_[y])); }

std::vector<int> WeylGroup::reduced_slots(int x) const {
  std::vector<int> word;
  while (len_[x] > 0) {
    int k = 0;
    while (!right_descent(k, x)) ++k;
    word.push_back(k);
    x = rmul_[k][x];
  }
  std::reverse(word.begin(), word.end());
  return word;
}

bool WeylGroup::bruhat_leq(int x, int y) const { return hecke::bruhat_leq(elems_[x], elems_[y]); }

}  // namespace hecke
