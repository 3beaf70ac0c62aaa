#include "ahyp/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>

#include "ahyp/errors.hpp"

namespace ahyp {

namespace {

constexpr int kMaxRootRank = 8;
constexpr int kMaxWeylRank = 5;

std::string type_name(char letter, int rank) {
  return std::string(1, letter) + std::to_string(rank);
}

// Weyl group elements as integer matrices acting on simple-root coordinates,
// column j holding the image of alpha_j.
using WeylMatrix = std::vector<int>;

WeylMatrix reflection_matrix(const CartanMatrix& a, Node i) {
  const int n = a.rank();
  WeylMatrix m(static_cast<std::size_t>(n * n), 0);
  for (int j = 0; j < n; ++j) {
    m[j * n + j] = 1;
    m[(i - 1) * n + j] -= a(j + 1, i);
  }
  return m;
}

WeylMatrix multiply(const WeylMatrix& x, const WeylMatrix& y, int n) {
  WeylMatrix out(static_cast<std::size_t>(n * n), 0);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) {
      const int v = x[r * n + k];
      if (v == 0) continue;
      for (int c = 0; c < n; ++c) out[r * n + c] += v * y[k * n + c];
    }
  return out;
}

RootVector act(const WeylMatrix& w, const RootVector& v) {
  const int n = static_cast<int>(v.coords.size());
  RootVector out{std::vector<int>(v.coords.size(), 0)};
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out.coords[r] += w[r * n + c] * v.coords[c];
  return out;
}

std::vector<WeylMatrix> enumerate_weyl_group(const LieType& t) {
  if (t.rank() > kMaxWeylRank)
    throw UnsupportedRank("Weyl group enumeration supports rank <= " +
                          std::to_string(kMaxWeylRank) + ", got " + t.name());
  const CartanMatrix a = cartan_matrix(t);
  const int n = a.rank();
  std::vector<WeylMatrix> gens;
  for (Node i = 1; i <= n; ++i) gens.push_back(reflection_matrix(a, i));

  WeylMatrix id(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) id[i * n + i] = 1;

  std::set<WeylMatrix> seen{id};
  std::vector<WeylMatrix> elements{id};
  std::deque<WeylMatrix> queue{id};
  while (!queue.empty()) {
    WeylMatrix w = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : gens) {
      WeylMatrix ws = multiply(s, w, n);
      if (seen.insert(ws).second) {
        elements.push_back(ws);
        queue.push_back(std::move(ws));
      }
    }
  }
  return elements;
}

RootVector simple_root(int rank, Node i) {
  RootVector v{std::vector<int>(static_cast<std::size_t>(rank), 0)};
  v.coords[i - 1] = 1;
  return v;
}

}  // namespace

LieType::LieType(char letter, int rank)
    : letter_(static_cast<char>(std::toupper(static_cast<unsigned char>(letter)))),
      rank_(rank) {
  const std::string name = type_name(letter_, rank_);
  if (rank_ < 1) throw DomainError("rank must be positive: " + name);
  switch (letter_) {
    case 'A':
    case 'B':
    case 'C':
      break;
    case 'D':
      if (rank_ < 2) throw DomainError("D requires rank >= 2: " + name);
      break;
    case 'E':
      if (rank_ < 6 || rank_ > 8) throw DomainError("E requires rank 6, 7 or 8: " + name);
      break;
    case 'F':
      if (rank_ != 4) throw DomainError("F requires rank 4: " + name);
      break;
    case 'G':
      if (rank_ != 2) throw DomainError("G requires rank 2: " + name);
      break;
    default:
      throw DomainError("unknown type letter: " + name);
  }
}

std::string LieType::name() const { return type_name(letter_, rank_); }

bool LieType::canonical() const noexcept {
  switch (letter_) {
    case 'B':
      return rank_ >= 2;
    case 'C':
      return rank_ >= 3;
    case 'D':
      return rank_ >= 4;
    default:
      return true;
  }
}

LieType parse_lie_type(const std::string& name) {
  if (name.size() < 2 || !std::isalpha(static_cast<unsigned char>(name[0])))
    throw DomainError("malformed type name: " + name);
  int rank = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i])))
      throw DomainError("malformed type name: " + name);
    rank = rank * 10 + (name[i] - '0');
    if (rank > 1000) throw DomainError("rank too large: " + name);
  }
  return LieType(name[0], rank);
}

CartanMatrix::CartanMatrix(std::vector<std::vector<int>> entries) : entries_(std::move(entries)) {
  for (const auto& row : entries_)
    if (row.size() != entries_.size()) throw DomainError("Cartan matrix must be square");
}

CartanMatrix CartanMatrix::direct_sum(const CartanMatrix& other) const {
  const int n = rank(), m = other.rank();
  std::vector<std::vector<int>> e(static_cast<std::size_t>(n + m),
                                  std::vector<int>(static_cast<std::size_t>(n + m), 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) e[i][j] = entries_[i][j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) e[n + i][n + j] = other.entries_[i][j];
  return CartanMatrix(std::move(e));
}

int RootVector::height() const { return std::accumulate(coords.begin(), coords.end(), 0); }

bool RootVector::positive() const {
  bool nonzero = false;
  for (int c : coords) {
    if (c < 0) return false;
    nonzero = nonzero || c != 0;
  }
  return nonzero;
}

RootVector RootVector::operator-() const {
  RootVector out = *this;
  for (int& c : out.coords) c = -c;
  return out;
}

NodePermutation::NodePermutation(std::vector<Node> image) : image_(std::move(image)) {
  std::vector<Node> sorted = image_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<Node>(i + 1)) throw DomainError("not a permutation of 1..n");
}

NodePermutation NodePermutation::identity(int rank) {
  std::vector<Node> image(static_cast<std::size_t>(rank));
  std::iota(image.begin(), image.end(), 1);
  return NodePermutation(std::move(image));
}

bool NodePermutation::is_identity() const { return *this == identity(size()); }

bool NodePermutation::is_involution() const {
  for (Node i = 1; i <= size(); ++i)
    if ((*this)((*this)(i)) != i) return false;
  return true;
}

bool NodePermutation::preserves(const CartanMatrix& a) const {
  if (a.rank() != size()) return false;
  for (Node i = 1; i <= size(); ++i)
    for (Node j = 1; j <= size(); ++j)
      if (a((*this)(i), (*this)(j)) != a(i, j)) return false;
  return true;
}

NodePermutation NodePermutation::direct_sum(const NodePermutation& other) const {
  std::vector<Node> image = image_;
  for (Node v : other.image_) image.push_back(v + size());
  return NodePermutation(std::move(image));
}

CartanMatrix cartan_matrix(const LieType& t) {
  const int n = t.rank();
  std::vector<std::vector<int>> a(static_cast<std::size_t>(n),
                                  std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto bond = [&a](Node i, Node j) { a[i - 1][j - 1] = a[j - 1][i - 1] = -1; };

  switch (t.letter()) {
    case 'A':
      for (Node i = 1; i < n; ++i) bond(i, i + 1);
      break;
    case 'B':
      for (Node i = 1; i < n; ++i) bond(i, i + 1);
      if (n >= 2) a[n - 2][n - 1] = -2;
      break;
    case 'C':
      for (Node i = 1; i < n; ++i) bond(i, i + 1);
      if (n >= 2) a[n - 1][n - 2] = -2;
      break;
    case 'D':
      for (Node i = 1; i + 1 <= n - 2; ++i) bond(i, i + 1);
      if (n >= 3) {
        bond(n - 2, n - 1);
        bond(n - 2, n);
      }
      break;
    case 'E':
      for (Node i = 1; i + 1 <= n - 1; ++i) bond(i, i + 1);
      bond(3, n);
      break;
    case 'F':
      bond(1, 2);
      bond(2, 3);
      bond(3, 4);
      a[1][2] = -2;
      break;
    case 'G':
      a[0][1] = -1;
      a[1][0] = -3;
      break;
  }
  return CartanMatrix(std::move(a));
}

RootVector reflect(const CartanMatrix& a, Node i, const RootVector& root) {
  int pairing = 0;
  for (Node j = 1; j <= a.rank(); ++j) pairing += root.coords[j - 1] * a(j, i);
  RootVector out = root;
  out.coords[i - 1] -= pairing;
  return out;
}

std::vector<RootVector> positive_roots(const LieType& t) {
  if (t.rank() > kMaxRootRank)
    throw UnsupportedRank("root enumeration supports rank <= " + std::to_string(kMaxRootRank) +
                          ", got " + t.name());
  const CartanMatrix a = cartan_matrix(t);
  const int n = a.rank();
  std::set<RootVector> roots;
  std::deque<RootVector> queue;
  for (Node i = 1; i <= n; ++i) {
    roots.insert(simple_root(n, i));
    queue.push_back(simple_root(n, i));
  }
  while (!queue.empty()) {
    RootVector r = std::move(queue.front());
    queue.pop_front();
    for (Node i = 1; i <= n; ++i) {
      RootVector s = reflect(a, i, r);
      if (roots.insert(s).second) queue.push_back(std::move(s));
    }
  }
  std::vector<RootVector> out;
  for (const auto& r : roots)
    if (r.positive()) out.push_back(r);
  std::sort(out.begin(), out.end(), [](const RootVector& x, const RootVector& y) {
    const int hx = x.height(), hy = y.height();
    return hx != hy ? hx < hy : x < y;
  });
  return out;
}

NodePermutation longest_element_negation(const LieType& t) {
  const auto group = enumerate_weyl_group(t);
  const auto positives = positive_roots(t);
  const int n = t.rank();
  for (const auto& w : group) {
    const bool longest = std::all_of(positives.begin(), positives.end(), [&](const RootVector& r) {
      return (-act(w, r)).positive();
    });
    if (!longest) continue;
    std::vector<Node> image(static_cast<std::size_t>(n));
    for (Node i = 1; i <= n; ++i) {
      const RootVector target = -act(w, simple_root(n, i));
      const auto it = std::find(target.coords.begin(), target.coords.end(), 1);
      image[i - 1] = static_cast<Node>(it - target.coords.begin()) + 1;
    }
    return NodePermutation(std::move(image));
  }
  throw std::logic_error("no longest element found for " + t.name());
}

NodePermutation iota(const LieType& t) {
  const int n = t.rank();
  std::vector<Node> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  switch (t.letter()) {
    case 'A':
      for (Node i = 1; i <= n; ++i) image[i - 1] = n + 1 - i;
      break;
    case 'D':
      if (n % 2 == 1) std::swap(image[n - 2], image[n - 1]);
      break;
    case 'E':
      if (n == 6) {
        image = {5, 4, 3, 2, 1, 6};
      }
      break;
    default:
      break;
  }
  return NodePermutation(std::move(image));
}

std::size_t weyl_group_order(const LieType& t) { return enumerate_weyl_group(t).size(); }

}  // namespace ahyp
