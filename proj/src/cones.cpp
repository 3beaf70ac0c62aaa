#include "ahyp/cones.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ahyp/errors.hpp"

namespace ahyp {

UnionFind::UnionFind(int size)
    : parent_(static_cast<std::size_t>(size)), rank_(static_cast<std::size_t>(size), 0) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int UnionFind::find(int x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool UnionFind::unite(int x, int y) {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  if (rank_[x] < rank_[y]) std::swap(x, y);
  parent_[y] = x;
  if (rank_[x] == rank_[y]) ++rank_[x];
  return true;
}

std::vector<std::vector<Node>> NodePartition::free_classes() const {
  std::vector<std::vector<Node>> out;
  for (std::size_t c = 0; c < classes.size(); ++c)
    if (!forced_zero.count(c)) out.push_back(classes[c]);
  return out;
}

namespace {

NodePartition collect(const SatakeDiagram& d, UnionFind& uf) {
  std::map<int, std::vector<Node>> by_root;
  for (Node i = 1; i <= d.rank(); ++i) by_root[uf.find(i - 1)].push_back(i);

  NodePartition p;
  for (auto& [root, nodes] : by_root) p.classes.push_back(std::move(nodes));
  std::sort(p.classes.begin(), p.classes.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  for (std::size_t c = 0; c < p.classes.size(); ++c)
    for (Node i : p.classes[c])
      if (d.black.count(i)) p.forced_zero.insert(c);
  return p;
}

void join_arrows(const SatakeDiagram& d, UnionFind& uf) {
  for (auto [i, j] : d.arrows) uf.unite(i - 1, j - 1);
}

}  // namespace

NodePartition matching_classes(const SatakeDiagram& d) {
  UnionFind uf(d.rank());
  join_arrows(d, uf);
  return collect(d, uf);
}

NodePartition antipodal_classes(const SatakeDiagram& d) {
  UnionFind uf(d.rank());
  join_arrows(d, uf);
  const NodePermutation iota = d.iota();
  for (Node i = 1; i <= d.rank(); ++i) uf.unite(i - 1, iota(i) - 1);
  return collect(d, uf);
}

int a_hyperbolic_rank(const SatakeDiagram& d) { return antipodal_classes(d).free_count(); }

WeightedDynkinDiagram::WeightedDynkinDiagram(std::vector<Rational> weights)
    : weights_(std::move(weights)) {
  for (const auto& w : weights_)
    if (w < Rational(0)) throw DomainError("weights must be nonnegative");
}

WeightedDynkinDiagram WeightedDynkinDiagram::indicator(int rank, const std::vector<Node>& support) {
  std::vector<Rational> w(static_cast<std::size_t>(rank), Rational(0));
  for (Node i : support) w[i - 1] = 1;
  return WeightedDynkinDiagram(std::move(w));
}

bool WeightedDynkinDiagram::matches(const SatakeDiagram& d) const {
  if (size() != d.rank()) return false;
  for (Node b : d.black)
    if ((*this)[b] != Rational(0)) return false;
  for (auto [i, j] : d.arrows)
    if ((*this)[i] != (*this)[j]) return false;
  return true;
}

bool WeightedDynkinDiagram::invariant_under(const NodePermutation& p) const {
  if (p.size() != size()) return false;
  for (Node i = 1; i <= size(); ++i)
    if ((*this)[p(i)] != (*this)[i]) return false;
  return true;
}

namespace {

std::string rational_str(const Rational& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

}  // namespace

std::string WeightedDynkinDiagram::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i) out += ",";
    out += rational_str(weights_[i]);
  }
  return out + ")";
}

nlohmann::json WeightedDynkinDiagram::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& w : weights_) {
    if (w.denominator() == 1)
      out.push_back(w.numerator());
    else
      out.push_back(rational_str(w));
  }
  return out;
}

std::vector<WeightedDynkinDiagram> b_plus_generators(const SatakeDiagram& d) {
  std::vector<WeightedDynkinDiagram> out;
  for (const auto& cls : antipodal_classes(d).free_classes())
    out.push_back(WeightedDynkinDiagram::indicator(d.rank(), cls));
  return out;
}

void ReductiveAlgebra::validate() const {
  if (compact_center_dim < 0 || split_center_dim < 0)
    throw DomainError("center dimensions must be nonnegative");
  for (const auto& f : simple_factors) f.validate();
}

void ReductiveAlgebra::canonicalize() { std::sort(simple_factors.begin(), simple_factors.end()); }

bool ReductiveAlgebra::is_zero() const {
  return simple_factors.empty() && compact_center_dim == 0 && split_center_dim == 0;
}

ReductiveAlgebra ReductiveAlgebra::operator+(const ReductiveAlgebra& other) const {
  ReductiveAlgebra out = *this;
  out.simple_factors.insert(out.simple_factors.end(), other.simple_factors.begin(),
                            other.simple_factors.end());
  out.compact_center_dim += other.compact_center_dim;
  out.split_center_dim += other.split_center_dim;
  return out;
}

RankProfile rank_profile(const SatakeDiagram& d) { return {real_rank(d), a_hyperbolic_rank(d)}; }

RankProfile rank_profile(const RealFormSpec& spec) { return rank_profile(satake_of(spec)); }

RankProfile rank_profile(const ReductiveAlgebra& alg) {
  alg.validate();
  RankProfile out{alg.split_center_dim, 0};
  for (const auto& f : alg.simple_factors) out = out + rank_profile(f);
  return out;
}

nlohmann::json to_json(const NodePartition& p) {
  nlohmann::json classes = nlohmann::json::array();
  for (std::size_t c = 0; c < p.classes.size(); ++c)
    classes.push_back({{"nodes", p.classes[c]}, {"forced_zero", p.forced_zero.count(c) > 0}});
  return {{"classes", classes}, {"free", p.free_count()}};
}

nlohmann::json to_json(const RankProfile& p) {
  return {{"real_rank", p.real_rank}, {"a_hyperbolic_rank", p.a_hyperbolic_rank}};
}

}  // namespace ahyp
