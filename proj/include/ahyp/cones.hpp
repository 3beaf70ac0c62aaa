#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <boost/rational.hpp>
#include <json.hpp>

#include "ahyp/satake.hpp"

namespace ahyp {

using Rational = boost::rational<std::int64_t>;

class UnionFind {
 public:
  explicit UnionFind(int size);

  int find(int x);
  bool unite(int x, int y);  // false when already joined
  int size() const noexcept { return static_cast<int>(parent_.size()); }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
};

/// Partition of the diagram nodes. Classes are sorted, and ordered by their
/// smallest node; `forced_zero` holds indices into `classes`.
struct NodePartition {
  std::vector<std::vector<Node>> classes;
  std::set<std::size_t> forced_zero;

  std::vector<std::vector<Node>> free_classes() const;
  int free_count() const { return static_cast<int>(classes.size() - forced_zero.size()); }

  bool operator==(const NodePartition&) const = default;
};

/// Arrow orbits; a class is forced to zero iff it contains a black node.
NodePartition matching_classes(const SatakeDiagram& d);

/// Classes generated by the arrows together with iota on every component.
NodePartition antipodal_classes(const SatakeDiagram& d);

int a_hyperbolic_rank(const SatakeDiagram& d);

class WeightedDynkinDiagram {
 public:
  /// Throws DomainError on a negative weight.
  explicit WeightedDynkinDiagram(std::vector<Rational> weights);
  static WeightedDynkinDiagram indicator(int rank, const std::vector<Node>& support);

  int size() const noexcept { return static_cast<int>(weights_.size()); }
  const Rational& operator[](Node i) const { return weights_[i - 1]; }
  const std::vector<Rational>& weights() const noexcept { return weights_; }

  /// Zero on black nodes and equal across every arrow.
  bool matches(const SatakeDiagram& d) const;
  bool invariant_under(const NodePermutation& p) const;

  std::string str() const;  // "(1,0,0,0,1,0)", non-integers as p/q
  nlohmann::json to_json() const;

  bool operator==(const WeightedDynkinDiagram&) const = default;

 private:
  std::vector<Rational> weights_;
};

/// Extreme rays of the iota-fixed part of the matching cone, one 0/1
/// indicator per free antipodal class.
std::vector<WeightedDynkinDiagram> b_plus_generators(const SatakeDiagram& d);

struct ReductiveAlgebra {
  std::vector<RealFormSpec> simple_factors;
  int compact_center_dim = 0;
  int split_center_dim = 0;

  /// Throws DomainError on a bad factor or negative center dimension.
  void validate() const;
  /// Sorts the factors into the canonical order used by `render`.
  void canonicalize();
  bool is_zero() const;

  ReductiveAlgebra operator+(const ReductiveAlgebra& other) const;
  bool operator==(const ReductiveAlgebra&) const = default;
};

struct RankProfile {
  int real_rank = 0;
  int a_hyperbolic_rank = 0;

  RankProfile operator+(const RankProfile& other) const {
    return {real_rank + other.real_rank, a_hyperbolic_rank + other.a_hyperbolic_rank};
  }
  bool operator==(const RankProfile&) const = default;
};

RankProfile rank_profile(const SatakeDiagram& d);
RankProfile rank_profile(const RealFormSpec& spec);
RankProfile rank_profile(const ReductiveAlgebra& alg);

nlohmann::json to_json(const NodePartition& p);
nlohmann::json to_json(const RankProfile& p);

}  // namespace ahyp
