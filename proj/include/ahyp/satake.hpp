#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ahyp/rootsys.hpp"

namespace ahyp {

enum class Family {
  SlR,      // sl(n,R)
  SuStar,   // su*(2n) = sl(n,H)
  SuPQ,     // su(p,q)
  SoPQ,     // so(p,q), type B or D by parity of p+q
  SpR,      // sp(n,R)
  SpPQ,     // sp(p,q)
  SoStar,   // so*(2n)
  E6I,
  E6II,
  E6III,
  E6IV,
  E7V,
  E7VI,
  E7VII,
  E8VIII,
  E8IX,
  F4I,
  F4II,
  G2Split,
  Compact,  // compact real form of `base`
  Complex,  // complex simple algebra of type `base`, viewed as real
};

/// Short symbolic label, e.g. "su_pq" or "e6_IV".
std::string family_label(Family f);

/// A real form of a simple complex Lie algebra, or a complex simple algebra
/// regarded as real. `params` holds n, 2n or (p, q) depending on the family;
/// `base` is set only for Compact and Complex.
struct RealFormSpec {
  Family family;
  std::vector<int> params;
  std::optional<LieType> base;

  static RealFormSpec sl_R(int n);
  static RealFormSpec su_star(int two_n);
  static RealFormSpec su_pq(int p, int q);
  static RealFormSpec so_pq(int p, int q);
  static RealFormSpec sp_R(int n);
  static RealFormSpec sp_pq(int p, int q);
  static RealFormSpec so_star(int two_n);
  static RealFormSpec exceptional(Family f);
  static RealFormSpec compact(LieType t);
  static RealFormSpec complex(LieType t);

  /// Throws DomainError naming the violated constraint.
  void validate() const;

  /// Type of the complexification (of one copy for Complex).
  LieType lie_type() const;

  std::string label() const;  // "su_pq(2,1)"

  auto operator<=>(const RealFormSpec&) const = default;
};

/// Satake diagram on one Dynkin diagram, or on two equal copies for a
/// complex algebra viewed as real. Nodes are numbered 1..rank(); copy two
/// follows copy one.
struct SatakeDiagram {
  std::vector<LieType> components;
  std::set<Node> black;
  std::vector<std::pair<Node, Node>> arrows;  // each pair (i, j) with i < j, sorted

  int rank() const;
  CartanMatrix cartan() const;
  /// -w0 on every component.
  NodePermutation iota() const;
  /// The arrow involution, extended by the identity.
  NodePermutation arrow_map() const;
  /// "E6" or "A2+A2".
  std::string type_name() const;

  bool operator==(const SatakeDiagram&) const = default;
};

SatakeDiagram satake_of(const RealFormSpec& spec);

/// Two copies of t, all white, node i of copy one joined to node i of copy two.
SatakeDiagram complex_as_real(const LieType& t);

/// Every violated invariant; empty when the diagram is well formed.
std::vector<std::string> validate(const SatakeDiagram& d);

/// Number of arrow-orbits of white nodes.
int real_rank(const SatakeDiagram& d);

/// Every real form of a simple complex type (up to the duplicates listed
/// in the family constructors), compact form last.
std::vector<RealFormSpec> real_forms_of(const LieType& t);

/// Canonical simple types of rank <= bound: A1.., B2.., C3.., D4.., E, F4, G2.
std::vector<LieType> canonical_types(int rank_bound);

/// {type, rank, black, arrows, numbering}; indices sorted.
nlohmann::json to_json(const SatakeDiagram& d);

/// ASCII picture: 'o' white, '*' black, arrows listed underneath.
std::string draw(const SatakeDiagram& d);

}  // namespace ahyp
