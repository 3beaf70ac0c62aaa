#pragma once

// Root systems of the simple complex Lie algebras.
//
// Simple roots are labelled 1..rank. Classical types, F4 and G2 follow
// Bourbaki; the E series uses chain-then-branch labels so that E6 reads
// a,b,c,d,e,f = 1..6 (the branch node comes last).
//
//   A_n   1 - 2 - ... - n
//
//   B_n   1 - 2 - ... - (n-1) => n          (n short)
//
//   C_n   1 - 2 - ... - (n-1) <= n          (n long)
//
//                            (n-1)
//                           /
//   D_n   1 - 2 - ... - (n-2)                (D2: two isolated nodes,
//                           \                 D3: 2 and 3 hang off 1)
//                            n
//
//   E_n   1 - 2 - 3 - 4 - ... - (n-1)        (n = 6, 7, 8)
//               |
//               n
//
//   F4    1 - 2 => 3 - 4                     (3, 4 short)
//
//   G2    1 <= 2                             (1 short)
//
// Cartan matrices use a_ij = <alpha_i, alpha_j^vee>, so the simple
// reflection s_i sends beta to beta - (sum_j c_j a_ji) alpha_i.

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace ahyp {

using Node = int;  // 1-based simple-root label

class LieType {
 public:
  /// Throws DomainError when (letter, rank) is not a simple type.
  LieType(char letter, int rank);

  char letter() const noexcept { return letter_; }
  int rank() const noexcept { return rank_; }
  std::string name() const;  // "E6"

  /// False for the low-rank aliases B1, C1, C2, D2, D3, which duplicate
  /// A1, A1, B2, A1+A1 and A3.
  bool canonical() const noexcept;

  auto operator<=>(const LieType&) const = default;

 private:
  char letter_;
  int rank_;
};

/// Parses "A5", "e6", "D3". Throws DomainError.
LieType parse_lie_type(const std::string& name);

class CartanMatrix {
 public:
  explicit CartanMatrix(std::vector<std::vector<int>> entries);

  int rank() const noexcept { return static_cast<int>(entries_.size()); }
  int operator()(Node i, Node j) const { return entries_[i - 1][j - 1]; }
  const std::vector<std::vector<int>>& entries() const noexcept { return entries_; }

  /// Block-diagonal sum, nodes of `other` renumbered after this one.
  CartanMatrix direct_sum(const CartanMatrix& other) const;

  bool operator==(const CartanMatrix&) const = default;

 private:
  std::vector<std::vector<int>> entries_;
};

struct RootVector {
  std::vector<int> coords;  // coefficients in the simple-root basis

  int height() const;
  bool positive() const;  // all >= 0 and not zero
  RootVector operator-() const;

  auto operator<=>(const RootVector&) const = default;
};

class NodePermutation {
 public:
  explicit NodePermutation(std::vector<Node> image);
  static NodePermutation identity(int rank);

  int size() const noexcept { return static_cast<int>(image_.size()); }
  Node operator()(Node i) const { return image_[i - 1]; }
  const std::vector<Node>& image() const noexcept { return image_; }

  bool is_identity() const;
  bool is_involution() const;
  bool preserves(const CartanMatrix& a) const;

  /// Block sum with `other` acting on nodes size()+1 .. size()+other.size().
  NodePermutation direct_sum(const NodePermutation& other) const;

  bool operator==(const NodePermutation&) const = default;

 private:
  std::vector<Node> image_;
};

CartanMatrix cartan_matrix(const LieType& t);

/// Image of `root` under the simple reflection s_i.
RootVector reflect(const CartanMatrix& a, Node i, const RootVector& root);

/// All positive roots by closure of the simple roots under simple
/// reflections, sorted by height then coordinates. Rank <= 8.
std::vector<RootVector> positive_roots(const LieType& t);

/// The diagram permutation X -> -(w0 X), found by enumerating the Weyl
/// group and locating the element sending the positive roots to negative
/// ones. Rank <= 5.
NodePermutation longest_element_negation(const LieType& t);

/// Closed form of -w0: reversal on A_n, fork swap on D_n with n odd, the
/// a<->e, b<->d reflection on E6, identity elsewhere.
NodePermutation iota(const LieType& t);

/// Size of the Weyl group enumerated by `longest_element_negation`.
std::size_t weyl_group_order(const LieType& t);

}  // namespace ahyp
