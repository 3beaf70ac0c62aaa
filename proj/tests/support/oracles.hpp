#pragma once

// Independent reference computations used only by the tests.

#include <vector>

#include "ahyp/satake.hpp"

namespace oracle {

/// Positive roots built by root strings: beta + alpha_i is a root iff
/// q > 0, where p is read off the known lower roots and q = p - <beta, alpha_i^vee>.
std::vector<ahyp::RootVector> positive_roots_by_strings(const ahyp::LieType& t);

/// Dimension of {w in Q^n : w_b = 0 on black nodes, w_i = w_j across arrows}
/// and, with `with_iota`, w_i = w_{iota(i)}; by Gaussian elimination over Q.
int constrained_dimension(const ahyp::SatakeDiagram& d, bool with_iota);

/// Real rank from an explicit matrix realization: dimension of the
/// centralizer in p of a random integer element of p.
/// Every real form of every canonical simple type of rank <= bound, and
/// the complex algebras of those types viewed as real.
std::vector<ahyp::RealFormSpec> database(int rank_bound);

enum class Model { SlR, SoPQ, SuPQ, SuStar, SpR, SpPQ };
int matrix_model_real_rank(Model m, int a, int b = 0);

}  // namespace oracle
