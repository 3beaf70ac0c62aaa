#pragma once

// Reference datasets (rank table, 3-symmetric spaces, worked examples) and
// the harnesses that check the library against them.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ahyp/decision.hpp"
#include "ahyp/notation.hpp"
#include "ahyp/params.hpp"

namespace ahyp {

struct ParameterSpace {
  std::vector<std::string> names;
  std::vector<std::string> constraints;
  std::vector<std::vector<long>> tuples;  // explicit values; empty = enumerate 0..bound

  std::vector<Bindings> instances(long bound) const {
    return enumerate(names, constraints, tuples, bound);
  }
};

/// A simple algebra whose two ranks are given by formulas in the parameters.
struct RankRow {
  std::string source;
  std::string algebra;  // template
  ParameterSpace params;
  std::string a_hyperbolic_rank;
  std::string real_rank;
};

/// A family of pairs G/H with the verdict the source asserts.
struct FamilyRow {
  std::string source;
  std::string g;  // template
  std::string h;  // template
  ParameterSpace params;
  Verdict expected;
  std::string note;  // how an ambiguous source entry was read
};

const std::vector<RankRow>& table1_rows();
const std::vector<FamilyRow>& table2_rows();
/// The pair excluded from the 3-symmetric table, parameter k >= 2.
const FamilyRow& table2_open_case();
const std::vector<FamilyRow>& no_compact_quotient_families();  // expected NoNonVirtuallyAbelian
const std::vector<FamilyRow>& admitting_families();            // expected AdmitsNonVirtuallyAbelian
/// Fixed pairs with a stated verdict, including the SL(10,R) cases.
const std::vector<FamilyRow>& undetermined_examples();

struct ObstructionCase {
  std::string source;
  std::string g;
  std::string h;
};
const std::vector<ObstructionCase>& obstruction_cases();

struct Instance {
  std::string g;
  std::string h;
  Bindings params;
};
Instance instantiate(const FamilyRow& row, const Bindings& env);

/// Lexicographically first tuple (0..bound) whose G and H parse without
/// low-rank rewriting and whose H has positive real rank.
std::optional<Bindings> smallest_instance(const FamilyRow& row, long bound);

struct Check {
  std::string row;
  Bindings params;
  std::string subject;  // instantiated algebra or pair
  std::string expected;
  std::string got;
  std::string condition;  // for decisions, the condition that fired
  bool ok = true;
};

struct VerificationReport {
  std::string name;
  int rows_checked = 0;
  int instances_checked = 0;
  std::vector<Check> checks;
  std::vector<Check> failures;
  std::vector<std::string> skipped;

  bool passed() const { return failures.empty(); }
  void record(Check c);
  nlohmann::json to_json() const;
  std::string text() const;
};

VerificationReport verify_table1(long k_max);
VerificationReport verify_table2(long param_bound);

/// Real forms of simple types up to `rank_bound` whose two ranks differ.
std::vector<RealFormSpec> anomaly_scan(int rank_bound);
/// The same set read off the rank table: rows instantiated within the rank
/// range, minus instances whose tabulated ranks coincide.
std::vector<RealFormSpec> table1_prediction(int rank_bound);

/// The factor of `alg` when it is a single simple noncompact algebra
/// without center.
std::optional<RealFormSpec> as_simple_noncompact(const ReductiveAlgebra& alg);

}  // namespace ahyp
