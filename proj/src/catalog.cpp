#include "ahyp/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "ahyp/errors.hpp"

namespace ahyp {

namespace {

constexpr auto Admits = Verdict::AdmitsNonVirtuallyAbelian;

// One entry per H listed against a G in the 3-symmetric table.
FamilyRow pair(std::string source, std::string g, std::string h, ParameterSpace params = {},
               std::string note = "") {
  return {std::move(source), std::move(g), std::move(h), std::move(params), Admits, std::move(note)};
}

std::string profile_str(const RankProfile& p) {
  return "(" + std::to_string(p.real_rank) + "," + std::to_string(p.a_hyperbolic_rank) + ")";
}

}  // namespace

const std::vector<RankRow>& table1_rows() {
  static const std::vector<RankRow> rows = {
      {"rank table, row 1", "sl(2k,R)", {{"k"}, {"k>=1"}, {}}, "k", "2k-1"},
      {"rank table, row 2", "sl(2k+1,R)", {{"k"}, {"k>=1"}, {}}, "k", "2k"},
      {"rank table, row 3", "su*(4k)", {{"k"}, {"k>=1"}, {}}, "k", "2k-1"},
      {"rank table, row 4", "su*(4k+2)", {{"k"}, {"k>=1"}, {}}, "k", "2k"},
      {"rank table, row 5", "so(2k+1,2k+1)", {{"k"}, {"k>=2"}, {}}, "2k", "2k+1"},
      {"rank table, row 6", "e6(I)", {}, "4", "6"},
      {"rank table, row 7", "e6(IV)", {}, "1", "2"},
  };
  return rows;
}

const std::vector<FamilyRow>& table2_rows() {
  static const std::vector<FamilyRow> rows = {
      pair("3-symmetric table, row 1", "SL(2n,R)/Z2", "{SL(n,C) x T^1}/Z_n", {{"n"}, {"n>=1"}, {}}),
      pair("3-symmetric table, row 2", "SO(2n+1-2s-2t,2s+2t)", "U(a-s,s) x SO(2n-2a+1-2t,2t)",
           {{"n", "a", "s", "t"}, {"1<=a<=n", "2<=2s<=a", "0<=2t<=n-a"}, {}},
           "no range for t in the source; read as 0<=2t<=n-a like row 4"),
      pair("3-symmetric table, row 3", "Sp(n,R)/Z2", "{U(a-s,s) x Sp(n-a,R)}/Z2",
           {{"n", "a", "s"}, {"1<=a<=n", "2<=2s<=a"}, {}}),
      pair("3-symmetric table, row 4", "SO(2n-2s-2t,2s+2t)/Z2", "{U(a-s,s) x SO(2n-2a-2t,2t)}/Z2",
           {{"n", "a", "s", "t"}, {"1<=a<=n", "0<=2s<=a", "0<=2t<=n-a", "s+t>=1"}, {}},
           "'/' before Z2 missing in the source; (s,t)!=(0,0) encoded as s+t>=1"),
      pair("3-symmetric table, row 5", "SO*(2n)/Z2", "{U(a-s,s) x SO*(2n-2a)}/Z2",
           {{"n", "a", "s"}, {"1<=a<=n", "0<=2s<=a"}, {}}, "'/' before Z2 missing in the source"),
      pair("3-symmetric table, row 6.1", "G2(split)", "U(1,1)", {}, "G is the noncompact G2"),
      pair("3-symmetric table, row 6.2", "G2(split)", "SU(2,1)", {}, "G is the noncompact G2"),
      pair("3-symmetric table, row 7.1", "F4^I", "{Spin(7-r,r) x T^1}/Z2", {{"r"}, {}, {{2}, {3}}}),
      pair("3-symmetric table, row 7.2", "F4^I", "{Sp(3,R) x T^1}/Z2"),
      pair("3-symmetric table, row 7.3", "F4^I", "{Sp(2,1) x T^1}/Z2"),
      pair("3-symmetric table, row 7.4", "F4^I", "{SU(3) x SU(2,1)}/Z3"),
      pair("3-symmetric table, row 7.5", "F4^I", "{SU(2,1) x SU(2,1)}/Z3"),
      pair("3-symmetric table, row 8.1", "E6^I", "{SL(3,C) x SU(2,1)}/Z3"),
      pair("3-symmetric table, row 9.1", "E6^II", "{SO*(10) x SO(2)}/Z2"),
      pair("3-symmetric table, row 9.2", "E6^II", "{S(U(5-p,p) x U(1)) x SU(2-s,s)}/Z2",
           {{"s", "p"}, {}, {{0, 1}, {0, 2}, {1, 2}}}),
      pair("3-symmetric table, row 9.3", "E6^II", "{[SU(6-p,p)/Z3] x T^1}/Z2", {{"p"}, {}, {{0}, {2}, {3}}}),
      pair("3-symmetric table, row 9.4", "E6^II", "{[SO*(8) x SO(2)] x SO(2)}/Z2"),
      pair("3-symmetric table, row 9.5", "E6^II", "{[SO(6,2) x SO(2)] x SO(2)}/Z2"),
      pair("3-symmetric table, row 9.6", "E6^II", "{SU(2,1) x SU(3) x SU(3)}/{Z2 x Z3}"),
      pair("3-symmetric table, row 9.7", "E6^II", "{SU(2,1) x SU(2,1) x SU(2,1)}/{Z2 x Z3}"),
      pair("3-symmetric table, row 10.1", "E6^III", "{S(U(5-p,p) x U(1)) x SU(2-s,s)}/Z2",
           {{"s", "p"}, {}, {{1, 0}, {0, 1}, {1, 1}}}),
      pair("3-symmetric table, row 10.2", "E6^III", "{[SU(5,1)/Z3] x T^1}/Z2"),
      pair("3-symmetric table, row 11.1", "E7^V", "{E6^II x T^1}/Z2"),
      pair("3-symmetric table, row 11.2", "E7^V", "{SU(2) x [SO*(10) x SO(2)]}/Z2"),
      pair("3-symmetric table, row 11.3", "E7^V", "{SU(1,1) x [SO(6,4) x SO(2)]}/Z2"),
      pair("3-symmetric table, row 11.4", "E7^V", "{SO(2) x SO*(12)}/Z2"),
      pair("3-symmetric table, row 11.5", "E7^V", "{SO(2) x SO(6,6)}/Z2"),
      pair("3-symmetric table, row 11.6", "E7^V", "S(U(4,3) x U(1))/Z4"),
      pair("3-symmetric table, row 11.7", "E7^V", "{SU(3) x [SU(5,1)/Z2]}/Z3", {},
           "closing brace missing in the source; read as su(3) + su(5,1)"),
      pair("3-symmetric table, row 11.8", "E7^V", "{SU(2,1) x [SU(3,3)/Z2]}/Z3", {},
           "closing brace missing in the source"),
      pair("3-symmetric table, row 12.1", "E7^VI", "{E6^III x T^1}/Z2"),
      pair("3-symmetric table, row 12.2", "E7^VI", "{SU(2-p,p) x [SO(10-s,s) x SO(2)]}/Z2",
           {{"p", "s"}, {}, {{0, 2}, {1, 2}}}),
      pair("3-symmetric table, row 12.3", "E7^VI", "{SU(1,1) x [SO*(10) x SO(2)]}/Z2"),
      pair("3-symmetric table, row 12.4", "E7^VI", "S(U(7-s,s) x U(1))/Z4", {{"s"}, {}, {{1}, {2}, {3}}}),
      pair("3-symmetric table, row 12.5", "E7^VI", "{SU(2,1) x [SU(6)/Z2]}/Z3", {},
           "closing brace missing in the source"),
      pair("3-symmetric table, row 12.6", "E7^VI", "{SU(3) x [SU(4,2)/Z2]}/Z3", {},
           "closing brace missing in the source"),
      pair("3-symmetric table, row 12.7", "E7^VI", "{SU(2,1) x [SU(4,2)/Z2]}/Z3", {},
           "closing brace missing in the source"),
      pair("3-symmetric table, row 13.1", "E7^VII", "{E6^III x T^1}/Z2"),
      pair("3-symmetric table, row 13.2", "E7^VII", "{SU(1,1) x [SO(10) x SO(2)]}/Z2"),
      pair("3-symmetric table, row 13.3", "E7^VII", "{SU(2) x [SO*(10) x SO(2)]}/Z2"),
      pair("3-symmetric table, row 13.4", "E7^VII", "{SO(2) x SO(10,2)}/Z2"),
      pair("3-symmetric table, row 13.5", "E7^VII", "S(U(7-s,s) x U(1))/Z4", {{"s"}, {}, {{1}, {2}}}),
      pair("3-symmetric table, row 13.6", "E7^VII", "{SU(2,1) x [SU(5,1)/Z2]}/Z3", {},
           "closing brace missing in the source"),
      pair("3-symmetric table, row 14.1", "E8^VIII", "SO(8,6) x SO(2)"),
      pair("3-symmetric table, row 14.2", "E8^VIII", "SO*(14) x SO(2)"),
      pair("3-symmetric table, row 14.3", "E8^VIII", "{E7^VI x T^1}/Z2"),
      pair("3-symmetric table, row 14.4", "E8^VIII", "{E7^V x T^1}/Z2"),
      pair("3-symmetric table, row 14.5", "E8^VIII", "{SU(3) x E6^III}/Z3"),
      pair("3-symmetric table, row 14.6", "E8^VIII", "{SU(2,1) x E6^II}/Z3"),
      pair("3-symmetric table, row 14.7", "E8^VIII", "{SU(8,1)}/Z3"),
      pair("3-symmetric table, row 14.8", "E8^VIII", "{SU(5,4)}/Z3"),
      pair("3-symmetric table, row 15.1", "E8^IX", "SO(12,2) x SO(2)"),
      pair("3-symmetric table, row 15.2", "E8^IX", "SO*(14) x SO(2)"),
      pair("3-symmetric table, row 15.3", "E8^IX", "{E7^VII x T^1}/Z2"),
      pair("3-symmetric table, row 15.4", "E8^IX", "{SU(2,1) x E6}/Z3", {}, "E6 here is the compact form"),
      pair("3-symmetric table, row 15.5", "E8^IX", "{SU(2,1) x E6^III}/Z3"),
      pair("3-symmetric table, row 15.6", "E8^IX", "{SU(3) x E6^II}/Z3"),
      pair("3-symmetric table, row 15.7", "E8^IX", "{SU(7,2)}/Z3"),
      pair("3-symmetric table, row 15.8", "E8^IX", "{SU(6,3)}/Z3"),
      pair("3-symmetric table, row 16", "SO(4,4)", "{SU(2,1)}/Z3"),
      pair("3-symmetric table, row 17", "Spin(5,3)", "G2(split)", {}, "H read as the noncompact G2"),
      pair("3-symmetric table, row 18", "Spin(4,4)", "G2(split)", {}, "H read as the noncompact G2"),
  };
  return rows;
}

const FamilyRow& table2_open_case() {
  static const FamilyRow row{"3-symmetric table, excluded pair", "SO(2k+1,2k+1)",
                             "U(1,1) x SO(2k-1,2k-1)", {{"k"}, {"k>=2"}, {}},
                             Verdict::Undetermined, "no condition applies"};
  return row;
}

const std::vector<FamilyRow>& no_compact_quotient_families() {
  constexpr auto B = Verdict::NoNonVirtuallyAbelian;
  static const std::vector<FamilyRow> rows = {
      {"no-compact-quotient family 1", "SL(4k+2l,R)", "SO(2k,2k) x Sp(l,R)",
       {{"k", "l"}, {"k>=1", "l>=1"}, {}}, B, ""},
      {"no-compact-quotient family 2", "SL(2k+2l,R)", "Sp(k,R) x Sp(l,R)",
       {{"k", "l"}, {"k>=1", "l>=1"}, {}}, B, ""},
      {"no-compact-quotient family 3", "SL(4k+4l,R)", "SO(2k,2k) x SO(2l,2l)",
       {{"k", "l"}, {"k>=1", "l>=1"}, {}}, B, ""},
      {"no-compact-quotient family 4", "SL(4k+2l+1,R)", "SO(2k,2k) x SO(l,l+1)",
       {{"k", "l"}, {"k>=1", "l>=1"}, {}}, B, ""},
      {"no-compact-quotient family 5", "SU*(4k+2)", "U(s,r-s) x Sp(t,2k+1-r-t)",
       {{"k", "s", "t", "r"}, {"k>=1", "s+t==k+1", "1<=r<=2k+1", "0<=s<=r", "0<=t<=2k+1-r"}, {}}, B,
       "nonnegativity of every U and Sp argument made explicit"},
      {"no-compact-quotient family 6", "SU*(4k)", "U(s,r-s) x Sp(t,2k-r-t)",
       {{"k", "s", "t", "r"}, {"k>=1", "s+t==k", "1<=r<=2k", "0<=s<=r", "0<=t<=2k-r"}, {}}, B,
       "source prints Sp(t,2k+1-r-t); the quaternionic dimension count of SU*(4k) forces 2k-r-t"},
  };
  return rows;
}

const std::vector<FamilyRow>& admitting_families() {
  static const std::vector<FamilyRow> rows = {
      {"admitting family 1", "SL(2k+2l+2,R)", "SO(k,k+1) x SO(l,l+1)",
       {{"k", "l"}, {"k>=1", "l>=1"}, {}}, Admits, ""},
      {"admitting family 2", "SL(2k+2l+2,R)", "SO(k,k) x SO(l,l)", {{"k", "l"}, {"k>=1", "l>=1"}, {}},
       Admits, ""},
      {"admitting family 3", "E6^I", "{SL(3,C) x SU(2,1)}/Z3", {}, Admits, ""},
  };
  return rows;
}

const std::vector<FamilyRow>& undetermined_examples() {
  static const std::vector<FamilyRow> rows = {
      {"SL(10,R) over SO(5,5)", "SL(10,R)", "SO(5,5)", {}, Verdict::Undetermined, ""},
      {"SL(10,R) over SL(3,R) x SL(7,R)", "SL(10,R)", "SL(3,R) x SL(7,R)", {}, Verdict::Undetermined, ""},
  };
  return rows;
}

const std::vector<ObstructionCase>& obstruction_cases() {
  static const std::vector<ObstructionCase> cases = {
      {"non-subgroups of E6^IV", "E6^IV", "G2(split)"}, {"non-subgroups of E6^IV", "E6^IV", "SO(2,3)"},
      {"non-subgroups of E6^IV", "E6^IV", "SO(2,5)"},   {"non-subgroups of E6^IV", "E6^IV", "SO(2,7)"},
      {"non-subgroups of E6^IV", "E6^IV", "Sp(2,R)"},
  };
  return cases;
}

Instance instantiate(const FamilyRow& row, const Bindings& env) {
  return {substitute(row.g, env), substitute(row.h, env), env};
}

std::optional<Bindings> smallest_instance(const FamilyRow& row, long bound) {
  for (const auto& env : row.params.instances(bound)) {
    const Instance inst = instantiate(row, env);
    try {
      const auto g = parse_expression(inst.g);
      const auto h = parse_expression(inst.h);
      if (g.low_rank_normalized || h.low_rank_normalized) continue;
      if (rank_profile(h.normalized).real_rank == 0) continue;
      return env;
    } catch (const std::exception&) {
      continue;
    }
  }
  return std::nullopt;
}

std::optional<RealFormSpec> as_simple_noncompact(const ReductiveAlgebra& alg) {
  if (alg.simple_factors.size() != 1 || alg.compact_center_dim || alg.split_center_dim)
    return std::nullopt;
  const RealFormSpec& f = alg.simple_factors.front();
  if (f.family == Family::Compact || f.family == Family::Complex) return std::nullopt;
  return f;
}

void VerificationReport::record(Check c) {
  ++instances_checked;
  if (!c.ok) failures.push_back(c);
  checks.push_back(std::move(c));
}

nlohmann::json VerificationReport::to_json() const {
  auto check_json = [](const Check& c) {
    nlohmann::json j = {{"row", c.row},           {"params", c.params}, {"subject", c.subject},
                        {"expected", c.expected}, {"got", c.got},       {"ok", c.ok}};
    if (!c.condition.empty()) j["condition"] = c.condition;
    return j;
  };
  nlohmann::json checks_json = nlohmann::json::array(), failures_json = nlohmann::json::array();
  for (const auto& c : checks) checks_json.push_back(check_json(c));
  for (const auto& c : failures) failures_json.push_back(check_json(c));
  return {{"name", name},
          {"passed", passed()},
          {"rows_checked", rows_checked},
          {"instances_checked", instances_checked},
          {"failures", failures_json},
          {"skipped", skipped},
          {"checks", checks_json}};
}

std::string VerificationReport::text() const {
  std::ostringstream out;
  out << name << ": " << (passed() ? "PASS" : "FAIL") << " (" << rows_checked << " rows, "
      << instances_checked << " instances, " << failures.size() << " failures, " << skipped.size()
      << " skipped)\n";
  for (const auto& c : failures) {
    out << "  FAIL " << c.row;
    if (!c.params.empty()) out << " [" << bindings_str(c.params) << "]";
    out << ": " << c.subject << "\n       expected " << c.expected << ", got " << c.got;
    if (!c.condition.empty()) out << " via (" << c.condition << ")";
    out << "\n";
  }
  for (const auto& s : skipped) out << "  skip " << s << "\n";
  return out.str();
}

VerificationReport verify_table1(long k_max) {
  if (k_max < 1) throw DomainError("k_max must be >= 1");
  VerificationReport report;
  report.name = "rank table";
  for (const auto& row : table1_rows()) {
    ++report.rows_checked;
    for (const auto& env : row.params.instances(k_max)) {
      const std::string expr = substitute(row.algebra, env);
      const RankProfile want{static_cast<int>(evaluate(row.real_rank, env)),
                             static_cast<int>(evaluate(row.a_hyperbolic_rank, env))};
      Check c{row.source, env, expr, profile_str(want), "", "", true};
      try {
        const RankProfile got = rank_profile(parse(expr));
        c.got = profile_str(got);
        c.ok = got == want;
      } catch (const std::exception& e) {
        c.got = std::string("error: ") + e.what();
        c.ok = false;
      }
      report.record(std::move(c));
    }
  }
  return report;
}

namespace {

void check_pair(VerificationReport& report, const FamilyRow& row, const Bindings& env) {
  const Instance inst = instantiate(row, env);
  Check c{row.source, env, inst.g + " / " + inst.h, verdict_name(row.expected), "", "", true};
  try {
    const ReductiveAlgebra g = parse(inst.g);
    if (!as_simple_noncompact(g)) {
      report.skipped.push_back(row.source + " [" + bindings_str(env) + "]: G = " + render(g) +
                               " is not simple and noncompact");
      return;
    }
    const ReductiveAlgebra h = parse(inst.h);
    const RankProfile gp = rank_profile(g), hp = rank_profile(h);
    const Decision d = decide(gp, hp);
    c.subject = render(g) + " / " + render(h) + "  g=" + profile_str(gp) + " h=" + profile_str(hp);
    c.got = verdict_name(d.verdict);
    c.condition = d.condition();
    c.ok = d.verdict == row.expected;
  } catch (const std::exception& e) {
    c.got = std::string("error: ") + e.what();
    c.ok = false;
  }
  report.record(std::move(c));
}

}  // namespace

VerificationReport verify_table2(long param_bound) {
  if (param_bound < 2) throw DomainError("param_bound must be >= 2");
  VerificationReport report;
  report.name = "3-symmetric table";
  for (const auto& row : table2_rows()) {
    ++report.rows_checked;
    for (const auto& env : row.params.instances(param_bound)) check_pair(report, row, env);
  }
  ++report.rows_checked;
  for (const auto& env : table2_open_case().params.instances(param_bound))
    check_pair(report, table2_open_case(), env);
  return report;
}

std::vector<RealFormSpec> anomaly_scan(int rank_bound) {
  if (rank_bound < 2) throw DomainError("rank_bound must be >= 2");
  std::vector<RealFormSpec> out;
  for (const auto& t : canonical_types(rank_bound))
    for (const auto& spec : real_forms_of(t)) {
      const RankProfile p = rank_profile(spec);
      if (p.real_rank != p.a_hyperbolic_rank) out.push_back(spec);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RealFormSpec> table1_prediction(int rank_bound) {
  std::vector<RealFormSpec> out;
  for (const auto& row : table1_rows()) {
    for (const auto& env : row.params.instances(rank_bound + 1)) {
      const auto spec = as_simple_noncompact(parse(substitute(row.algebra, env)));
      if (!spec || spec->lie_type().rank() > rank_bound) continue;
      if (evaluate(row.a_hyperbolic_rank, env) == evaluate(row.real_rank, env)) continue;
      out.push_back(*spec);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace ahyp
