#include "ahyp/decision.hpp"

#include <array>
#include <utility>

#include "ahyp/errors.hpp"

namespace ahyp {

namespace {

constexpr std::array<std::pair<Verdict, const char*>, 4> kNames = {{
    {Verdict::NoInfiniteDiscontinuous, "NoInfiniteDiscontinuous"},
    {Verdict::NoNonVirtuallyAbelian, "NoNonVirtuallyAbelian"},
    {Verdict::AdmitsNonVirtuallyAbelian, "AdmitsNonVirtuallyAbelian"},
    {Verdict::Undetermined, "Undetermined"},
}};

std::string profile_str(const RankProfile& p) {
  return "(" + std::to_string(p.real_rank) + "," + std::to_string(p.a_hyperbolic_rank) + ")";
}

}  // namespace

std::string verdict_name(Verdict v) {
  for (auto [verdict, name] : kNames)
    if (verdict == v) return name;
  return "?";
}

std::optional<Verdict> parse_verdict(const std::string& name) {
  for (auto [verdict, label] : kNames)
    if (name == label) return verdict;
  return std::nullopt;
}

std::string Decision::condition() const {
  if (verdict == Verdict::Undetermined || trace.empty()) return "";
  return trace.back().condition;
}

Decision decide(const RankProfile& g, const RankProfile& h) {
  const Obstruction ob = embed_obstruction(g, h);
  if (ob.obstructed)
    throw NotASubgroupPair("profile " + profile_str(h) + " cannot belong to a reductive subgroup of " +
                           profile_str(g) + ": " + ob.witnesses.front());

  Decision d{Verdict::Undetermined, {}};
  const std::array<std::pair<TraceEntry, Verdict>, 3> steps = {{
      {{"A", g.real_rank, "==", h.real_rank, g.real_rank == h.real_rank},
       Verdict::NoInfiniteDiscontinuous},
      {{"B", g.a_hyperbolic_rank, "==", h.a_hyperbolic_rank,
        g.a_hyperbolic_rank == h.a_hyperbolic_rank},
       Verdict::NoNonVirtuallyAbelian},
      {{"C", g.a_hyperbolic_rank, ">", h.real_rank, g.a_hyperbolic_rank > h.real_rank},
       Verdict::AdmitsNonVirtuallyAbelian},
  }};
  for (const auto& [entry, verdict] : steps) {
    d.trace.push_back(entry);
    if (entry.holds) {
      d.verdict = verdict;
      break;
    }
  }
  return d;
}

Obstruction embed_obstruction(const RankProfile& g, const RankProfile& h) {
  Obstruction o;
  if (h.a_hyperbolic_rank > g.a_hyperbolic_rank)
    o.witnesses.push_back("a-hyperbolic rank " + std::to_string(h.a_hyperbolic_rank) + " > " +
                          std::to_string(g.a_hyperbolic_rank));
  if (h.real_rank > g.real_rank)
    o.witnesses.push_back("real rank " + std::to_string(h.real_rank) + " > " +
                          std::to_string(g.real_rank));
  o.obstructed = !o.witnesses.empty();
  return o;
}

nlohmann::json to_json(const Decision& d) {
  nlohmann::json trace = nlohmann::json::array();
  for (const auto& e : d.trace)
    trace.push_back(
        {{"condition", e.condition}, {"lhs", e.lhs}, {"op", e.op}, {"rhs", e.rhs}, {"holds", e.holds}});
  return {{"verdict", verdict_name(d.verdict)}, {"trace", trace}};
}

nlohmann::json to_json(const Obstruction& o) {
  return {{"obstructed", o.obstructed}, {"witnesses", o.witnesses}};
}

}  // namespace ahyp
