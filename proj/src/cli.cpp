#include "ahyp/cli.hpp"

#include <algorithm>
#include <functional>

#include <CLI11.hpp>

#include "ahyp/catalog.hpp"
#include "ahyp/errors.hpp"

namespace ahyp {

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kBadInput = 2;

const char* const kGrammarHelp = R"help(Algebra expressions:
  sl(n,R) sl(n,C) sl(n,H) su(n) su(p,q) su*(2n) so(n) so(p,q) so(n,C) so*(2n)
  sp(n) sp(n,R) sp(n,C) sp(p,q) u(n) u(p,q) S(U(p,q) x U(r))
  e6 e7 e8 f4 g2 (compact)  e6(IV) e6^IV e6(-26) g2(split)  A2(C) e6(C)
  T^k (compact torus)  R^k (split abelian)
Factors are joined by x, *, + or the Unicode product sign; {..} and [..]
group, and quotients such as /Z2 or /{Z2 x Z3} are ignored.
Examples: "su*(14) x T^1"  "{SL(3,C) x SU(2,1)}/Z3"  "U(1,1) x SO(3,3)")help";

struct Common {
  bool json = false;
  std::string params;
};

std::string profile_str(const RankProfile& p) {
  return "(" + std::to_string(p.real_rank) + "," + std::to_string(p.a_hyperbolic_rank) + ")";
}

class Session {
 public:
  Session(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  std::string expand(const std::string& expr, const Common& c) const {
    return c.params.empty() ? expr : substitute(expr, parse_bindings(c.params));
  }

  AlgebraExpression read(const std::string& expr, const Common& c) const {
    const std::string text = expand(expr, c);
    try {
      return parse_expression(text);
    } catch (const ParseError& e) {
      err_ << "error: " << e.what() << "\n  " << text << "\n  " << std::string(e.position(), ' ')
           << "^\n";
      throw Reported{};
    }
  }

  // A single simple factor, compact and complex forms included.
  RealFormSpec read_form(const std::string& expr, const Common& c) const {
    const AlgebraExpression a = read(expr, c);
    if (a.normalized.simple_factors.size() != 1 || a.normalized.compact_center_dim ||
        a.normalized.split_center_dim)
      throw DomainError("expected a single simple algebra, got " + render(a.normalized));
    return a.normalized.simple_factors.front();
  }

  int rank(const std::string& expr, const Common& c) {
    const AlgebraExpression a = read(expr, c);
    const RankProfile p = rank_profile(a.normalized);
    if (c.json) {
      nlohmann::json factors = nlohmann::json::array();
      for (const auto& f : a.normalized.simple_factors) {
        nlohmann::json j = to_json(rank_profile(f));
        j["factor"] = render(f);
        factors.push_back(j);
      }
      nlohmann::json j = to_json(p);
      j["algebra"] = render(a.normalized);
      j["factors"] = factors;
      j["compact_center_dim"] = a.normalized.compact_center_dim;
      j["split_center_dim"] = a.normalized.split_center_dim;
      j["notes"] = a.notes;
      out_ << j.dump(2) << "\n";
    } else {
      out_ << render(a.normalized) << "\n";
      out_ << "real rank: " << p.real_rank << "\n";
      out_ << "a-hyperbolic rank: " << p.a_hyperbolic_rank << "\n";
      for (const auto& n : a.notes) out_ << "note: " << n << "\n";
    }
    return kOk;
  }

  int decide_cmd(const std::string& g_expr, const std::string& h_expr, const Common& c) {
    const AlgebraExpression g = read(g_expr, c), h = read(h_expr, c);
    const RankProfile gp = rank_profile(g.normalized), hp = rank_profile(h.normalized);
    const Decision d = decide(gp, hp);
    if (c.json) {
      nlohmann::json j = to_json(d);
      j["g"] = {{"algebra", render(g.normalized)}, {"profile", to_json(gp)}};
      j["h"] = {{"algebra", render(h.normalized)}, {"profile", to_json(hp)}};
      out_ << j.dump(2) << "\n";
      return kOk;
    }
    out_ << "G: " << render(g.normalized) << "  (real, a-hyp) = " << profile_str(gp) << "\n";
    out_ << "H: " << render(h.normalized) << "  (real, a-hyp) = " << profile_str(hp) << "\n";
    static const std::map<std::string, std::string> what = {
        {"A", "real rank G == real rank H"},
        {"B", "a-hyp rank G == a-hyp rank H"},
        {"C", "a-hyp rank G > real rank H"},
    };
    for (const auto& e : d.trace)
      out_ << "(" << e.condition << ") " << what.at(e.condition) << ": " << e.lhs << " " << e.op << " "
           << e.rhs << " " << (e.holds ? "holds" : "fails") << "\n";
    out_ << "verdict: " << verdict_name(d.verdict) << "\n";
    return kOk;
  }

  int embed_check(const std::string& g_expr, const std::string& h_expr, const Common& c) {
    const AlgebraExpression g = read(g_expr, c), h = read(h_expr, c);
    const RankProfile gp = rank_profile(g.normalized), hp = rank_profile(h.normalized);
    const Obstruction o = embed_obstruction(gp, hp);
    if (c.json) {
      nlohmann::json j = to_json(o);
      j["g"] = {{"algebra", render(g.normalized)}, {"profile", to_json(gp)}};
      j["h"] = {{"algebra", render(h.normalized)}, {"profile", to_json(hp)}};
      out_ << j.dump(2) << "\n";
      return kOk;
    }
    out_ << "G: " << render(g.normalized) << "  (real, a-hyp) = " << profile_str(gp) << "\n";
    out_ << "H: " << render(h.normalized) << "  (real, a-hyp) = " << profile_str(hp) << "\n";
    out_ << (o.obstructed ? "obstructed" : "not obstructed") << "\n";
    for (const auto& w : o.witnesses) out_ << "  H exceeds G: " << w << "\n";
    return kOk;
  }

  int satake_show(const std::string& expr, const Common& c) {
    const RealFormSpec f = read_form(expr, c);
    const SatakeDiagram d = satake_of(f);
    const RankProfile p = rank_profile(d);
    if (c.json) {
      nlohmann::json j = to_json(d);
      j["form"] = render(f);
      j["real_rank"] = p.real_rank;
      j["a_hyperbolic_rank"] = p.a_hyperbolic_rank;
      out_ << j.dump(2) << "\n";
      return kOk;
    }
    out_ << render(f) << "\n" << draw(d);
    out_ << "real rank: " << p.real_rank << "\na-hyperbolic rank: " << p.a_hyperbolic_rank << "\n";
    return kOk;
  }

  int orbits(const std::string& expr, const Common& c) {
    const RealFormSpec f = read_form(expr, c);
    const SatakeDiagram d = satake_of(f);
    const auto gens = b_plus_generators(d);
    if (c.json) {
      nlohmann::json list = nlohmann::json::array();
      for (const auto& g : gens) list.push_back(g.to_json());
      out_ << nlohmann::json{{"form", render(f)},
                             {"type", d.type_name()},
                             {"a_hyperbolic_rank", gens.size()},
                             {"generators", list}}
                  .dump(2)
           << "\n";
      return kOk;
    }
    for (const auto& g : gens) out_ << g.str() << "\n";
    return kOk;
  }

  int report(const VerificationReport& r, const Common& c) {
    if (c.json)
      out_ << r.to_json().dump(2) << "\n";
    else
      out_ << r.text();
    return r.passed() ? kOk : kVerificationFailed;
  }

  int anomaly(int rank_bound, const Common& c) {
    const auto found = anomaly_scan(rank_bound);
    const auto predicted = table1_prediction(rank_bound);
    const bool match = found == predicted;
    if (c.json) {
      nlohmann::json list = nlohmann::json::array();
      for (const auto& f : found) {
        nlohmann::json j = to_json(rank_profile(f));
        j["form"] = render(f);
        j["family"] = f.label();
        list.push_back(j);
      }
      out_ << nlohmann::json{{"rank_bound", rank_bound}, {"forms", list}, {"matches_table", match}}.dump(2)
           << "\n";
    } else {
      for (const auto& f : found) out_ << render(f) << "  " << profile_str(rank_profile(f)) << "\n";
      out_ << found.size() << " forms; " << (match ? "matches" : "DOES NOT match")
           << " the rank table\n";
    }
    return match ? kOk : kVerificationFailed;
  }

  struct Reported {};

 private:
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Real and a-hyperbolic ranks, and discontinuous-action conditions for G/H", "ahyp"};
  app.footer(kGrammarHelp);
  app.require_subcommand(1);

  Session session(out, err);
  std::function<int()> action;

  auto common = [](CLI::App* sub, Common& c) {
    sub->add_flag("--json", c.json, "JSON output");
    sub->add_option("--params", c.params, "parameter values substituted into the expressions, e.g. k=2,l=1");
  };

  Common c;
  std::string e1, e2;
  long kmax = 6, bound = 4;
  int rank_bound = 9;

  auto* rank = app.add_subcommand("rank", "real and a-hyperbolic rank of an algebra");
  rank->add_option("expr", e1, "algebra expression")->required();
  common(rank, c);
  rank->callback([&] { action = [&] { return session.rank(e1, c); }; });

  auto* dec = app.add_subcommand("decide", "apply conditions (A), (B), (C) to G/H");
  dec->add_option("G", e1, "algebra of G")->required();
  dec->add_option("H", e2, "algebra of H")->required();
  common(dec, c);
  dec->callback([&] { action = [&] { return session.decide_cmd(e1, e2, c); }; });

  auto* emb = app.add_subcommand("embed-check", "rank obstructions to H being a reductive subgroup of G");
  emb->add_option("G", e1, "algebra of G")->required();
  emb->add_option("H", e2, "algebra of H")->required();
  common(emb, c);
  emb->callback([&] { action = [&] { return session.embed_check(e1, e2, c); }; });

  auto* show = app.add_subcommand("satake-show", "draw the Satake diagram of a simple real form");
  show->add_option("form", e1, "simple algebra")->required();
  common(show, c);
  show->callback([&] { action = [&] { return session.satake_show(e1, c); }; });

  auto* orb = app.add_subcommand("orbits", "generators of the antipodal hyperbolic cone");
  orb->add_option("form", e1, "simple algebra")->required();
  common(orb, c);
  orb->callback([&] { action = [&] { return session.orbits(e1, c); }; });

  auto* t1 = app.add_subcommand("table1", "check the rank table");
  t1->add_option("--kmax", kmax, "largest k")->check(CLI::Range(1L, 50L));
  common(t1, c);
  t1->callback([&] { action = [&] { return session.report(verify_table1(kmax), c); }; });

  auto* t2 = app.add_subcommand("table2", "check the 3-symmetric space table");
  t2->add_option("--bound", bound, "largest parameter value")->check(CLI::Range(2L, 12L));
  common(t2, c);
  t2->callback([&] { action = [&] { return session.report(verify_table2(bound), c); }; });

  auto* scan = app.add_subcommand("anomaly-scan", "real forms whose two ranks differ");
  scan->add_option("--rank", rank_bound, "largest rank")->check(CLI::Range(2, 12));
  common(scan, c);
  scan->callback([&] { action = [&] { return session.anomaly(rank_bound, c); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    return action();
  } catch (const Session::Reported&) {
    return kBadInput;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const NotASubgroupPair& e) {
    err << "error: not a subgroup pair: " << e.what() << "\n";
  } catch (const UnsupportedRank& e) {
    err << "error: " << e.what() << "\n";
  }
  return kBadInput;
}

}  // namespace ahyp
