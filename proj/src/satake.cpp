#include "ahyp/satake.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ahyp/errors.hpp"

namespace ahyp {

namespace {

bool is_exceptional(Family f) { return f >= Family::E6I && f <= Family::G2Split; }

LieType exceptional_type(Family f) {
  switch (f) {
    case Family::E6I:
    case Family::E6II:
    case Family::E6III:
    case Family::E6IV:
      return LieType('E', 6);
    case Family::E7V:
    case Family::E7VI:
    case Family::E7VII:
      return LieType('E', 7);
    case Family::E8VIII:
    case Family::E8IX:
      return LieType('E', 8);
    case Family::F4I:
    case Family::F4II:
      return LieType('F', 4);
    case Family::G2Split:
      return LieType('G', 2);
    default:
      throw std::logic_error("not an exceptional family");
  }
}

void require(bool ok, const RealFormSpec& spec, const std::string& constraint) {
  if (!ok) throw DomainError(spec.label() + ": requires " + constraint);
}

std::set<Node> range_nodes(Node from, Node to) {
  std::set<Node> out;
  for (Node i = from; i <= to; ++i) out.insert(i);
  return out;
}

SatakeDiagram single(const LieType& t, std::set<Node> black = {},
                     std::vector<std::pair<Node, Node>> arrows = {}) {
  std::sort(arrows.begin(), arrows.end());
  return SatakeDiagram{{t}, std::move(black), std::move(arrows)};
}

SatakeDiagram su_pq_diagram(int p, int q) {
  const int n = p + q - 1;
  const int small = std::min(p, q);
  std::vector<std::pair<Node, Node>> arrows;
  for (Node i = 1; i <= small; ++i)
    if (i < n + 1 - i) arrows.emplace_back(i, n + 1 - i);
  return single(LieType('A', n), range_nodes(small + 1, n - small), std::move(arrows));
}

SatakeDiagram so_pq_diagram(int p, int q) {
  const int small = std::min(p, q);
  if ((p + q) % 2 == 1) {
    const int n = (p + q - 1) / 2;
    return single(LieType('B', n), range_nodes(small + 1, n));
  }
  const int n = (p + q) / 2;
  if (small <= n - 2) return single(LieType('D', n), range_nodes(small + 1, n));
  if (small == n - 1) return single(LieType('D', n), {}, {{n - 1, n}});
  return single(LieType('D', n));
}

SatakeDiagram sp_pq_diagram(int p, int q) {
  const int n = p + q;
  const int small = std::min(p, q);
  std::set<Node> black = range_nodes(2 * small + 1, n);
  for (Node i = 1; i < 2 * small; i += 2) black.insert(i);
  return single(LieType('C', n), std::move(black));
}

SatakeDiagram so_star_diagram(int two_n) {
  const int n = two_n / 2;
  std::set<Node> black;
  if (n % 2 == 0) {
    for (Node i = 1; i < n; i += 2) black.insert(i);
    return single(LieType('D', n), std::move(black));
  }
  for (Node i = 1; i <= n - 2; i += 2) black.insert(i);
  return single(LieType('D', n), std::move(black), {{n - 1, n}});
}

SatakeDiagram exceptional_diagram(Family f) {
  const LieType t = exceptional_type(f);
  switch (f) {
    case Family::E6II:
      return single(t, {}, {{1, 5}, {2, 4}});
    case Family::E6III:
      return single(t, {2, 3, 4}, {{1, 5}});
    case Family::E6IV:
      return single(t, {2, 3, 4, 6});
    case Family::E7VI:
      return single(t, {4, 6, 7});
    case Family::E7VII:
      return single(t, {2, 3, 4, 7});
    case Family::E8IX:
      return single(t, {2, 3, 4, 8});
    case Family::F4II:
      return single(t, {1, 2, 3});
    default:  // split forms
      return single(t);
  }
}

// Local Cartan data of white node i: its black neighbours' couplings.
std::multiset<std::pair<int, int>> black_neighbourhood(const SatakeDiagram& d,
                                                       const CartanMatrix& a, Node i) {
  std::multiset<std::pair<int, int>> out;
  for (Node b : d.black)
    if (a(i, b) != 0) out.emplace(a(i, b), a(b, i));
  return out;
}

}  // namespace

std::string family_label(Family f) {
  static const std::map<Family, std::string> names = {
      {Family::SlR, "sl_R"},       {Family::SuStar, "su_star"}, {Family::SuPQ, "su_pq"},
      {Family::SoPQ, "so_pq"},     {Family::SpR, "sp_R"},       {Family::SpPQ, "sp_pq"},
      {Family::SoStar, "so_star"}, {Family::E6I, "e6_I"},       {Family::E6II, "e6_II"},
      {Family::E6III, "e6_III"},   {Family::E6IV, "e6_IV"},     {Family::E7V, "e7_V"},
      {Family::E7VI, "e7_VI"},     {Family::E7VII, "e7_VII"},   {Family::E8VIII, "e8_VIII"},
      {Family::E8IX, "e8_IX"},     {Family::F4I, "f4_I"},       {Family::F4II, "f4_II"},
      {Family::G2Split, "g2_split"}, {Family::Compact, "compact"}, {Family::Complex, "complex"},
  };
  return names.at(f);
}

RealFormSpec RealFormSpec::sl_R(int n) { return {Family::SlR, {n}, std::nullopt}; }
RealFormSpec RealFormSpec::su_star(int two_n) { return {Family::SuStar, {two_n}, std::nullopt}; }
RealFormSpec RealFormSpec::su_pq(int p, int q) { return {Family::SuPQ, {p, q}, std::nullopt}; }
RealFormSpec RealFormSpec::so_pq(int p, int q) { return {Family::SoPQ, {p, q}, std::nullopt}; }
RealFormSpec RealFormSpec::sp_R(int n) { return {Family::SpR, {n}, std::nullopt}; }
RealFormSpec RealFormSpec::sp_pq(int p, int q) { return {Family::SpPQ, {p, q}, std::nullopt}; }
RealFormSpec RealFormSpec::so_star(int two_n) { return {Family::SoStar, {two_n}, std::nullopt}; }
RealFormSpec RealFormSpec::exceptional(Family f) {
  if (!is_exceptional(f)) throw DomainError(family_label(f) + " is not an exceptional family");
  return {f, {}, std::nullopt};
}
RealFormSpec RealFormSpec::compact(LieType t) { return {Family::Compact, {}, t}; }
RealFormSpec RealFormSpec::complex(LieType t) { return {Family::Complex, {}, t}; }

std::string RealFormSpec::label() const {
  std::string out = family_label(family);
  if (base) out += "_" + base->name();
  if (!params.empty()) {
    out += "(";
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(params[i]);
    }
    out += ")";
  }
  return out;
}

void RealFormSpec::validate() const {
  const bool needs_base = family == Family::Compact || family == Family::Complex;
  require(needs_base == base.has_value(), *this,
          needs_base ? "a base type" : "no base type");
  std::size_t arity = 0;
  switch (family) {
    case Family::SlR:
    case Family::SuStar:
    case Family::SpR:
    case Family::SoStar:
      arity = 1;
      break;
    case Family::SuPQ:
    case Family::SoPQ:
    case Family::SpPQ:
      arity = 2;
      break;
    default:
      break;
  }
  require(params.size() == arity, *this, std::to_string(arity) + " parameter(s)");
  for (int v : params) require(v >= 0, *this, "nonnegative parameters");

  switch (family) {
    case Family::SlR:
      require(params[0] >= 2, *this, "n >= 2");
      break;
    case Family::SuStar:
      require(params[0] % 2 == 0, *this, "even total dimension");
      require(params[0] >= 4, *this, "total dimension >= 4");
      break;
    case Family::SuPQ:
      require(params[0] + params[1] >= 2, *this, "p+q >= 2");
      break;
    case Family::SoPQ:
      require(params[0] + params[1] >= 3, *this, "p+q >= 3");
      break;
    case Family::SpR:
      require(params[0] >= 1, *this, "n >= 1");
      break;
    case Family::SpPQ:
      require(params[0] + params[1] >= 1, *this, "p+q >= 1");
      break;
    case Family::SoStar:
      require(params[0] % 2 == 0, *this, "even total dimension");
      require(params[0] >= 4, *this, "total dimension >= 4");
      break;
    default:
      break;
  }
}

LieType RealFormSpec::lie_type() const {
  validate();
  switch (family) {
    case Family::SlR:
      return LieType('A', params[0] - 1);
    case Family::SuStar:
      return LieType('A', params[0] - 1);
    case Family::SuPQ:
      return LieType('A', params[0] + params[1] - 1);
    case Family::SoPQ: {
      const int dim = params[0] + params[1];
      return dim % 2 ? LieType('B', (dim - 1) / 2) : LieType('D', dim / 2);
    }
    case Family::SpR:
      return LieType('C', params[0]);
    case Family::SpPQ:
      return LieType('C', params[0] + params[1]);
    case Family::SoStar:
      return LieType('D', params[0] / 2);
    case Family::Compact:
    case Family::Complex:
      return *base;
    default:
      return exceptional_type(family);
  }
}

int SatakeDiagram::rank() const {
  int r = 0;
  for (const auto& t : components) r += t.rank();
  return r;
}

CartanMatrix SatakeDiagram::cartan() const {
  CartanMatrix a = cartan_matrix(components.front());
  for (std::size_t i = 1; i < components.size(); ++i)
    a = a.direct_sum(cartan_matrix(components[i]));
  return a;
}

NodePermutation SatakeDiagram::iota() const {
  NodePermutation p = ahyp::iota(components.front());
  for (std::size_t i = 1; i < components.size(); ++i) p = p.direct_sum(ahyp::iota(components[i]));
  return p;
}

NodePermutation SatakeDiagram::arrow_map() const {
  std::vector<Node> image(static_cast<std::size_t>(rank()));
  for (Node i = 1; i <= rank(); ++i) image[i - 1] = i;
  for (auto [i, j] : arrows) std::swap(image[i - 1], image[j - 1]);
  return NodePermutation(std::move(image));
}

std::string SatakeDiagram::type_name() const {
  std::string out;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) out += "+";
    out += components[i].name();
  }
  return out;
}

SatakeDiagram satake_of(const RealFormSpec& spec) {
  const LieType t = spec.lie_type();  // validates
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::SlR:
    case Family::SpR:
      return single(t);
    case Family::SuStar: {
      std::set<Node> black;
      for (Node i = 1; i <= t.rank(); i += 2) black.insert(i);
      return single(t, std::move(black));
    }
    case Family::SuPQ:
      return su_pq_diagram(p[0], p[1]);
    case Family::SoPQ:
      return so_pq_diagram(p[0], p[1]);
    case Family::SpPQ:
      return sp_pq_diagram(p[0], p[1]);
    case Family::SoStar:
      return so_star_diagram(p[0]);
    case Family::Compact:
      return single(t, range_nodes(1, t.rank()));
    case Family::Complex:
      return complex_as_real(t);
    default:
      return exceptional_diagram(spec.family);
  }
}

SatakeDiagram complex_as_real(const LieType& t) {
  std::vector<std::pair<Node, Node>> arrows;
  for (Node i = 1; i <= t.rank(); ++i) arrows.emplace_back(i, i + t.rank());
  return SatakeDiagram{{t, t}, {}, std::move(arrows)};
}

std::vector<std::string> validate(const SatakeDiagram& d) {
  std::vector<std::string> violations;
  if (d.components.empty() || d.components.size() > 2) {
    violations.push_back("diagram must have one component or two equal copies");
    return violations;
  }
  if (d.components.size() == 2 && d.components[0] != d.components[1])
    violations.push_back("doubled diagram copies differ");

  const int n = d.rank();
  auto in_range = [n](Node i) { return i >= 1 && i <= n; };
  for (Node b : d.black)
    if (!in_range(b)) violations.push_back("black node out of range: " + std::to_string(b));

  std::map<Node, int> touches;
  bool indices_ok = true;
  for (auto [i, j] : d.arrows) {
    if (!in_range(i) || !in_range(j)) {
      violations.push_back("arrow endpoint out of range");
      indices_ok = false;
      continue;
    }
    if (i == j) violations.push_back("arrow joins a node to itself");
    if (d.black.count(i) || d.black.count(j)) violations.push_back("arrow endpoint is black");
    ++touches[i];
    ++touches[j];
  }
  for (auto [node, count] : touches)
    if (count > 1)
      violations.push_back("node " + std::to_string(node) + " is in more than one arrow");
  if (!violations.empty() || !indices_ok) return violations;

  const CartanMatrix a = d.cartan();
  const NodePermutation sigma = d.arrow_map();
  std::vector<Node> white;
  for (Node i = 1; i <= n; ++i)
    if (!d.black.count(i)) white.push_back(i);
  bool equivariant = true;
  for (Node i : white) {
    for (Node j : white)
      if (a(sigma(i), sigma(j)) != a(i, j)) equivariant = false;
    if (black_neighbourhood(d, a, i) != black_neighbourhood(d, a, sigma(i))) equivariant = false;
  }
  if (!equivariant) violations.push_back("arrow not an automorphism");
  return violations;
}

int real_rank(const SatakeDiagram& d) {
  return d.rank() - static_cast<int>(d.black.size()) - static_cast<int>(d.arrows.size());
}

std::vector<RealFormSpec> real_forms_of(const LieType& t) {
  std::vector<RealFormSpec> out;
  const int n = t.rank();
  switch (t.letter()) {
    case 'A':
      out.push_back(RealFormSpec::sl_R(n + 1));
      if ((n + 1) % 2 == 0 && n + 1 >= 4) out.push_back(RealFormSpec::su_star(n + 1));
      for (int p = 1; 2 * p <= n + 1; ++p) out.push_back(RealFormSpec::su_pq(p, n + 1 - p));
      break;
    case 'B':
      for (int p = 1; p <= n; ++p) out.push_back(RealFormSpec::so_pq(p, 2 * n + 1 - p));
      break;
    case 'C':
      out.push_back(RealFormSpec::sp_R(n));
      for (int p = 1; 2 * p <= n; ++p) out.push_back(RealFormSpec::sp_pq(p, n - p));
      break;
    case 'D':
      for (int p = 1; p <= n; ++p) out.push_back(RealFormSpec::so_pq(p, 2 * n - p));
      if (n >= 2) out.push_back(RealFormSpec::so_star(2 * n));
      break;
    case 'E':
      if (n == 6)
        for (Family f : {Family::E6I, Family::E6II, Family::E6III, Family::E6IV})
          out.push_back(RealFormSpec::exceptional(f));
      if (n == 7)
        for (Family f : {Family::E7V, Family::E7VI, Family::E7VII})
          out.push_back(RealFormSpec::exceptional(f));
      if (n == 8)
        for (Family f : {Family::E8VIII, Family::E8IX}) out.push_back(RealFormSpec::exceptional(f));
      break;
    case 'F':
      out.push_back(RealFormSpec::exceptional(Family::F4I));
      out.push_back(RealFormSpec::exceptional(Family::F4II));
      break;
    case 'G':
      out.push_back(RealFormSpec::exceptional(Family::G2Split));
      break;
  }
  out.push_back(RealFormSpec::compact(t));
  return out;
}

std::vector<LieType> canonical_types(int rank_bound) {
  std::vector<LieType> out;
  for (int n = 1; n <= rank_bound; ++n) out.emplace_back('A', n);
  for (int n = 2; n <= rank_bound; ++n) out.emplace_back('B', n);
  for (int n = 3; n <= rank_bound; ++n) out.emplace_back('C', n);
  for (int n = 4; n <= rank_bound; ++n) out.emplace_back('D', n);
  for (int n = 6; n <= std::min(rank_bound, 8); ++n) out.emplace_back('E', n);
  if (rank_bound >= 4) out.emplace_back('F', 4);
  if (rank_bound >= 2) out.emplace_back('G', 2);
  return out;
}

nlohmann::json to_json(const SatakeDiagram& d) {
  nlohmann::json arrows = nlohmann::json::array();
  for (auto [i, j] : d.arrows) arrows.push_back({i, j});
  const bool e_series = std::any_of(d.components.begin(), d.components.end(),
                                    [](const LieType& t) { return t.letter() == 'E'; });
  return {
      {"type", d.type_name()},
      {"rank", d.rank()},
      {"black", std::vector<Node>(d.black.begin(), d.black.end())},
      {"arrows", arrows},
      {"numbering", e_series ? "chain-branch" : "bourbaki"},
  };
}

namespace {

// Bond drawn between consecutive chain nodes i and i+1 of one component.
std::string chain_bond(const LieType& t, Node i) {
  const int n = t.rank();
  switch (t.letter()) {
    case 'B':
      return i == n - 1 ? "=>=" : "---";
    case 'C':
      return i == n - 1 ? "=<=" : "---";
    case 'F':
      return i == 2 ? "=>=" : "---";
    case 'G':
      return "<<<";
    case 'D':
      return n == 2 ? "   " : "---";
    default:
      return "---";
  }
}

void draw_component(std::ostringstream& out, const SatakeDiagram& d, const LieType& t,
                    Node offset) {
  const int n = t.rank();
  // D and E hang their last node below a chain node.
  Node branch_parent = 0;
  if (t.letter() == 'D' && n >= 3) branch_parent = n - 2;
  if (t.letter() == 'E') branch_parent = 3;
  const int chain = branch_parent ? n - 1 : n;

  auto glyph = [&](Node local) { return d.black.count(local + offset) ? '*' : 'o'; };

  std::string labels, nodes;
  for (Node i = 1; i <= chain; ++i) {
    std::string label = std::to_string(i + offset);
    label.resize(4, ' ');
    labels += label;
    nodes += glyph(i);
    if (i < chain) nodes += chain_bond(t, i);
  }
  out << "  " << labels << "\n  " << nodes << "\n";
  if (branch_parent) {
    const std::string pad(static_cast<std::size_t>(4 * (branch_parent - 1)), ' ');
    out << "  " << pad << "|\n";
    out << "  " << pad << glyph(n) << " " << (n + offset) << "\n";
  }
}

}  // namespace

std::string draw(const SatakeDiagram& d) {
  std::ostringstream out;
  out << d.type_name() << "\n";
  Node offset = 0;
  for (const auto& t : d.components) {
    draw_component(out, d, t, offset);
    offset += t.rank();
  }
  out << "arrows:";
  if (d.arrows.empty()) out << " none";
  for (std::size_t k = 0; k < d.arrows.size(); ++k)
    out << (k ? ", " : " ") << d.arrows[k].first << "<->" << d.arrows[k].second;
  out << "\n";
  return out.str();
}

}  // namespace ahyp
