#include "ahyp/notation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

#include "ahyp/errors.hpp"

namespace ahyp {

namespace {

// ---- Unicode folding -------------------------------------------------------

struct Folded {
  std::string text;
  std::vector<std::size_t> offset;  // byte offset in the source, one per char plus end
};

struct Glyph {
  const char* utf8;
  const char* ascii;
  bool superscript;
};

constexpr Glyph kGlyphs[] = {
    {"ℝ", "R", false},   {"ℂ", "C", false},   {"ℍ", "H", false},
    {"ℤ", "Z", false},   {"×", " x ", false}, {"⊕", " + ", false},
    {"−", "-", false},   {"∗", "*", false},   {"¹", "1", true},
    {"²", "2", true},    {"³", "3", true},    {"⁰", "0", true},
    {"⁴", "4", true},    {"⁵", "5", true},    {"⁶", "6", true},
    {"⁷", "7", true},    {"⁸", "8", true},    {"⁹", "9", true},
    {"₀", "0", false},   {"₁", "1", false},   {"₂", "2", false},
    {"₃", "3", false},   {"₄", "4", false},   {"₅", "5", false},
    {"₆", "6", false},   {"₇", "7", false},   {"₈", "8", false},
    {"₉", "9", false},
};

Folded fold(const std::string& s) {
  Folded out;
  bool in_superscript = false;
  std::size_t i = 0;
  while (i < s.size()) {
    const auto c = static_cast<unsigned char>(s[i]);
    if (c < 0x80) {
      out.text += static_cast<char>(c);
      out.offset.push_back(i);
      in_superscript = false;
      ++i;
      continue;
    }
    const Glyph* hit = nullptr;
    for (const auto& g : kGlyphs)
      if (s.compare(i, std::char_traits<char>::length(g.utf8), g.utf8) == 0) hit = &g;
    if (!hit) throw ParseError("unexpected character", i);
    if (hit->superscript && !in_superscript) {
      out.text += '^';
      out.offset.push_back(i);
    }
    for (const char* a = hit->ascii; *a; ++a) {
      out.text += *a;
      out.offset.push_back(i);
    }
    in_superscript = hit->superscript;
    i += std::char_traits<char>::length(hit->utf8);
  }
  out.offset.push_back(s.size());
  return out;
}

// ---- Lexer -----------------------------------------------------------------

enum class Tok { Ident, Number, LParen, RParen, LBrace, RBrace, LBrack, RBrack, Comma, Caret, Slash, Minus, Sep, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::vector<Token> lex(const std::string& s, const std::vector<std::size_t>& offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto single = [&](Tok k) {
    out.push_back({k, std::string(1, s[i]), i});
    ++i;
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      if (c == 'x' || c == 'X') {
        single(Tok::Sep);
        continue;
      }
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      std::string word = s.substr(i, j - i);
      const std::string low = lower(word);
      if ((low == "su" || low == "so") && j < s.size() && s[j] == '*') word += s[j++];
      out.push_back({Tok::Ident, word, i});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Number, s.substr(i, j - i), i});
      i = j;
    } else {
      switch (c) {
        case '(': single(Tok::LParen); break;
        case ')': single(Tok::RParen); break;
        case '{': single(Tok::LBrace); break;
        case '}': single(Tok::RBrace); break;
        case '[': single(Tok::LBrack); break;
        case ']': single(Tok::RBrack); break;
        case ',': single(Tok::Comma); break;
        case '^': single(Tok::Caret); break;
        case '/': single(Tok::Slash); break;
        case '-': single(Tok::Minus); break;
        case '*':
        case '+': single(Tok::Sep); break;
        default:
          throw ParseError(std::string("unexpected character '") + c + "'", offset[i]);
      }
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

// ---- Atom normalization ----------------------------------------------------

struct Builder {
  ReductiveAlgebra alg;
  bool low_rank = false;
  bool group_data = false;
  std::vector<std::string> notes;

  void low(const std::string& note) {
    low_rank = true;
    notes.push_back(note);
  }
  void add(const RealFormSpec& spec) {
    spec.validate();
    alg.simple_factors.push_back(spec);
  }

  // Non-canonical types are rewritten through their isomorphisms.
  void add_typed(LieType t, bool complex) {
    auto put = [&](LieType u) {
      add(complex ? RealFormSpec::complex(u) : RealFormSpec::compact(u));
    };
    const std::string kind = complex ? " (complex)" : " (compact)";
    switch (t.letter()) {
      case 'B':
        if (t.rank() == 1) {
          low("B1 -> A1" + kind);
          return put(LieType('A', 1));
        }
        break;
      case 'C':
        if (t.rank() == 1) {
          low("C1 -> A1" + kind);
          return put(LieType('A', 1));
        }
        if (t.rank() == 2) {
          low("C2 -> B2" + kind);
          return put(LieType('B', 2));
        }
        break;
      case 'D':
        if (t.rank() == 2) {
          low("D2 -> A1+A1" + kind);
          put(LieType('A', 1));
          return put(LieType('A', 1));
        }
        if (t.rank() == 3) {
          low("D3 -> A3" + kind);
          return put(LieType('A', 3));
        }
        break;
      default:
        break;
    }
    put(t);
  }

  void zero(const std::string& what) { low(what + " is zero"); }

  void sl(long n, char field) {
    if (n < 1) throw DomainError("sl(n) requires n >= 1");
    if (field == 'R') {
      if (n == 1) return zero("sl(1,R)");
      return add(RealFormSpec::sl_R(static_cast<int>(n)));
    }
    if (field == 'C') {
      if (n == 1) return zero("sl(1,C)");
      return add_typed(LieType('A', static_cast<int>(n - 1)), true);
    }
    if (n == 1) {
      low("sl(1,H) -> su(2)");
      return add_typed(LieType('A', 1), false);
    }
    add(RealFormSpec::su_star(static_cast<int>(2 * n)));
  }

  void su(long n) {
    if (n < 1) throw DomainError("su(n) requires n >= 1");
    if (n == 1) return zero("su(1)");
    add_typed(LieType('A', static_cast<int>(n - 1)), false);
  }

  void su(long p, long q) {
    if (p == 0 || q == 0) return su(p + q);
    add(RealFormSpec::su_pq(static_cast<int>(p), static_cast<int>(q)));
  }

  void su_star(long m) {
    if (m < 2 || m % 2) throw DomainError("su*(m) requires even m >= 2");
    if (m == 2) {
      low("su*(2) -> su(2)");
      return add_typed(LieType('A', 1), false);
    }
    add(RealFormSpec::su_star(static_cast<int>(m)));
  }

  void so(long n) {
    if (n <= 1) return zero("so(" + std::to_string(n) + ")");
    if (n == 2) {
      low("so(2) -> T^1");
      alg.compact_center_dim += 1;
      return;
    }
    const int r = static_cast<int>(n / 2);
    add_typed(n % 2 ? LieType('B', r) : LieType('D', r), false);
  }

  void so(long p, long q) {
    if (p == 0 || q == 0) return so(p + q);
    const long lo = std::min(p, q), hi = std::max(p, q);
    if (lo == 1 && hi == 1) {
      low("so(1,1) -> R^1");
      alg.split_center_dim += 1;
      return;
    }
    if (lo == 2 && hi == 2) {
      low("so(2,2) -> sl(2,R) x sl(2,R)");
      add(RealFormSpec::sl_R(2));
      return add(RealFormSpec::sl_R(2));
    }
    if (lo == 1 && hi == 3) {
      low("so(3,1) -> sl(2,C)");
      return add(RealFormSpec::complex(LieType('A', 1)));
    }
    add(RealFormSpec::so_pq(static_cast<int>(p), static_cast<int>(q)));
  }

  void so_complex(long n) {
    if (n <= 1) return zero("so(" + std::to_string(n) + ",C)");
    if (n == 2) {
      low("so(2,C) -> T^1 x R^1");
      alg.compact_center_dim += 1;
      alg.split_center_dim += 1;
      return;
    }
    const int r = static_cast<int>(n / 2);
    add_typed(n % 2 ? LieType('B', r) : LieType('D', r), true);
  }

  void so_star(long m) {
    if (m % 2) throw DomainError("so*(m) requires even m");
    if (m == 0) return zero("so*(0)");
    if (m == 2) {
      low("so*(2) -> T^1");
      alg.compact_center_dim += 1;
      return;
    }
    if (m == 4) {
      low("so*(4) -> su(2) x sl(2,R)");
      add_typed(LieType('A', 1), false);
      return add(RealFormSpec::sl_R(2));
    }
    add(RealFormSpec::so_star(static_cast<int>(m)));
  }

  void sp(long n) {
    if (n == 0) return zero("sp(0)");
    add_typed(LieType('C', static_cast<int>(n)), false);
  }

  void sp(long n, char field) {
    if (n == 0) return zero(std::string("sp(0,") + field + ")");
    if (field == 'C') return add_typed(LieType('C', static_cast<int>(n)), true);
    if (n == 1) {
      low("sp(1,R) -> sl(2,R)");
      return add(RealFormSpec::sl_R(2));
    }
    add(RealFormSpec::sp_R(static_cast<int>(n)));
  }

  void sp(long p, long q) {
    if (p == 0 || q == 0) return sp(p + q);
    add(RealFormSpec::sp_pq(static_cast<int>(p), static_cast<int>(q)));
  }
};

// ---- Exceptional names -----------------------------------------------------

struct ExceptionalName {
  const char* base;
  const char* form;  // roman numeral, "split" or Cartan index
  std::optional<Family> family;  // nullopt = compact
};

constexpr ExceptionalName kExceptional[] = {
    {"e6", "i", Family::E6I},         {"e6", "split", Family::E6I},   {"e6", "6", Family::E6I},
    {"e6", "ii", Family::E6II},       {"e6", "2", Family::E6II},      {"e6", "iii", Family::E6III},
    {"e6", "-14", Family::E6III},     {"e6", "iv", Family::E6IV},     {"e6", "-26", Family::E6IV},
    {"e6", "-78", std::nullopt},      {"e7", "v", Family::E7V},       {"e7", "split", Family::E7V},
    {"e7", "7", Family::E7V},         {"e7", "vi", Family::E7VI},     {"e7", "-5", Family::E7VI},
    {"e7", "vii", Family::E7VII},     {"e7", "-25", Family::E7VII},   {"e7", "-133", std::nullopt},
    {"e8", "viii", Family::E8VIII},   {"e8", "split", Family::E8VIII}, {"e8", "8", Family::E8VIII},
    {"e8", "ix", Family::E8IX},       {"e8", "-24", Family::E8IX},    {"e8", "-248", std::nullopt},
    {"f4", "i", Family::F4I},         {"f4", "split", Family::F4I},   {"f4", "4", Family::F4I},
    {"f4", "ii", Family::F4II},       {"f4", "-20", Family::F4II},    {"f4", "-52", std::nullopt},
    {"g2", "split", Family::G2Split}, {"g2", "2", Family::G2Split},   {"g2", "-14", std::nullopt},
};

LieType exceptional_base(const std::string& name) {
  return LieType(static_cast<char>(std::toupper(static_cast<unsigned char>(name[0]))), name[1] - '0');
}

// ---- Parser ----------------------------------------------------------------

struct Arg {
  bool numeric;
  long value;
  std::string text;  // lower-cased identifier, or the signed number
  std::size_t pos;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, const std::vector<std::size_t>& offset)
      : toks_(std::move(tokens)), offset_(offset) {}

  Builder run() {
    if (peek().kind == Tok::End) fail("empty expression", peek());
    product();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'", peek());
    return std::move(b_);
  }

 private:
  std::vector<Token> toks_;
  const std::vector<std::size_t>& offset_;
  std::size_t at_ = 0;
  Builder b_;

  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(at_ + ahead, toks_.size() - 1)];
  }
  const Token& next() { return toks_[std::min(at_++, toks_.size() - 1)]; }

  [[noreturn]] void fail(const std::string& what, const Token& t) const {
    throw ParseError(what, offset_[t.pos]);
  }

  const Token& expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) fail("expected " + what, peek());
    return next();
  }

  void product() {
    factor();
    while (peek().kind == Tok::Sep) {
      next();
      factor();
    }
  }

  void factor() {
    primary();
    while (peek().kind == Tok::Slash) {
      next();
      quotient();
      b_.group_data = true;
    }
  }

  void skip_braced() {
    const Token& open = expect(Tok::LBrace, "'{'");
    int depth = 1;
    while (depth > 0) {
      const Token& t = next();
      if (t.kind == Tok::End) fail("unbalanced '{'", open);
      if (t.kind == Tok::LBrace) ++depth;
      if (t.kind == Tok::RBrace) --depth;
    }
  }

  void quotient() {
    if (peek().kind == Tok::LBrace) return skip_braced();
    const Token& t = peek();
    if (t.kind != Tok::Ident || std::tolower(static_cast<unsigned char>(t.text[0])) != 'z')
      fail("expected a discrete group after '/'", t);
    next();
    if (peek().kind == Tok::Number) next();
    if (peek().kind == Tok::LBrace) skip_braced();
  }

  void primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::LBrace:
        next();
        product();
        expect(Tok::RBrace, "'}'");
        return;
      case Tok::LBrack:
        next();
        product();
        expect(Tok::RBrack, "']'");
        return;
      case Tok::Number:
        if (t.text != "0") fail("unexpected number", t);
        next();
        return;
      case Tok::Ident:
        return atom();
      default:
        fail(t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'", t);
    }
  }

  std::vector<Arg> args() {
    std::vector<Arg> out;
    expect(Tok::LParen, "'('");
    do {
      const std::size_t pos = peek().pos;
      bool negative = false;
      if (peek().kind == Tok::Minus) {
        next();
        negative = true;
      }
      const Token& t = next();
      if (t.kind == Tok::Number) {
        if (t.text.size() > 6) fail("number too large", t);
        const long v = std::stol(t.text);
        out.push_back({true, negative ? -v : v, (negative ? "-" : "") + t.text, pos});
      } else if (t.kind == Tok::Ident && !negative) {
        out.push_back({false, 0, lower(t.text), pos});
      } else {
        fail("malformed argument", t);
      }
    } while (peek().kind == Tok::Comma && (next(), true));
    expect(Tok::RParen, "')'");
    return out;
  }

  // Runs `body`, reporting domain errors at the atom.
  template <class F>
  void guarded(const Token& at, F body) {
    try {
      body();
    } catch (const DomainError& e) {
      fail(e.what(), at);
    }
  }

  static bool all_numeric(const std::vector<Arg>& a, std::size_t count) {
    if (a.size() != count) return false;
    return std::all_of(a.begin(), a.end(), [](const Arg& x) { return x.numeric && x.value >= 0; });
  }

  static std::optional<char> field(const Arg& a) {
    if (a.numeric) return std::nullopt;
    if (a.text == "r" || a.text == "c" || a.text == "h")
      return static_cast<char>(std::toupper(static_cast<unsigned char>(a.text[0])));
    return std::nullopt;
  }

  void atom() {
    const Token& head = next();
    std::string name = lower(head.text);
    name.erase(std::remove(name.begin(), name.end(), '_'), name.end());

    if (name == "gl" || name == "pgl") fail("gl(n) is not semisimple; write sl(n,R) x R^1", head);
    if (name == "spin") {
      name = "so";
      b_.group_data = true;
    } else if (name == "o") {
      name = "so";
      b_.group_data = true;
    } else if (name.size() > 1 && name[0] == 'p' &&
               (name == "psl" || name == "psu" || name == "pso" || name == "psp" ||
                name == "psu*" || name == "pso*" || name == "pu")) {
      name.erase(0, 1);
      b_.group_data = true;
    }

    if (name == "t" || name == "r") return abelian(name, head);
    if ((name[0] == 't' || name[0] == 'r') && name.size() > 1 &&
        std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      const int k = std::stoi(name.substr(1));
      (name[0] == 't' ? b_.alg.compact_center_dim : b_.alg.split_center_dim) += k;
      return;
    }
    if (name == "s") return s_of_u(head);
    if (name == "e6" || name == "e7" || name == "e8" || name == "f4" || name == "g2")
      return exceptional(name, head);
    if (name.size() >= 2 && name[0] >= 'a' && name[0] <= 'd' &&
        std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      return typed_complex(name, head);
    if (name == "sl" || name == "su" || name == "su*" || name == "so" || name == "so*" ||
        name == "sp" || name == "u")
      return classical(name, head);
    fail("unknown algebra '" + head.text + "'", head);
  }

  void abelian(const std::string& name, const Token& head) {
    int k = 1;
    if (peek().kind == Tok::Caret) {
      next();
      const Token& n = expect(Tok::Number, "an exponent");
      if (n.text.size() > 6) fail("number too large", n);
      k = std::stoi(n.text);
    }
    (void)head;
    (name == "t" ? b_.alg.compact_center_dim : b_.alg.split_center_dim) += k;
  }

  void s_of_u(const Token& head) {
    expect(Tok::LParen, "'(' after S");
    int count = 0;
    do {
      const Token& u = expect(Tok::Ident, "U(..) inside S(..)");
      if (lower(u.text) != "u") fail("expected U(..) inside S(..)", u);
      unitary(args(), u, false);
      ++count;
    } while (peek().kind == Tok::Sep && (next(), true));
    expect(Tok::RParen, "')'");
    if (count < 2) fail("S(..) needs at least two U factors", head);
    b_.alg.compact_center_dim += count - 1;
  }

  void unitary(const std::vector<Arg>& a, const Token& at, bool with_center) {
    guarded(at, [&] {
      if (all_numeric(a, 1)) {
        if (a[0].value == 0) throw DomainError("u(0) is not allowed");
        b_.su(a[0].value);
      } else if (all_numeric(a, 2)) {
        if (a[0].value + a[1].value == 0) throw DomainError("u(0,0) is not allowed");
        b_.su(a[0].value, a[1].value);
      } else {
        throw DomainError("u takes (n) or (p,q)");
      }
    });
    if (with_center) b_.alg.compact_center_dim += 1;
  }

  void exceptional(const std::string& name, const Token& head) {
    std::optional<std::string> form;
    std::size_t form_pos = head.pos;
    if (peek().kind == Tok::Caret) {
      next();
      const bool braced = peek().kind == Tok::LBrace;
      if (braced) next();
      const Token& t = peek();
      if (t.kind != Tok::Ident && t.kind != Tok::Number) fail("expected a real-form label", t);
      next();
      form = lower(t.text);
      form_pos = t.pos;
      if (braced) expect(Tok::RBrace, "'}'");
    }
    if (peek().kind == Tok::LParen) {
      const auto a = args();
      if (a.size() != 1 || form) fail("malformed exceptional form", head);
      form = a[0].text;
      form_pos = a[0].pos;
    }
    const LieType t = exceptional_base(name);
    if (!form || form == "compact") return b_.add(RealFormSpec::compact(t));
    if (form == "c") return b_.add(RealFormSpec::complex(t));
    for (const auto& e : kExceptional) {
      if (name == e.base && *form == e.form) {
        if (!e.family) return b_.add(RealFormSpec::compact(t));
        return b_.add(RealFormSpec::exceptional(*e.family));
      }
    }
    throw ParseError("unknown real form '" + *form + "' of " + name, offset_[form_pos]);
  }

  void typed_complex(const std::string& name, const Token& head) {
    const auto a = args();
    if (a.size() != 1 || a[0].numeric || a[0].text != "c")
      fail("a bare type name needs (C)", head);
    guarded(head, [&] { b_.add_typed(parse_lie_type(name), true); });
  }

  void classical(const std::string& name, const Token& head) {
    const auto a = args();
    for (const auto& x : a)
      if (x.numeric && x.value < 0) throw ParseError("negative parameter", offset_[x.pos]);
    guarded(head, [&] {
      if (name == "u") return unitary(a, head, true);
      if (name == "sl") {
        if (a.size() == 2 && a[0].numeric && field(a[1])) return b_.sl(a[0].value, *field(a[1]));
        throw DomainError("sl takes (n,R), (n,C) or (n,H)");
      }
      if (name == "su") {
        if (all_numeric(a, 1)) return b_.su(a[0].value);
        if (all_numeric(a, 2)) {
          if (a[0].value + a[1].value == 0) throw DomainError("su(0,0) is not allowed");
          return b_.su(a[0].value, a[1].value);
        }
        throw DomainError("su takes (n) or (p,q)");
      }
      if (name == "su*") {
        if (all_numeric(a, 1)) return b_.su_star(a[0].value);
        throw DomainError("su* takes (2n)");
      }
      if (name == "so*") {
        if (all_numeric(a, 1)) return b_.so_star(a[0].value);
        throw DomainError("so* takes (2n)");
      }
      if (name == "so") {
        if (all_numeric(a, 1)) return b_.so(a[0].value);
        if (all_numeric(a, 2)) return b_.so(a[0].value, a[1].value);
        if (a.size() == 2 && a[0].numeric && field(a[1]) == 'C') return b_.so_complex(a[0].value);
        throw DomainError("so takes (n), (p,q) or (n,C)");
      }
      // sp
      if (all_numeric(a, 1)) return b_.sp(a[0].value);
      if (all_numeric(a, 2)) return b_.sp(a[0].value, a[1].value);
      if (a.size() == 2 && a[0].numeric && (field(a[1]) == 'R' || field(a[1]) == 'C'))
        return b_.sp(a[0].value, *field(a[1]));
      throw DomainError("sp takes (n), (n,R), (n,C) or (p,q)");
    });
  }
};

// ---- Rendering -------------------------------------------------------------

std::string params_str(const std::vector<int>& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + std::to_string(p[i]);
  return out;
}

std::string typed_name(const LieType& t, bool complex) {
  const int n = t.rank();
  const std::string c = complex ? ",C)" : ")";
  switch (t.letter()) {
    case 'A':
      return (complex ? "sl(" : "su(") + std::to_string(n + 1) + c;
    case 'B':
      return "so(" + std::to_string(2 * n + 1) + c;
    case 'C':
      return "sp(" + std::to_string(n) + c;
    case 'D':
      return "so(" + std::to_string(2 * n) + c;
    default: {
      std::string s = lower(t.name());
      return complex ? s + "(C)" : s;
    }
  }
}

std::string exceptional_form(Family f) {
  const std::string label = family_label(f);  // "e6_IV"
  const std::string base = label.substr(0, 2);
  const std::string form = label.substr(3);
  return base + "(" + form + ")";
}

}  // namespace

AlgebraExpression parse_expression(const std::string& source) {
  const Folded f = fold(source);
  Parser parser(lex(f.text, f.offset), f.offset);
  Builder b = parser.run();
  b.alg.canonicalize();
  AlgebraExpression out{source, std::move(b.alg), b.group_data, b.low_rank, std::move(b.notes)};
  if (out.group_data_discarded) out.notes.push_back("group-level data (quotients, covers) dropped");
  return out;
}

ReductiveAlgebra parse(const std::string& source) { return parse_expression(source).normalized; }

std::string render(const RealFormSpec& s) {
  const std::string p = params_str(s.params);
  switch (s.family) {
    case Family::SlR:
      return "sl(" + p + ",R)";
    case Family::SuStar:
      return "su*(" + p + ")";
    case Family::SuPQ:
      return "su(" + p + ")";
    case Family::SoPQ:
      return "so(" + p + ")";
    case Family::SpR:
      return "sp(" + p + ",R)";
    case Family::SpPQ:
      return "sp(" + p + ")";
    case Family::SoStar:
      return "so*(" + p + ")";
    case Family::Compact:
      return typed_name(*s.base, false);
    case Family::Complex:
      return typed_name(*s.base, true);
    default:
      return exceptional_form(s.family);
  }
}

std::string render(const ReductiveAlgebra& alg) {
  ReductiveAlgebra sorted = alg;
  sorted.canonicalize();
  std::vector<std::string> parts;
  for (const auto& f : sorted.simple_factors) parts.push_back(render(f));
  if (alg.compact_center_dim) parts.push_back("T^" + std::to_string(alg.compact_center_dim));
  if (alg.split_center_dim) parts.push_back("R^" + std::to_string(alg.split_center_dim));
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " x " + parts[i];
  return out;
}

}  // namespace ahyp
