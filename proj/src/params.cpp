#include "ahyp/params.hpp"

#include <cctype>

#include "ahyp/errors.hpp"

namespace ahyp {

namespace {

class Evaluator {
 public:
  Evaluator(const std::string& s, const Bindings& env) : s_(s), env_(env) {}

  long run() {
    const long v = sum();
    skip_space();
    if (i_ != s_.size()) throw DomainError("unexpected '" + s_.substr(i_) + "' in '" + s_ + "'");
    return v;
  }

 private:
  const std::string& s_;
  const Bindings& env_;
  std::size_t i_ = 0;

  void skip_space() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  char peek() {
    skip_space();
    return i_ < s_.size() ? s_[i_] : '\0';
  }

  long sum() {
    long v = product();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++i_;
      const long w = product();
      v = c == '+' ? v + w : v - w;
    }
    return v;
  }

  long product() {
    long v = unary();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++i_;
        v *= unary();
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '(') {
        v *= unary();  // implicit product: 2k, 2(k+1)
      } else {
        return v;
      }
    }
  }

  long unary() {
    if (peek() == '-') {
      ++i_;
      return -unary();
    }
    if (peek() == '+') {
      ++i_;
      return unary();
    }
    return atom();
  }

  long atom() {
    const char c = peek();
    if (c == '(') {
      ++i_;
      const long v = sum();
      if (peek() != ')') throw DomainError("missing ')' in '" + s_ + "'");
      ++i_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long v = 0;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
        v = v * 10 + (s_[i_++] - '0');
        if (v > 1'000'000'000L) throw DomainError("number too large in '" + s_ + "'");
      }
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) ++j;
      const auto it = env_.find(s_.substr(i_, j - i_));
      if (it != env_.end()) {
        i_ = j;
        return it->second;
      }
      throw DomainError("unbound name '" + s_.substr(i_, j - i_) + "' in '" + s_ + "'");
    }
    throw DomainError("malformed expression '" + s_ + "'");
  }
};

std::size_t matching_paren(const std::string& s, std::size_t open) {
  int depth = 0;
  for (std::size_t i = open; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')' && --depth == 0) return i;
  }
  throw DomainError("unbalanced '(' in '" + s + "'");
}

std::vector<std::string> split_top_level(const std::string& s) {
  std::vector<std::string> out(1);
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0)
      out.emplace_back();
    else
      out.back() += c;
  }
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

}  // namespace

long evaluate(const std::string& expr, const Bindings& env) { return Evaluator(expr, env).run(); }

std::optional<long> try_evaluate(const std::string& expr, const Bindings& env) {
  try {
    return evaluate(expr, env);
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

bool holds(const std::string& constraint, const Bindings& env) {
  static const char* const kOps[] = {"<=", ">=", "==", "!=", "<", ">"};
  std::vector<std::string> terms(1);
  std::vector<std::string> ops;
  for (std::size_t i = 0; i < constraint.size();) {
    const char* hit = nullptr;
    for (const char* op : kOps)
      if (constraint.compare(i, std::char_traits<char>::length(op), op) == 0) {
        hit = op;
        break;
      }
    if (hit) {
      ops.emplace_back(hit);
      terms.emplace_back();
      i += ops.back().size();
    } else {
      terms.back() += constraint[i++];
    }
  }
  if (ops.empty()) throw DomainError("constraint without comparison: '" + constraint + "'");
  for (std::size_t k = 0; k < ops.size(); ++k) {
    const long a = evaluate(terms[k], env), b = evaluate(terms[k + 1], env);
    const std::string& op = ops[k];
    const bool ok = op == "<=" ? a <= b
                  : op == ">=" ? a >= b
                  : op == "==" ? a == b
                  : op == "!=" ? a != b
                  : op == "<"  ? a < b
                               : a > b;
    if (!ok) return false;
  }
  return true;
}

std::string substitute(const std::string& tmpl, const Bindings& env) {
  std::string out;
  for (std::size_t i = 0; i < tmpl.size();) {
    if (tmpl[i] != '(') {
      out += tmpl[i++];
      continue;
    }
    const std::size_t close = matching_paren(tmpl, i);
    const auto args = split_top_level(tmpl.substr(i + 1, close - i - 1));
    out += '(';
    for (std::size_t k = 0; k < args.size(); ++k) {
      if (k) out += ',';
      const auto v = try_evaluate(args[k], env);
      out += v ? std::to_string(*v) : substitute(trim(args[k]), env);
    }
    out += ')';
    i = close + 1;
  }
  return out;
}

Bindings parse_bindings(const std::string& text) {
  Bindings env;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string item = trim(text.substr(start, comma - start));
    if (!item.empty()) {
      const std::size_t eq = item.find('=');
      if (eq == std::string::npos || eq == 0)
        throw DomainError("expected name=value, got '" + item + "'");
      const std::string name = trim(item.substr(0, eq));
      env[name] = evaluate(item.substr(eq + 1), env);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return env;
}

std::string bindings_str(const Bindings& env) {
  std::string out;
  for (const auto& [name, value] : env) out += (out.empty() ? "" : ",") + name + "=" + std::to_string(value);
  return out;
}

std::vector<Bindings> enumerate(const std::vector<std::string>& names,
                                const std::vector<std::string>& constraints,
                                const std::vector<std::vector<long>>& tuples, long bound) {
  std::vector<Bindings> out;
  auto accept = [&](const std::vector<long>& values) {
    Bindings env;
    for (std::size_t i = 0; i < names.size(); ++i) env[names[i]] = values[i];
    for (const auto& c : constraints)
      if (!holds(c, env)) return;
    out.push_back(std::move(env));
  };
  if (!tuples.empty()) {
    for (const auto& t : tuples) {
      if (t.size() != names.size()) throw DomainError("tuple arity does not match parameters");
      accept(t);
    }
    return out;
  }
  std::vector<long> values(names.size(), 0);
  for (;;) {
    accept(values);
    std::size_t k = names.size();
    while (k > 0 && values[k - 1] == bound) values[--k] = 0;
    if (k == 0) break;
    ++values[k - 1];
  }
  return out;
}

}  // namespace ahyp
