#pragma once

// Integer parameters for family templates such as "SO(2n+1-2s-2t,2s+2t)".

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ahyp {

using Bindings = std::map<std::string, long>;

/// Integer expression with + - * parentheses and implicit products ("4k+2l").
/// Throws DomainError on syntax errors or unbound names.
long evaluate(const std::string& expr, const Bindings& env);
std::optional<long> try_evaluate(const std::string& expr, const Bindings& env);

/// Chained comparison, e.g. "1<=a<=n", "s+t==k+1", "r!=0".
bool holds(const std::string& constraint, const Bindings& env);

/// Replaces every arithmetic argument inside parentheses by its value and
/// leaves other arguments ("R", "IV", nested calls) in place.
std::string substitute(const std::string& tmpl, const Bindings& env);

/// "k=2,l=1" -> {k:2, l:1}. Throws DomainError.
Bindings parse_bindings(const std::string& text);

std::string bindings_str(const Bindings& env);  // "k=2,l=1"

/// Tuples over `names` satisfying every constraint: either the explicit
/// `tuples`, or each name ranging over 0..bound. Lexicographic order.
std::vector<Bindings> enumerate(const std::vector<std::string>& names,
                                const std::vector<std::string>& constraints,
                                const std::vector<std::vector<long>>& tuples, long bound);

}  // namespace ahyp
