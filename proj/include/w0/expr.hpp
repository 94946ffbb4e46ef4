#pragma once

// Small integer expression language used by the embedded data files:
// parameter constraints ("2*p <= n"), node ranges ("r+1-p") and root
// templates ("e[2*i-1]-e[2*i]", "a[p+1]").

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace w0 {

using Bindings = std::map<std::string, std::int64_t>;

/// Evaluate an integer expression. Supports + - * / % (floor semantics),
/// comparisons, && || !, parentheses, min(a,b) and max(a,b). Booleans are 0/1.
std::int64_t eval_int(std::string_view expr, const Bindings& vars);
bool eval_bool(std::string_view expr, const Bindings& vars);

struct SymbolTerm {
  std::string symbol;   // e.g. "e" or "a"
  std::int64_t index;   // 1-based
  std::int64_t coef;
};

/// Evaluate a linear template such as "2*e[2*i]" or "e[i]-e[r+2-i]".
std::vector<SymbolTerm> eval_linear(std::string_view expr, const Bindings& vars);

}  // namespace w0
