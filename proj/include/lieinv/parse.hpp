#pragma once

#include "lieinv/expr.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lieinv {

/// Identifier resolution for the parser. JetSpace builds one of these; tests
/// may build one directly.
struct ParseContext {
  std::function<std::optional<Symbol>(const std::string&)> resolve;
  // Identifiers of the form "<dependent>_..." that fail to resolve are
  // reported as malformed jet indices rather than unknown names.
  std::vector<std::string> dependents;
  // When false, an unknown identifier followed by '(' is an error instead of
  // an opaque function head.
  bool allow_heads = true;
};

Expr parse(std::string_view text, const ParseContext& ctx);

}  // namespace lieinv
