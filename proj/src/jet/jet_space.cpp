#include "lieinv/error.hpp"
#include "lieinv/jet.hpp"
#include "lieinv/parse.hpp"

#include <algorithm>

namespace lieinv {

JetSpace::JetSpace(std::vector<std::string> base, std::string dependent,
                   std::vector<std::string> invariant, std::vector<std::string> parameters)
    : base_count_(base.size()) {
  std::vector<std::string> names = base;
  names.insert(names.end(), invariant.begin(), invariant.end());
  for (const auto& n : names) {
    if (n.empty() || n == dependent) throw Error("jet", "invalid coordinate name '" + n + "'");
    if (std::count(names.begin(), names.end(), n) > 1)
      throw Error("jet", "duplicate coordinate name '" + n + "'");
    independents_.push_back(Symbol::coordinate(n));
    by_name_.emplace(n, independents_.back());
  }
  dependent_ = Symbol::jet(dependent, dependent, {});
  by_name_.emplace(dependent, dependent_);
  for (const auto& n : names) {
    first_.push_back(Symbol::jet(dependent + "_" + n, dependent, {n}));
    by_name_.emplace(first_.back().name(), first_.back());
  }
  const std::size_t d = names.size();
  second_.assign(d, std::vector<Symbol>(d));
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a; b < d; ++b) {
      Symbol s = Symbol::jet(dependent + "_" + names[a] + names[b], dependent, {names[a], names[b]});
      second_[a][b] = second_[b][a] = s;
      if (!by_name_.emplace(s.name(), s).second)
        throw Error("jet", "ambiguous jet variable name '" + s.name() + "'");
    }
  }
  // Reversed index order is accepted on input (u_yx reads as u_xy) unless it
  // spells another variable's canonical name.
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) by_name_.emplace(dependent + "_" + names[b] + names[a], second_[a][b]);
  for (const auto& p : parameters) {
    parameters_.push_back(Symbol::parameter(p));
    if (!by_name_.emplace(p, parameters_.back()).second)
      throw Error("jet", "parameter '" + p + "' shadows a jet-space name");
  }
}

std::vector<Symbol> JetSpace::base() const {
  return {independents_.begin(), independents_.begin() + static_cast<std::ptrdiff_t>(base_count_)};
}

std::vector<Symbol> JetSpace::invariant() const {
  return {independents_.begin() + static_cast<std::ptrdiff_t>(base_count_), independents_.end()};
}

Symbol JetSpace::jet(std::size_t a) const { return first_.at(a); }
Symbol JetSpace::jet(std::size_t a, std::size_t b) const { return second_.at(a).at(b); }

std::vector<Symbol> JetSpace::first_order() const { return first_; }

std::vector<Symbol> JetSpace::second_order() const {
  std::vector<Symbol> out;
  for (std::size_t a = 0; a < dim(); ++a)
    for (std::size_t b = a; b < dim(); ++b) out.push_back(second_[a][b]);
  return out;
}

std::vector<Symbol> JetSpace::all_symbols() const {
  std::vector<Symbol> out = independents_;
  out.push_back(dependent_);
  out.insert(out.end(), first_.begin(), first_.end());
  for (Symbol s : second_order()) out.push_back(s);
  return out;
}

std::optional<std::size_t> JetSpace::position(Symbol coordinate) const {
  auto it = std::find(independents_.begin(), independents_.end(), coordinate);
  if (it == independents_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - independents_.begin());
}

std::optional<std::vector<std::size_t>> JetSpace::jet_index(Symbol s) const {
  if (s == dependent_) return std::vector<std::size_t>{};
  for (std::size_t a = 0; a < dim(); ++a) {
    if (first_[a] == s) return std::vector<std::size_t>{a};
    for (std::size_t b = a; b < dim(); ++b)
      if (second_[a][b] == s) return std::vector<std::size_t>{a, b};
  }
  return std::nullopt;
}

std::optional<Symbol> JetSpace::lookup(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

Expr JetSpace::parse(std::string_view text) const {
  ParseContext ctx;
  ctx.resolve = [this](const std::string& n) { return lookup(n); };
  ctx.dependents = {dependent_name()};
  return lieinv::parse(text, ctx);
}

bool JetSpace::same_as(const JetSpace& other) const {
  return independents_ == other.independents_ && dependent_ == other.dependent_;
}

}  // namespace lieinv
