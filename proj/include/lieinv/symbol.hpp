#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace lieinv {

enum class SymbolKind : std::uint8_t { Coordinate, Parameter, Jet };

struct SymbolData {
  std::string name;
  SymbolKind kind;
  std::string dependent;           // jet variables only
  std::vector<std::string> index;  // jet variables only: coordinate names, length 0-2
};

/// Interned, immutable symbol handle. Two handles are equal iff they refer to
/// the same (kind, name) pair. Jet variables of order 0 denote the dependent
/// variable itself.
class Symbol {
 public:
  Symbol() = default;

  static Symbol coordinate(const std::string& name);
  static Symbol parameter(const std::string& name);
  static Symbol jet(const std::string& name, const std::string& dependent,
                    std::vector<std::string> index);

  const std::string& name() const { return data_->name; }
  SymbolKind kind() const { return data_->kind; }
  const std::string& dependent() const { return data_->dependent; }
  const std::vector<std::string>& index() const { return data_->index; }
  int order() const { return static_cast<int>(data_->index.size()); }
  bool is_jet() const { return data_->kind == SymbolKind::Jet; }
  bool valid() const { return data_ != nullptr; }
  const SymbolData* get() const { return data_; }

  friend bool operator==(Symbol a, Symbol b) { return a.data_ == b.data_; }
  friend bool operator!=(Symbol a, Symbol b) { return a.data_ != b.data_; }

 private:
  explicit Symbol(const SymbolData* d) : data_(d) {}
  const SymbolData* data_ = nullptr;
};

/// Total order: coordinates (by name) < parameters (by name) < jet variables
/// (by dependent, order, index names).
int compare(Symbol a, Symbol b);

struct SymbolLess {
  bool operator()(Symbol a, Symbol b) const { return compare(a, b) < 0; }
};

}  // namespace lieinv

template <>
struct std::hash<lieinv::Symbol> {
  std::size_t operator()(lieinv::Symbol s) const noexcept {
    return std::hash<const void*>()(s.get());
  }
};
