#include "lieinv/symbol.hpp"

#include "lieinv/error.hpp"

#include <deque>
#include <mutex>
#include <unordered_map>

namespace lieinv {

namespace {

struct Registry {
  std::mutex mutex;
  std::deque<SymbolData> storage;
  std::unordered_map<std::string, const SymbolData*> by_key;

  const SymbolData* intern(SymbolData data) {
    std::string key = std::to_string(static_cast<int>(data.kind)) + ":" + data.name;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = by_key.find(key);
    if (it != by_key.end()) {
      const SymbolData* existing = it->second;
      if (existing->dependent != data.dependent || existing->index != data.index)
        throw Error("expr", "symbol '" + data.name + "' redeclared with a different jet index");
      return existing;
    }
    storage.push_back(std::move(data));
    const SymbolData* ptr = &storage.back();
    by_key.emplace(std::move(key), ptr);
    return ptr;
  }
};

Registry& registry() {
  static Registry r;
  return r;
}

int rank(SymbolKind k) {
  switch (k) {
    case SymbolKind::Coordinate: return 0;
    case SymbolKind::Parameter: return 1;
    case SymbolKind::Jet: return 2;
  }
  return 3;
}

}  // namespace

Symbol Symbol::coordinate(const std::string& name) {
  return Symbol(registry().intern({name, SymbolKind::Coordinate, {}, {}}));
}

Symbol Symbol::parameter(const std::string& name) {
  return Symbol(registry().intern({name, SymbolKind::Parameter, {}, {}}));
}

Symbol Symbol::jet(const std::string& name, const std::string& dependent,
                   std::vector<std::string> index) {
  return Symbol(registry().intern({name, SymbolKind::Jet, dependent, std::move(index)}));
}

int compare(Symbol a, Symbol b) {
  if (a == b) return 0;
  const int ra = rank(a.kind()), rb = rank(b.kind());
  if (ra != rb) return ra < rb ? -1 : 1;
  if (a.kind() == SymbolKind::Jet) {
    if (int c = a.dependent().compare(b.dependent()); c != 0) return c < 0 ? -1 : 1;
    if (a.order() != b.order()) return a.order() < b.order() ? -1 : 1;
    if (a.index() != b.index()) return a.index() < b.index() ? -1 : 1;
  }
  const int c = a.name().compare(b.name());
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

}  // namespace lieinv
