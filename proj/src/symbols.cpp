#include "flagcurv/symbols.hpp"

#include <mutex>

#include "flagcurv/errors.hpp"

namespace flagcurv {

SymbolTable& SymbolTable::instance() {
  static SymbolTable table;
  return table;
}

SymbolId SymbolTable::intern(const std::string& name) {
  {
    std::shared_lock lock(mutex_);
    auto it = ids_.find(name);
    if (it != ids_.end()) return it->second;
  }
  std::unique_lock lock(mutex_);
  auto it = ids_.find(name);
  if (it != ids_.end()) return it->second;
  SymbolId id = static_cast<SymbolId>(names_.size());
  names_.push_back(name);
  ids_.emplace(name, id);
  return id;
}

bool SymbolTable::lookup(const std::string& name, SymbolId* out) const {
  std::shared_lock lock(mutex_);
  auto it = ids_.find(name);
  if (it == ids_.end()) return false;
  *out = it->second;
  return true;
}

std::string SymbolTable::name(SymbolId id) const {
  std::shared_lock lock(mutex_);
  if (id >= names_.size()) fail(ErrorKind::UnknownSymbol, "symbol id out of range");
  return names_[id];
}

std::size_t SymbolTable::size() const {
  std::shared_lock lock(mutex_);
  return names_.size();
}

}  // namespace flagcurv
