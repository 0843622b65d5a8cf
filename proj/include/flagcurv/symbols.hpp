#pragma once

#include <cstdint>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace flagcurv {

using SymbolId = std::uint32_t;

// Process-wide interning table. Append-only; synchronized so immutable values
// built on top of it can be shared across threads. Registration order fixes
// the variable order used by the graded-lex monomial order, so identical
// inputs produce identical internal representations and output bytes.
class SymbolTable {
 public:
  static SymbolTable& instance();

  SymbolId intern(const std::string& name);
  bool lookup(const std::string& name, SymbolId* out) const;
  std::string name(SymbolId id) const;
  std::size_t size() const;

 private:
  SymbolTable() = default;
  mutable std::shared_mutex mutex_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, SymbolId> ids_;
};

inline SymbolId sym(const std::string& name) { return SymbolTable::instance().intern(name); }
inline std::string sym_name(SymbolId id) { return SymbolTable::instance().name(id); }

}  // namespace flagcurv
