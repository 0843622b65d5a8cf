#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "flagcurv/scalar.hpp"

namespace flagcurv {

class Form;
class FrameSpace;
using FramePtr = std::shared_ptr<const FrameSpace>;

// A fixed coframe: ordered basis of 1-forms (<= 30, indexed by bitmask bits),
// structural d-rules for every basis form, declared differentials for fiber
// coordinates (all other symbols are constants, d = 0), and the active
// relation set. Immutable once built; Forms hold a shared pointer to it.
class FrameSpace {
 public:
  static constexpr int kMaxBasis = 30;

  int dimension() const { return static_cast<int>(basis_names_.size()); }
  const std::vector<std::string>& basis_names() const { return basis_names_; }
  int basis_index(const std::string& name) const;          // -1 when absent
  const std::string& basis_name(int index) const { return basis_names_[index]; }

  const Form& d_rule(int basis_index) const;
  bool is_fiber_coordinate(SymbolId v) const;
  const Form* coordinate_differential(SymbolId v) const;   // null for constants
  const std::map<SymbolId, Form>& coordinate_differentials() const;

  const RelationSet& relations() const { return relations_; }

 private:
  friend class FrameBuilder;
  FrameSpace() = default;
  std::vector<std::string> basis_names_;
  std::vector<Form> d_rules_;
  std::map<SymbolId, Form> coord_diffs_;
  RelationSet relations_;
};

// Two-phase construction: name the basis, then express d-rules as Forms on
// the frame under construction, then freeze.
class FrameBuilder {
 public:
  explicit FrameBuilder(std::vector<std::string> basis_names, RelationSet relations = {});

  FramePtr frame() const { return frame_; }
  Form basis(const std::string& name) const;

  void set_d_rule(const std::string& basis_name, Form rule);       // 2-form
  void set_coordinate_differential(SymbolId v, Form differential);  // 1-form
  // Freezes; every basis form without an explicit rule gets d = 0.
  FramePtr finalize();

 private:
  std::shared_ptr<FrameSpace> frame_;
  std::vector<bool> rule_set_;
  bool finalized_ = false;
};

}  // namespace flagcurv
