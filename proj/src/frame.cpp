#include "flagcurv/frame.hpp"

#include "flagcurv/errors.hpp"
#include "flagcurv/form.hpp"

namespace flagcurv {

int FrameSpace::basis_index(const std::string& name) const {
  for (std::size_t i = 0; i < basis_names_.size(); ++i)
    if (basis_names_[i] == name) return static_cast<int>(i);
  return -1;
}

const Form& FrameSpace::d_rule(int basis_index) const { return d_rules_[basis_index]; }

bool FrameSpace::is_fiber_coordinate(SymbolId v) const {
  return coord_diffs_.find(v) != coord_diffs_.end();
}

const Form* FrameSpace::coordinate_differential(SymbolId v) const {
  auto it = coord_diffs_.find(v);
  return it == coord_diffs_.end() ? nullptr : &it->second;
}

const std::map<SymbolId, Form>& FrameSpace::coordinate_differentials() const {
  return coord_diffs_;
}

FrameBuilder::FrameBuilder(std::vector<std::string> basis_names, RelationSet relations) {
  if (basis_names.size() > FrameSpace::kMaxBasis)
    fail(ErrorKind::NotSupported, "frame exceeds the 30 basis-form limit");
  for (std::size_t i = 0; i < basis_names.size(); ++i)
    for (std::size_t j = i + 1; j < basis_names.size(); ++j)
      if (basis_names[i] == basis_names[j])
        fail(ErrorKind::DuplicateDeclaration, "duplicate basis form '" + basis_names[i] + "'");
  frame_ = std::shared_ptr<FrameSpace>(new FrameSpace());
  frame_->basis_names_ = std::move(basis_names);
  frame_->relations_ = std::move(relations);
  frame_->d_rules_.assign(frame_->basis_names_.size(), Form());
  rule_set_.assign(frame_->basis_names_.size(), false);
}

Form FrameBuilder::basis(const std::string& name) const {
  return Form::basis(frame_, name);
}

void FrameBuilder::set_d_rule(const std::string& basis_name, Form rule) {
  if (finalized_) fail(ErrorKind::NotSupported, "frame already finalized");
  int idx = frame_->basis_index(basis_name);
  if (idx < 0) fail(ErrorKind::UndeclaredName, "unknown basis form '" + basis_name + "'");
  if (rule_set_[idx])
    fail(ErrorKind::DuplicateDeclaration, "d-rule for '" + basis_name + "' declared twice");
  if (!rule.empty() && rule.degree() != 2)
    fail(ErrorKind::DegreeMismatch, "d-rule for a basis 1-form must be a 2-form");
  if (!rule.empty() && rule.frame().get() != frame_.get())
    fail(ErrorKind::FrameMismatch, "d-rule expressed on a different frame");
  frame_->d_rules_[idx] = rule.empty() ? Form(frame_, 2) : std::move(rule);
  rule_set_[idx] = true;
}

void FrameBuilder::set_coordinate_differential(SymbolId v, Form differential) {
  if (finalized_) fail(ErrorKind::NotSupported, "frame already finalized");
  if (frame_->coord_diffs_.count(v))
    fail(ErrorKind::DuplicateDeclaration,
         "differential for coordinate '" + sym_name(v) + "' declared twice");
  if (!differential.empty() && differential.degree() != 1)
    fail(ErrorKind::DegreeMismatch, "a coordinate differential must be a 1-form");
  if (!differential.empty() && differential.frame().get() != frame_.get())
    fail(ErrorKind::FrameMismatch, "coordinate differential expressed on a different frame");
  frame_->coord_diffs_.emplace(v, differential.empty() ? Form(frame_, 1) : std::move(differential));
}

FramePtr FrameBuilder::finalize() {
  for (std::size_t i = 0; i < rule_set_.size(); ++i)
    if (!rule_set_[i]) frame_->d_rules_[i] = Form(frame_, 2);
  finalized_ = true;
  return frame_;
}

ConsistencyReport check_frame_consistency(const FramePtr& frame) {
  ConsistencyReport report;
  for (int i = 0; i < frame->dimension(); ++i) {
    Form dd = exterior_derivative(frame->d_rule(i));
    bool zero = dd.is_zero(frame->relations());
    report.entries.push_back({frame->basis_name(i), dd, zero});
    report.usable = report.usable && zero;
  }
  for (const auto& [v, rule] : frame->coordinate_differentials()) {
    Form dd = exterior_derivative(rule);
    bool zero = dd.is_zero(frame->relations());
    report.entries.push_back({sym_name(v), dd, zero});
    report.usable = report.usable && zero;
  }
  return report;
}

}  // namespace flagcurv
