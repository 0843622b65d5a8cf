#pragma once

#include <optional>

#include "flagcurv/parser.hpp"
#include "flagcurv/reduction.hpp"

namespace flagcurv {

struct PseudoFlagNames {
  std::string theta, z1, z2, fiber;
  SymbolId scale;
};

// A fully evaluated input: the frame with its relations and differentials,
// plus whichever optional blocks the document declared. The pseudo-flag
// structure itself is constructed on demand so that `check` can report an
// unusable frame instead of refusing the input.
struct BuiltDocument {
  InputDocument input;
  NameScope scope;
  FramePtr frame;
  std::optional<PseudoFlagNames> pseudoflag_names;
  std::optional<ConjugationSpec> conjugation;
  std::optional<BorelElement> gauge;
};

BuiltDocument build_document(const InputDocument& input);
BuiltDocument build_document_from_text(const std::string& text);

// Validates and builds the declared pseudo-flag structure.
PseudoFlagStructure make_pseudoflag(const BuiltDocument& doc);

}  // namespace flagcurv
