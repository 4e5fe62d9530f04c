#pragma once

#include <optional>
#include <string>

#include "nilbc/model.hpp"
#include "nilbc/parser.hpp"

namespace nilbc::cli {

/// A definition file:
///
///   # Iwasawa manifold
///   algebra:   (0,0,0,0,13+42,14+23)
///   structure: (0,0,w12)
///   binding:   D=i
///
/// Every key is optional; values keep their file position so parse errors
/// point into the file.
struct Definition {
  std::optional<SourceText> algebra;
  std::optional<SourceText> structure;
  std::optional<SourceText> binding;
};

Definition parse_definition(const std::string& text);
Definition load_definition(const std::string& path);

}  // namespace nilbc::cli
