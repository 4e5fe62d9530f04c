#pragma once

#include <optional>
#include <string>

#include "nilbc/model.hpp"

namespace nilbc {

/// Text plus the position of its first character in the enclosing document,
/// so errors inside a definition file report file coordinates.
struct SourceText {
  std::string text;
  int line = 1;
  int column = 1;

  SourceText(std::string t, int l = 1, int c = 1) : text(std::move(t)), line(l), column(c) {}  // NOLINT
  SourceText(const char* t) : text(t) {}  // NOLINT
};

/// "(0^4,13+42,14+23)". Terms may carry a rational factor ("2*12", "1/2*34").
/// When expected_dim is set, a different entry count is an error.
RealAlgebra parse_real_algebra(const SourceText& src,
                               std::optional<int> expected_dim = std::nullopt);

/// "(0,0,w12+w1~1+D*w2~2)". Only (2,0) and (1,1) terms are accepted.
ComplexStructureTemplate parse_complex_structure(const SourceText& src);

/// "D=1/2+i; absBm1=1". Keys starting with "abs" are moduli. Empty text is the empty binding.
ParameterBinding parse_binding(const SourceText& src);

/// Gaussian literal of the structure-equation grammar, with an optional leading sign.
Gaussian parse_gaussian(const SourceText& src);

/// Canonical text. Never abbreviates with 0^k; each real index pair is oriented
/// so that its coefficient is positive.
std::string render(const RealAlgebra& a);
std::string render(const ComplexStructureTemplate& t);
std::string render(const ParameterBinding& b);

/// Parses and instantiates in one step.
ComplexStructure parse_structure(const SourceText& src, const ParameterBinding& b = {});

}  // namespace nilbc
