#pragma once

#include <string>
#include <vector>

#include "nilbc/catalog.hpp"
#include "nilbc/cohomology.hpp"

namespace nilbc::cli {

enum class Format { Markdown, Csv, Json };

/// "md", "csv", "json"; ValidationError otherwise.
Format parse_format(const std::string& tag);

/// A computed table with the inputs it came from.
struct TableDocument {
  std::string structure;  // canonical structure text
  std::string binding;    // canonical binding text, possibly empty
  CohomologyTable table;
  bool skt = false;       // pluriclosed for the standard metric

  friend bool operator==(const TableDocument&, const TableDocument&) = default;
};

/// Column headers of a golden row: "SKT", "h^{1,0}_BC", ..., "b_1", ..., "Delta^1", ...
std::vector<std::string> golden_headers(int n);

std::string to_markdown(const TableDocument& doc);
/// Long format: quantity,p,q,value. Betti and Delta rows use p = k and leave q empty.
std::string to_csv(const TableDocument& doc);
std::string to_json(const TableDocument& doc);
/// Inverse of to_json; to_json(from_json(s)) == s for every s produced by to_json.
TableDocument from_json(const std::string& text);

std::string render(const TableDocument& doc, Format f);

/// Catalog listing; `golden` adds the pass/fail column and diff lines.
std::string render_catalog(const std::vector<const CatalogCase*>& cases,
                           const std::vector<Evaluation>& results, bool golden, Format f);

/// The caveat printed whenever the h7 case is shown.
extern const char* const kH7Footnote;

}  // namespace nilbc::cli
