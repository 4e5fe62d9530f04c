#include "nilbc_cli/definition.hpp"

#include <fstream>
#include <sstream>

#include "nilbc/error.hpp"

namespace nilbc::cli {

Definition parse_definition(const std::string& text) {
  Definition def;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto colon = line.find(':', first);
    if (colon == std::string::npos) {
      throw ParseError("expected 'key: value'", lineno, first + 1);
    }
    std::string key = line.substr(first, colon - first);
    while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();

    std::optional<SourceText>* slot = nullptr;
    if (key == "algebra") slot = &def.algebra;
    else if (key == "structure") slot = &def.structure;
    else if (key == "binding") slot = &def.binding;
    else throw ParseError("unknown key '" + key + "'", lineno, first + 1);
    if (slot->has_value()) throw ParseError("repeated key '" + key + "'", lineno, first + 1);

    auto start = line.find_first_not_of(" \t", colon + 1);
    if (start == std::string::npos) start = line.size();
    *slot = SourceText(line.substr(start), static_cast<int>(lineno), static_cast<int>(start + 1));
  }
  return def;
}

Definition load_definition(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_definition(ss.str());
}

}  // namespace nilbc::cli
