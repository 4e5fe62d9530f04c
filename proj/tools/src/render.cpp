#include "nilbc_cli/render.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "nilbc/error.hpp"

namespace nilbc::cli {
namespace {

using json = nlohmann::ordered_json;

const char* const kGridNames[] = {"dolbeault", "del", "bott_chern", "aeppli", "a", "f"};
const char* const kGridTitles[] = {"Dolbeault h^{p,q}_dbar", "del-cohomology h^{p,q}_del",
                                   "Bott-Chern h^{p,q}_BC", "Aeppli h^{p,q}_A",
                                   "a^{p,q}", "f^{p,q}"};

std::vector<const Grid*> grids(const CohomologyTable& t) {
  return {&t.h_dolbeault, &t.h_del, &t.h_bc, &t.h_aeppli, &t.a, &t.f};
}
std::vector<Grid*> grids(CohomologyTable& t) {
  return {&t.h_dolbeault, &t.h_del, &t.h_bc, &t.h_aeppli, &t.a, &t.f};
}

std::string bc_header(int p, int q) {
  return "h^{" + std::to_string(p) + "," + std::to_string(q) + "}_BC";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void md_row(std::ostream& out, const std::vector<std::string>& cells) {
  out << "|";
  for (const auto& c : cells) out << " " << c << " |";
  out << "\n";
}

void md_rule(std::ostream& out, std::size_t count) {
  out << "|";
  for (std::size_t k = 0; k < count; ++k) out << "---|";
  out << "\n";
}

std::vector<std::string> golden_cells(const GoldenRow& g) {
  std::vector<std::string> cells{yes_no(g.skt)};
  for (int v : g.bc) cells.push_back(std::to_string(v));
  for (int v : g.betti) cells.push_back(std::to_string(v));
  for (int v : g.delta) cells.push_back(std::to_string(v));
  return cells;
}

Grid grid_from_json(const json& j, int n, const char* name) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(n + 1)) {
    throw ValidationError(std::string("grid '") + name + "' must have n+1 rows");
  }
  Grid g;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n + 1)) {
      throw ValidationError(std::string("grid '") + name + "' must have n+1 columns");
    }
    g.push_back(row.get<std::vector<int>>());
  }
  return g;
}

}  // namespace

const char* const kH7Footnote =
    "h7: left-invariance of the cohomology is not preserved under equivalence of complex "
    "structures; the numbers cover the rational complex structure on h7 nilmanifolds only.";

Format parse_format(const std::string& tag) {
  if (tag == "md") return Format::Markdown;
  if (tag == "csv") return Format::Csv;
  if (tag == "json") return Format::Json;
  throw ValidationError("unknown format '" + tag + "' (md, csv, json)");
}

std::vector<std::string> golden_headers(int n) {
  std::vector<std::string> h{"SKT"};
  for (const auto& [p, q] : bc_columns(n)) h.push_back(bc_header(p, q));
  for (int k = 1; k <= n; ++k) h.push_back("b_" + std::to_string(k));
  for (int k = 1; k <= n; ++k) h.push_back("Delta^" + std::to_string(k));
  return h;
}

std::string to_markdown(const TableDocument& doc) {
  const CohomologyTable& t = doc.table;
  std::ostringstream out;
  out << "# Cohomology of " << doc.structure << "\n\n";
  if (!doc.binding.empty()) out << "binding: " << doc.binding << "\n\n";

  const auto headers = golden_headers(t.n);
  md_row(out, headers);
  md_rule(out, headers.size());
  md_row(out, golden_cells(golden_view(t, doc.skt)));

  const auto gs = grids(t);
  for (std::size_t k = 0; k < gs.size(); ++k) {
    out << "\n## " << kGridTitles[k] << "\n\n";
    std::vector<std::string> head{"p \\ q"};
    for (int q = 0; q <= t.n; ++q) head.push_back(std::to_string(q));
    md_row(out, head);
    md_rule(out, head.size());
    for (int p = 0; p <= t.n; ++p) {
      std::vector<std::string> row{std::to_string(p)};
      for (int q = 0; q <= t.n; ++q) {
        row.push_back(std::to_string((*gs[k])[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)]));
      }
      md_row(out, row);
    }
  }

  out << "\n## de Rham\n\n";
  std::vector<std::string> head{"k"}, b{"b_k"}, d{"Delta^k"};
  for (int k = 0; k <= 2 * t.n; ++k) {
    head.push_back(std::to_string(k));
    b.push_back(std::to_string(t.betti[static_cast<std::size_t>(k)]));
    d.push_back(std::to_string(t.delta[static_cast<std::size_t>(k)]));
  }
  md_row(out, head);
  md_rule(out, head.size());
  md_row(out, b);
  md_row(out, d);
  out << "\nddbar-Lemma: " << ddbar_lemma_status(t).to_string() << "\n";
  return out.str();
}

std::string to_csv(const TableDocument& doc) {
  const CohomologyTable& t = doc.table;
  std::ostringstream out;
  out << "quantity,p,q,value\n";
  const auto gs = grids(t);
  for (std::size_t k = 0; k < gs.size(); ++k) {
    for (int p = 0; p <= t.n; ++p) {
      for (int q = 0; q <= t.n; ++q) {
        out << kGridNames[k] << "," << p << "," << q << ","
            << (*gs[k])[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] << "\n";
      }
    }
  }
  for (int k = 0; k <= 2 * t.n; ++k) out << "betti," << k << ",," << t.betti[static_cast<std::size_t>(k)] << "\n";
  for (int k = 0; k <= 2 * t.n; ++k) out << "delta," << k << ",," << t.delta[static_cast<std::size_t>(k)] << "\n";
  out << "skt,,," << (doc.skt ? 1 : 0) << "\n";
  out << "ddbar_lemma,,," << (ddbar_lemma_status(t).satisfied ? 1 : 0) << "\n";
  return out.str();
}

std::string to_json(const TableDocument& doc) {
  const CohomologyTable& t = doc.table;
  json j;
  j["structure"] = doc.structure;
  j["binding"] = doc.binding;
  j["n"] = t.n;
  json h = json::object();
  const auto gs = grids(t);
  for (std::size_t k = 0; k < gs.size(); ++k) h[kGridNames[k]] = *gs[k];
  j["grids"] = h;
  j["betti"] = t.betti;
  j["delta"] = t.delta;
  j["skt"] = doc.skt;
  j["ddbar_lemma"] = ddbar_lemma_status(t).to_string();
  return j.dump(2) + "\n";
}

TableDocument from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), 1, e.byte);
  }
  try {
    TableDocument doc;
    doc.structure = j.at("structure").get<std::string>();
    doc.binding = j.at("binding").get<std::string>();
    CohomologyTable& t = doc.table;
    t.n = j.at("n").get<int>();
    if (t.n < 1 || t.n > kMaxGenerators) throw ValidationError("n out of range");
    const auto gs = grids(t);
    for (std::size_t k = 0; k < gs.size(); ++k) {
      *gs[k] = grid_from_json(j.at("grids").at(kGridNames[k]), t.n, kGridNames[k]);
    }
    t.betti = j.at("betti").get<std::vector<int>>();
    t.delta = j.at("delta").get<std::vector<int>>();
    if (t.betti.size() != static_cast<std::size_t>(2 * t.n + 1) || t.delta.size() != t.betti.size()) {
      throw ValidationError("betti and delta need 2n+1 entries");
    }
    doc.skt = j.at("skt").get<bool>();
    if (j.at("ddbar_lemma").get<std::string>() != ddbar_lemma_status(t).to_string()) {
      throw ValidationError("ddbar_lemma verdict disagrees with the table");
    }
    return doc;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed table document: ") + e.what());
  }
}

std::string render(const TableDocument& doc, Format f) {
  switch (f) {
    case Format::Markdown: return to_markdown(doc);
    case Format::Csv: return to_csv(doc);
    case Format::Json: return to_json(doc);
  }
  return {};
}

// ---------------------------------------------------------------------------

std::string render_catalog(const std::vector<const CatalogCase*>& cases,
                           const std::vector<Evaluation>& results, bool golden, Format f) {
  bool footnote = false;
  for (const auto* c : cases) footnote = footnote || c->algebra_name() == "h7";

  if (f == Format::Json) {
    json arr = json::array();
    for (std::size_t k = 0; k < cases.size(); ++k) {
      const auto& e = results[k];
      const GoldenRow g = golden_view(e.table, e.skt);
      json row;
      row["id"] = cases[k]->id;
      row["n"] = e.table.n;
      row["algebra"] = cases[k]->algebra_name();
      row["structure"] = cases[k]->template_text;
      row["sample"] = cases[k]->binding_text;
      row["skt"] = g.skt;
      row["bott_chern"] = g.bc;
      row["betti"] = g.betti;
      row["delta"] = g.delta;
      if (golden) {
        row["golden"] = e.matches() ? "pass" : "FAIL";
        row["diffs"] = e.diffs;
      }
      if (cases[k]->algebra_name() == "h7") row["note"] = kH7Footnote;
      arr.push_back(row);
    }
    return arr.dump(2) + "\n";
  }

  if (f == Format::Csv) {
    // One header over the union of the listed dimensions; cells outside a
    // case's own columns stay empty.
    std::set<int> dims;
    for (const auto& e : results) dims.insert(e.table.n);
    std::vector<std::string> headers;
    for (int n : dims) {
      for (const auto& h : golden_headers(n)) {
        if (std::find(headers.begin(), headers.end(), h) == headers.end()) headers.push_back(h);
      }
    }
    std::ostringstream out;
    out << "case,n,algebra,sample";
    for (const auto& h : headers) out << "," << h;
    if (golden) out << ",golden";
    out << "\n";
    for (std::size_t k = 0; k < cases.size(); ++k) {
      const auto& e = results[k];
      const auto own = golden_headers(e.table.n);
      const auto cells = golden_cells(golden_view(e.table, e.skt));
      std::map<std::string, std::string> by_header;
      for (std::size_t c = 0; c < own.size(); ++c) by_header[own[c]] = cells[c];
      out << cases[k]->id << "," << e.table.n << "," << cases[k]->algebra_name() << ",\""
          << cases[k]->binding_text << "\"";
      for (const auto& h : headers) {
        auto it = by_header.find(h);
        out << "," << (it == by_header.end() ? "" : it->second);
      }
      if (golden) out << "," << (e.matches() ? "pass" : "FAIL");
      out << "\n";
    }
    return out.str();
  }

  std::ostringstream out;
  std::set<int> dims;
  for (const auto& e : results) dims.insert(e.table.n);
  for (int n : dims) {
    out << "## complex dimension " << n << "\n\n";
    std::vector<std::string> headers{"case", "algebra", "sample"};
    for (const auto& h : golden_headers(n)) headers.push_back(h);
    if (golden) headers.push_back("golden");
    md_row(out, headers);
    md_rule(out, headers.size());
    for (std::size_t k = 0; k < cases.size(); ++k) {
      const auto& e = results[k];
      if (e.table.n != n) continue;
      std::string id = cases[k]->id;
      if (cases[k]->algebra_name() == "h7") id += " [1]";
      std::vector<std::string> row{id, cases[k]->algebra_name(), cases[k]->binding_text};
      for (auto& c : golden_cells(golden_view(e.table, e.skt))) row.push_back(std::move(c));
      if (golden) row.push_back(e.matches() ? "pass" : "FAIL");
      md_row(out, row);
    }
    out << "\n";
  }
  if (golden) {
    for (std::size_t k = 0; k < cases.size(); ++k) {
      for (const auto& d : results[k].diffs) out << "- " << cases[k]->id << ": " << d << "\n";
    }
  }
  if (footnote) out << "[1] " << kH7Footnote << "\n";
  return out.str();
}

}  // namespace nilbc::cli
