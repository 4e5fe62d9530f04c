#include "nilbc_cli/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "nilbc/catalog.hpp"
#include "nilbc/error.hpp"
#include "nilbc/metrics.hpp"
#include "nilbc/parser.hpp"
#include "nilbc_cli/definition.hpp"
#include "nilbc_cli/render.hpp"

namespace nilbc::cli {
namespace {

using json = nlohmann::ordered_json;

/// A structure with its binding, from a definition file or a catalog case.
struct Input {
  std::string label;
  ComplexStructureTemplate tmpl;
  ParameterBinding binding;
  std::optional<RealAlgebra> algebra;
};

Input load_input(const std::string& path, const std::string& binding_flag) {
  const Definition def = load_definition(path);
  if (!def.structure) throw ValidationError(path + ": no 'structure:' line");
  Input in;
  in.label = path;
  in.tmpl = parse_complex_structure(*def.structure);
  if (def.binding) in.binding = parse_binding(*def.binding);
  if (!binding_flag.empty()) {
    // Flag values override the file.
    const ParameterBinding extra = parse_binding(binding_flag);
    for (const auto& [k, v] : extra.values) in.binding.values[k] = v;
    for (const auto& [k, v] : extra.moduli) in.binding.moduli[k] = v;
  }
  if (def.algebra) in.algebra = parse_real_algebra(*def.algebra);
  return in;
}

Input case_input(const CatalogCase& c) {
  return Input{c.id, c.structure_template(), c.sample(), c.algebra()};
}

ComplexStructure build(const Input& in) {
  const auto missing = unbound_names(in.tmpl, in.binding);
  if (!missing.empty()) {
    std::string names;
    for (const auto& m : missing) names += (names.empty() ? "" : ", ") + m;
    throw ValidationError("unbound parameters: " + names + " (pass --binding)");
  }
  return instantiate(in.tmpl, in.binding);
}

int jobs_default() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

// ---------------------------------------------------------------------------

int cmd_check(const std::string& path, const std::string& binding_flag, std::ostream& out) {
  const Definition def = load_definition(path);
  if (!def.algebra && !def.structure) throw ValidationError(path + ": nothing to check");
  bool ok = true;
  if (def.algebra) {
    const RealAlgebra a = parse_real_algebra(*def.algebra);
    const auto report = check_d_squared(a);
    for (const auto& r : report.residuals) out << "residual " << r.generator << " = " << r.value.to_string() << "\n";
    const bool nilpotent = report.ok() && check_nilpotency(a);
    if (report.ok() && !nilpotent) out << "algebra is not nilpotent\n";
    ok = ok && nilpotent;
    out << "algebra " << render(a) << ": " << (nilpotent ? "ok" : "INVALID") << "\n";
  }
  if (def.structure) {
    Input in = load_input(path, binding_flag);
    const auto missing = unbound_names(in.tmpl, in.binding);
    if (!missing.empty()) {
      for (const auto& m : missing) out << "unbound parameter " << m << "\n";
      return kInvalid;
    }
    // instantiate throws on d^2 != 0 with the residuals in the message.
    try {
      const ComplexStructure cs = instantiate(in.tmpl, in.binding);
      const bool nilpotent = check_nilpotency(realify(cs));
      if (!nilpotent) out << "underlying real algebra is not nilpotent\n";
      ok = ok && nilpotent;
      out << "structure " << render(in.tmpl);
      if (!in.binding.empty()) out << " [" << in.binding.to_string() << "]";
      out << ": " << (nilpotent ? "ok" : "INVALID") << "\n";
    } catch (const ValidationError& e) {
      out << "structure: " << e.what() << "\n";
      ok = false;
    }
  }
  return ok ? kOk : kInvalid;
}

int cmd_table(const std::string& path, const std::string& binding_flag, Format f, std::ostream& out) {
  const Input in = load_input(path, binding_flag);
  const ComplexStructure cs = build(in);
  TableDocument doc{render(in.tmpl), in.binding.to_string(), full_table(cs),
                    is_pluriclosed(cs, standard_form(cs.n()))};
  out << render(doc, f);
  return kOk;
}

int cmd_catalog(const std::string& case_id, int dim, bool golden, Format f,
                const std::string& golden_file, int jobs, std::ostream& out) {
  std::optional<Catalog> loaded;
  if (!golden_file.empty()) loaded = Catalog::load(golden_file);
  const Catalog& cat = loaded ? *loaded : Catalog::builtin();
  std::vector<const CatalogCase*> cases;
  if (!case_id.empty()) {
    cases.push_back(&cat.at(case_id));
  } else {
    cases = cat.list(dim ? std::optional<int>(dim) : std::nullopt);
  }
  const auto results = evaluate_all(cases, jobs);
  out << render_catalog(cases, results, golden, f);
  if (!golden) return kOk;
  const bool all = std::all_of(results.begin(), results.end(), [](const Evaluation& e) { return e.matches(); });
  return all ? kOk : kMismatch;
}

/// Coefficient c when f = c * w12~1~2 (including f = 0).
std::optional<Gaussian> top_coefficient(const Form& f) {
  const BasisElement top = BasisElement::from_indices({1, 2}, {1, 2});
  for (const auto& [e, c] : f.terms()) {
    if (!(e == top)) return std::nullopt;
  }
  return f.coefficient(top);
}

int cmd_skt(const Input& in, const std::string& metric, std::uint64_t seed, int count, Format f,
            std::ostream& out) {
  const ComplexStructure cs = build(in);
  const int n = cs.n();
  const Form sum = ddbar_of_standard_sum(cs);
  const HermitianForm standard = standard_form(n);
  const bool pluri = is_pluriclosed(cs, standard);
  const bool bal = is_balanced(cs, standard);
  std::optional<Gaussian> coeff;
  if (n == 3) coeff = top_coefficient(sum);

  std::vector<std::pair<bool, bool>> sampled;
  if (metric == "random") {
    for (const auto& h : random_positive_forms(n, count, seed)) {
      sampled.emplace_back(is_pluriclosed(cs, h), is_balanced(cs, h));
    }
  } else if (metric != "standard") {
    throw ValidationError("unknown metric '" + metric + "' (standard, random)");
  }
  const auto count_if = [&](bool pick_first) {
    return std::count_if(sampled.begin(), sampled.end(),
                         [&](const auto& s) { return pick_first ? s.first : s.second; });
  };

  if (f == Format::Json) {
    json j;
    j["input"] = in.label;
    j["ddbar_sum"] = sum.to_string();
    j["coefficient"] = coeff ? json(coeff->to_string()) : json(nullptr);
    j["pluriclosed"] = pluri;
    j["balanced"] = bal;
    if (!sampled.empty()) {
      j["seed"] = seed;
      json arr = json::array();
      for (const auto& [p, b] : sampled) arr.push_back({{"pluriclosed", p}, {"balanced", b}});
      j["random"] = arr;
    }
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "input: " << in.label << "\n";
  out << "ddbar(sum_j w^j ^ wbar^j) = " << (sum.is_zero() ? "0" : sum.to_string()) << "\n";
  if (n == 3) {
    out << "coefficient of w12~1~2: " << (coeff ? coeff->to_string() : "(not a multiple)") << "\n";
  }
  out << "standard metric: pluriclosed=" << (pluri ? "true" : "false")
      << " balanced=" << (bal ? "true" : "false") << "\n";
  if (!sampled.empty()) {
    out << "random metrics (seed " << seed << "): pluriclosed " << count_if(true) << "/"
        << sampled.size() << ", balanced " << count_if(false) << "/" << sampled.size() << "\n";
  }
  return kOk;
}

int cmd_curves(const std::string& id, Format f, std::ostream& out) {
  std::vector<const DeformationCurve*> selected;
  if (id.empty()) {
    for (const auto& c : deformation_curves()) selected.push_back(&c);
  } else {
    selected.push_back(&curve(id));
  }
  bool ok = true;
  json arr = json::array();
  std::ostringstream text;
  if (f == Format::Csv) {
    text << "curve,point,tracked,value,pluriclosed,balanced,balanced_special,random_pluriclosed,random_balanced,status\n";
  }
  for (const auto* c : selected) {
    const auto results = evaluate_curve(*c);
    if (f == Format::Markdown) {
      text << "## curve " << c->id << ": " << c->description << "\n\n";
      text << "| point | tracked | pluriclosed | balanced | balanced (special metric) | random pluriclosed | random balanced | status |\n";
      text << "|---|---|---|---|---|---|---|---|\n";
    }
    for (const auto& r : results) {
      ok = ok && r.diffs.empty();
      std::string tracked = "-";
      if (c->bidegree) {
        const auto [p, q] = *c->bidegree;
        tracked = "h^{" + std::to_string(p) + "," + std::to_string(q) + "}_BC=" +
                  std::to_string(r.table.h_bc[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)]);
      }
      const std::string special = r.balanced_special ? (*r.balanced_special ? "true" : "false") : "-";
      const std::string status = r.diffs.empty() ? "ok" : "FAIL";
      if (f == Format::Json) {
        json j;
        j["curve"] = c->id;
        j["point"] = r.label;
        j["tracked"] = tracked;
        j["pluriclosed"] = r.pluriclosed_standard;
        j["balanced"] = r.balanced_standard;
        j["balanced_special"] = r.balanced_special ? json(*r.balanced_special) : json(nullptr);
        j["random_pluriclosed"] = r.random_pluriclosed;
        j["random_balanced"] = r.random_balanced;
        j["random_count"] = kRandomMetrics;
        j["diffs"] = r.diffs;
        arr.push_back(j);
      } else if (f == Format::Csv) {
        text << c->id << "," << r.label << "," << tracked << "," << (r.pluriclosed_standard ? 1 : 0)
             << "," << (r.balanced_standard ? 1 : 0) << "," << special << "," << r.random_pluriclosed
             << "," << r.random_balanced << "," << status << "\n";
      } else {
        text << "| " << r.label << " | " << tracked << " | " << (r.pluriclosed_standard ? "true" : "false")
             << " | " << (r.balanced_standard ? "true" : "false") << " | " << special << " | "
             << r.random_pluriclosed << "/" << kRandomMetrics << " | " << r.random_balanced << "/"
             << kRandomMetrics << " | " << status << " |\n";
        for (const auto& d : r.diffs) text << "\n- " << r.label << ": " << d << "\n";
      }
    }
    if (f == Format::Markdown) text << "\n";
  }
  if (f == Format::Json) text << arr.dump(2) << "\n";
  out << text.str();
  return ok ? kOk : kMismatch;
}

int cmd_figure_data(int jobs, std::ostream& out) {
  const auto cases = Catalog::builtin().list(3);
  const auto results = evaluate_all(cases, jobs);
  out << "case_id,Delta1,Delta2,Delta3\n";
  for (std::size_t k = 0; k < cases.size(); ++k) {
    const auto& d = results[k].table.delta;
    out << cases[k]->id << "," << d[1] << "," << d[2] << "," << d[3] << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Bott-Chern, Aeppli, Dolbeault and de Rham cohomology of nilmanifolds"};
  app.name("nilbc");
  app.require_subcommand(1);

  std::string file, binding, format = "md", case_id, golden_file, metric = "standard", curve_id;
  int dim = 0, jobs = jobs_default(), count = kRandomMetrics;
  bool golden = false;
  std::uint64_t seed = 20240607;

  auto* check = app.add_subcommand("check", "Validate a definition file");
  check->add_option("file", file, "Definition file")->required();
  check->add_option("--binding", binding, "Parameter values, \"D=i; lambda=0\"");

  auto* table = app.add_subcommand("table", "Cohomology tables of a structure");
  table->add_option("file", file, "Definition file")->required();
  table->add_option("--binding", binding, "Parameter values, overriding the file");
  table->add_option("--format", format, "md, csv or json")->check(CLI::IsMember({"md", "csv", "json"}));

  auto* catalog = app.add_subcommand("catalog", "Classification cases and golden comparison");
  catalog->add_option("--case", case_id, "Single case id, \"09c\"");
  catalog->add_option("--dim", dim, "Complex dimension")->check(CLI::IsMember({3, 4}));
  catalog->add_flag("--golden", golden, "Compare against the golden tables");
  catalog->add_option("--format", format, "md, csv or json")->check(CLI::IsMember({"md", "csv", "json"}));
  catalog->add_option("--golden-file", golden_file, "Alternative golden data file");
  catalog->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* skt = app.add_subcommand("skt", "Pluriclosed and balanced tests");
  auto* skt_file = skt->add_option("file", file, "Definition file");
  auto* skt_case = skt->add_option("--case", case_id, "Catalog case id");
  skt_file->excludes(skt_case);
  skt->add_option("--binding", binding, "Parameter values, overriding the file");
  skt->add_option("--metric", metric, "standard or random")->check(CLI::IsMember({"standard", "random"}));
  skt->add_option("--seed", seed, "Seed for random metrics");
  skt->add_option("--count", count, "Number of random metrics")->check(CLI::PositiveNumber);
  skt->add_option("--format", format, "md or json")->check(CLI::IsMember({"md", "json"}));

  auto* curves = app.add_subcommand("curves", "Deformation curves");
  curves->add_option("--id", curve_id, "A, B or C")->check(CLI::IsMember({"A", "B", "C"}));
  curves->add_option("--format", format, "md, csv or json")->check(CLI::IsMember({"md", "csv", "json"}));

  auto* figure = app.add_subcommand("figure-data", "Delta^1..Delta^3 of every n=3 case as CSV");
  figure->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsageError;
  }

  try {
    const Format f = parse_format(format);
    if (check->parsed()) return cmd_check(file, binding, out);
    if (table->parsed()) return cmd_table(file, binding, f, out);
    if (catalog->parsed()) return cmd_catalog(case_id, dim, golden, f, golden_file, jobs, out);
    if (skt->parsed()) {
      if (file.empty() == case_id.empty()) {
        err << "skt: give a definition file or --case\n";
        return kUsageError;
      }
      const Input in = case_id.empty() ? load_input(file, binding) : case_input(Catalog::builtin().at(case_id));
      return cmd_skt(in, metric, seed, count, f, out);
    }
    if (curves->parsed()) return cmd_curves(curve_id, f, out);
    if (figure->parsed()) return cmd_figure_data(jobs, out);
  } catch (const ParseError& e) {
    err << (file.empty() ? "" : file + ":") << e.what() << "\n";
    return kUsageError;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace nilbc::cli
