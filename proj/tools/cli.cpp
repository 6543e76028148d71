#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "slcs/bisim.hpp"
#include "slcs/checker.hpp"
#include "slcs/closure_space.hpp"
#include "slcs/errors.hpp"
#include "slcs/io.hpp"
#include "slcs/minimize.hpp"
#include "slcs/parser.hpp"

namespace slcs::cli {

namespace {

struct InputOptions {
  std::string path;
  bool image = false;
  std::string connectivity = "orthodiagonal";
};

void add_input_flags(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--input", in.path, "model document (JSON) or image file")->required();
  cmd->add_flag("--image", in.image, "read --input as a PNG or BMP image");
  cmd->add_option("--connectivity", in.connectivity, "pixel adjacency for --image")
      ->check(CLI::IsMember({"ortho", "orthodiagonal"}));
}

Model load_input(const InputOptions& in) {
  if (!in.image) return io::load_model(in.path);
  io::ImageOptions opts;
  opts.connectivity = in.connectivity == "ortho" ? io::Connectivity::Orthogonal : io::Connectivity::Orthodiagonal;
  return io::image_to_model(read_image(in.path), opts);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw IoError("cannot write '" + path + "'");
}

std::string block_listing(const Model& m, const Partition& p) {
  std::string out;
  for (const auto& block : p.blocks()) {
    out += " {";
    for (std::size_t i = 0; i < block.size(); ++i) out += (i ? " " : "") + m.id(block[i]);
    out += "}";
  }
  return out;
}

struct MinimizeOptions {
  InputOptions input;
  std::string dot;
  std::string json;
  std::string style = "plain";
  bool trace = false;
};

int cmd_minimize(const MinimizeOptions& o, std::ostream& out, std::ostream& err) {
  const Model m = load_input(o.input);
  const RefinementTrace trace = partition_refine(m);
  const Partition& stable = trace.stable();
  if (!is_stable(m, stable)) {
    err << "error: refinement ended on an unstable partition\n";
    return kInvariantFailure;
  }
  const QuotientModel q = quotient(m, stable);

  if (o.trace)
    for (std::size_t r = 0; r < trace.rounds.size(); ++r)
      out << "round " << r << ":" << block_listing(m, trace.rounds[r]) << "\n";

  if (!o.dot.empty()) {
    std::vector<std::string> warnings;
    const auto style = o.style == "colour" ? io::DotStyle::Colour : io::DotStyle::Plain;
    write_file(o.dot, io::emit_dot(q.model, style, &warnings));
    for (const auto& w : warnings) err << "warning: " << w << "\n";
  }
  if (!o.json.empty()) {
    std::map<std::string, std::string> projection;
    for (PointIndex x = 0; x < m.size(); ++x) projection[m.id(x)] = q.model.id(q.projection[x]);
    write_file(o.json, io::model_to_json(q.model, &projection));
  }
  out << "blocks: " << stable.block_count() << "\n";
  return kOk;
}

struct CheckOptions {
  InputOptions input;
  std::string formula;
  std::string formula_file;
  bool oracle = false;
  std::string output;
};

std::string read_formula_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int cmd_check(const CheckOptions& o, std::ostream& out, std::ostream& err) {
  const std::string text = o.formula_file.empty() ? o.formula : read_formula_file(o.formula_file);
  Formula phi;
  try {
    phi = parse(text);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    const std::size_t line_start = text.rfind('\n', e.span().start == 0 ? 0 : e.span().start - 1);
    const std::size_t from = line_start == std::string::npos ? 0 : line_start + 1;
    const std::size_t to = std::min(text.find('\n', from), text.size());
    err << "  " << text.substr(from, to - from) << "\n  " << std::string(e.span().start - from, ' ') << "^\n";
    return kInputError;
  }
  const Model m = load_input(o.input);
  const SatResult result = sat(m, phi);
  for (const auto& w : result.warnings) err << "warning: " << w << "\n";

  if (o.oracle) {
    const SatResult reference = sat_oracle(m, phi);
    if (reference.sat != result.sat) {
      err << "error: checker and path oracle disagree on " << to_string(phi) << "\n";
      return kOracleMismatch;
    }
  }

  std::vector<std::string> ids;
  result.sat.for_each([&](PointIndex x) { ids.push_back(m.id(x)); });
  std::sort(ids.begin(), ids.end());
  nlohmann::json doc{{"formula", to_string(phi)}, {"satisfied", ids}, {"warnings", result.warnings}};
  if (o.output.empty()) {
    out << doc.dump(2) << "\n";
  } else {
    write_file(o.output, doc.dump(2) + "\n");
    out << "satisfied: " << ids.size() << " of " << m.size() << "\n";
  }
  return kOk;
}

struct EquivOptions {
  InputOptions input;
  std::vector<std::string> points;
  bool general = false;
};

template <typename Space>
std::pair<PointIndex, PointIndex> point_pair(const Space& s, const std::vector<std::string>& names) {
  if (names.size() != 2) throw ValidationError("--points takes exactly two ids");
  auto x = s.index_of(names[0]);
  auto y = s.index_of(names[1]);
  if (!x) throw ValidationError("unknown point '" + names[0] + "'");
  if (!y) throw ValidationError("unknown point '" + names[1] + "'");
  return {*x, *y};
}

int cmd_equiv(const EquivOptions& o, std::ostream& out, std::ostream& err) {
  std::optional<Formula> phi;
  bool verified = true;
  if (o.general) {
    const FiniteClosureSpace s = o.input.image ? FiniteClosureSpace::from_model(load_input(o.input))
                                               : io::load_space(o.input.path);
    const auto [x, y] = point_pair(s, o.points);
    phi = iml_distinguishing_formula(s, x, y);
    if (phi) {
      const PointSet hits = iml_sat(s, *phi).sat;
      verified = hits.contains(x) && !hits.contains(y);
    }
  } else {
    const Model m = load_input(o.input);
    const auto [x, y] = point_pair(m, o.points);
    phi = distinguishing_formula(m, x, y);
    if (phi) {
      const PointSet hits = sat(m, *phi).sat;
      verified = hits.contains(x) && !hits.contains(y);
    }
  }
  if (!verified) {
    err << "error: generated formula does not separate the points\n";
    return kInvariantFailure;
  }
  if (phi)
    out << "distinguished by: " << to_string(*phi) << "\n";
  else
    out << "equivalent\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimise closure models and check spatial-logic formulas", "slcsmin"};
  app.require_subcommand(1);

  MinimizeOptions mo;
  auto* minimize = app.add_subcommand("minimize", "compute the minimal bisimilar model");
  add_input_flags(minimize, mo.input);
  minimize->add_option("--output", mo.dot, "write the minimal model as DOT");
  minimize->add_option("--json", mo.json, "write the minimal model and projection as JSON");
  minimize->add_option("--style", mo.style, "DOT node style")->check(CLI::IsMember({"plain", "colour"}));
  minimize->add_flag("--trace", mo.trace, "print the partition of every refinement round");

  CheckOptions co;
  auto* check = app.add_subcommand("check", "model-check a formula");
  add_input_flags(check, co.input);
  auto* formula = check->add_option("--formula", co.formula, "formula text");
  auto* formula_file = check->add_option("--formula-file", co.formula_file, "file holding the formula");
  formula->excludes(formula_file);
  check->add_flag("--oracle", co.oracle, "cross-check against the path-enumeration oracle");
  check->add_option("--output", co.output, "write the result as JSON to this file");

  EquivOptions eo;
  auto* equiv = app.add_subcommand("equiv", "decide logical equivalence of two points");
  add_input_flags(equiv, eo.input);
  equiv->add_option("--points", eo.points, "two point ids, comma separated")->required()->delimiter(',');
  equiv->add_flag("--general", eo.general, "use the near-only logic on closure spaces");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (check->parsed() && co.formula.empty() && co.formula_file.empty())
      throw CLI::RequiredError("--formula or --formula-file");
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (minimize->parsed()) return cmd_minimize(mo, out, err);
    if (check->parsed()) return cmd_check(co, out, err);
    return cmd_equiv(eo, out, err);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kInvariantFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInvariantFailure;
  }
}

}  // namespace slcs::cli
