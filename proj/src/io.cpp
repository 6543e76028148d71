#include "slcs/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "slcs/errors.hpp"

namespace slcs::io {

using nlohmann::json;

namespace {

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw IoError("cannot write '" + path.string() + "'");
}

const json& field(const json& obj, const char* name) {
  auto it = obj.find(name);
  if (it == obj.end()) throw ValidationError(std::string("missing field '") + name + "'");
  return *it;
}

const std::string& as_string(const json& j, const char* what) {
  if (!j.is_string()) throw ValidationError(std::string(what) + " must be a string");
  return j.get_ref<const std::string&>();
}

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) throw ValidationError(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(as_string(e, what));
  return out;
}

struct Document {
  json root;
  std::vector<std::string> ids;
  std::vector<std::vector<std::string>> point_atoms;
  std::vector<std::string> atoms;
};

Document read_document(std::string_view text) {
  Document d;
  try {
    d.root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw IoError(std::string("invalid JSON: ") + e.what());
  }
  if (!d.root.is_object()) throw ValidationError("model document must be a JSON object");
  const json& version = field(d.root, "version");
  if (!version.is_number_integer() || version.get<long long>() != kSchemaVersion)
    throw IoError("unknown schema version " + version.dump());
  if (auto it = d.root.find("atoms"); it != d.root.end()) d.atoms = string_list(*it, "'atoms'");

  const json& points = field(d.root, "points");
  if (!points.is_array()) throw ValidationError("'points' must be an array");
  for (const auto& p : points) {
    if (!p.is_object()) throw ValidationError("each point must be an object");
    d.ids.push_back(as_string(field(p, "id"), "point id"));
    auto it = p.find("atoms");
    d.point_atoms.push_back(it == p.end() ? std::vector<std::string>{} : string_list(*it, "point atoms"));
  }

  const bool has_edges = d.root.contains("edges");
  const bool has_closure = d.root.contains("singletonClosure");
  if (has_edges == has_closure) throw ValidationError("document needs exactly one of 'edges' and 'singletonClosure'");
  return d;
}

std::vector<std::pair<std::string, std::string>> read_edges(const json& edges) {
  if (!edges.is_array()) throw ValidationError("'edges' must be an array");
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2) throw ValidationError("each edge must be an array [from, to]");
    out.emplace_back(as_string(e[0], "edge endpoint"), as_string(e[1], "edge endpoint"));
  }
  return out;
}

json points_json(const std::vector<std::string>& ids, const std::vector<std::string>& atoms,
                 auto&& point_atoms) {
  json points = json::array();
  for (PointIndex x = 0; x < ids.size(); ++x) {
    json names = json::array();
    for (AtomIndex a : point_atoms(x)) names.push_back(atoms[a]);
    points.push_back({{"id", ids[x]}, {"atoms", names}});
  }
  return points;
}

}  // namespace

Model parse_model(std::string_view text) {
  Document d = read_document(text);
  if (!d.root.contains("edges"))
    throw ValidationError("document describes a closure space ('singletonClosure'), not a relational model");
  return Model::from_names(std::move(d.ids), d.point_atoms, read_edges(d.root["edges"]), d.atoms);
}

Model load_model(const std::filesystem::path& path) { return parse_model(read_text(path)); }

std::string model_to_json(const Model& m, const std::map<std::string, std::string>* projection) {
  json doc;
  doc["version"] = kSchemaVersion;
  doc["atoms"] = m.atoms();
  doc["points"] = points_json(m.ids(), m.atoms(), [&](PointIndex x) { return m.point_atoms(x); });
  json edges = json::array();
  for (const Edge& e : m.edges()) edges.push_back({m.id(e.from), m.id(e.to)});
  doc["edges"] = std::move(edges);
  if (projection) doc["projection"] = *projection;
  return doc.dump(2) + "\n";
}

void save_model(const Model& m, const std::filesystem::path& path,
                const std::map<std::string, std::string>* projection) {
  write_text(path, model_to_json(m, projection));
}

FiniteClosureSpace parse_space(std::string_view text) {
  Document d = read_document(text);
  if (d.root.contains("edges"))
    return FiniteClosureSpace::from_model(
        Model::from_names(std::move(d.ids), d.point_atoms, read_edges(d.root["edges"]), d.atoms));

  std::set<std::string> universe(d.atoms.begin(), d.atoms.end());
  for (const auto& pa : d.point_atoms) universe.insert(pa.begin(), pa.end());
  std::vector<std::string> atoms(universe.begin(), universe.end());
  std::map<std::string, PointIndex> index;
  for (PointIndex x = 0; x < d.ids.size(); ++x)
    if (!index.emplace(d.ids[x], x).second) throw ValidationError("duplicate point id '" + d.ids[x] + "'");

  std::vector<std::vector<AtomIndex>> valuation;
  for (const auto& pa : d.point_atoms) {
    std::vector<AtomIndex> va;
    for (const auto& a : pa)
      va.push_back(static_cast<AtomIndex>(std::lower_bound(atoms.begin(), atoms.end(), a) - atoms.begin()));
    valuation.push_back(std::move(va));
  }

  const std::size_t n = d.ids.size();
  std::vector<PointSet> sc(n, PointSet(n));
  std::vector<bool> seen(n);
  const json& entries = d.root["singletonClosure"];
  if (!entries.is_array()) throw ValidationError("'singletonClosure' must be an array");
  auto lookup = [&](const std::string& id) {
    auto it = index.find(id);
    if (it == index.end()) throw ValidationError("singletonClosure refers to unknown point '" + id + "'");
    return it->second;
  };
  for (const auto& e : entries) {
    if (!e.is_object()) throw ValidationError("each singletonClosure entry must be an object");
    const PointIndex x = lookup(as_string(field(e, "id"), "closure id"));
    if (seen[x]) throw ValidationError("duplicate singletonClosure entry for '" + d.ids[x] + "'");
    seen[x] = true;
    for (const auto& y : string_list(field(e, "closure"), "closure")) sc[x].insert(lookup(y));
  }
  for (PointIndex x = 0; x < n; ++x)
    if (!seen[x]) throw ValidationError("missing singletonClosure entry for '" + d.ids[x] + "'");
  return FiniteClosureSpace(std::move(d.ids), std::move(atoms), std::move(valuation), std::move(sc));
}

FiniteClosureSpace load_space(const std::filesystem::path& path) { return parse_space(read_text(path)); }

std::string space_to_json(const FiniteClosureSpace& s) {
  json doc;
  doc["version"] = kSchemaVersion;
  doc["atoms"] = s.atoms();
  doc["points"] = points_json(s.ids(), s.atoms(), [&](PointIndex x) { return s.point_atoms(x); });
  json entries = json::array();
  for (PointIndex x = 0; x < s.size(); ++x) {
    json closure = json::array();
    s.singleton_closure(x).for_each([&](PointIndex y) { closure.push_back(s.id(y)); });
    entries.push_back({{"id", s.id(x)}, {"closure", closure}});
  }
  doc["singletonClosure"] = std::move(entries);
  return doc.dump(2) + "\n";
}

Model image_to_model(const Image& img, const ImageOptions& opts) {
  if (img.width == 0 || img.height == 0 || img.pixels.size() != img.width * img.height)
    throw ValidationError("image must be a non-empty grid");
  const std::size_t w = img.width, h = img.height, n = w * h;

  std::vector<std::string> atoms;
  std::map<Rgb, std::optional<AtomIndex>> colour_atom;
  if (!opts.colour_atoms) {
    for (const Rgb& c : img.pixels) colour_atom.emplace(c, std::nullopt);
    for (auto& [c, a] : colour_atom) {
      a = static_cast<AtomIndex>(atoms.size());
      atoms.push_back(colour_name(c));
    }
  } else {
    std::set<std::string> names;
    for (const auto& [key, atom] : *opts.colour_atoms) names.insert(atom);
    atoms.assign(names.begin(), names.end());
    for (const auto& [key, atom] : *opts.colour_atoms) {
      auto c = parse_colour(key);
      if (!c) throw ValidationError("colour key '" + key + "' is not of the form #rrggbb");
      colour_atom[*c] = static_cast<AtomIndex>(std::lower_bound(atoms.begin(), atoms.end(), atom) - atoms.begin());
    }
  }

  std::vector<std::string> ids(n);
  std::vector<std::vector<AtomIndex>> valuation(n);
  for (std::size_t r = 0; r < h; ++r) {
    for (std::size_t c = 0; c < w; ++c) {
      const std::size_t x = r * w + c;
      ids[x] = "r" + std::to_string(r) + "c" + std::to_string(c);
      auto it = colour_atom.find(img.pixels[x]);
      if (it != colour_atom.end() && it->second) {
        valuation[x] = {*it->second};
      } else if (opts.strict) {
        throw ValidationError("colour " + colour_name(img.pixels[x]) + " at " + ids[x] + " is not in the colour map");
      }
    }
  }

  static constexpr int kOrtho[][2] = {{-1, 0}, {0, -1}, {0, 1}, {1, 0}};
  static constexpr int kDiag[][2] = {{-1, -1}, {-1, 1}, {1, -1}, {1, 1}};
  const bool diagonal = opts.connectivity == Connectivity::Orthodiagonal;
  std::vector<std::vector<Edge>> rows(h);
#pragma omp parallel for schedule(static)
  for (std::int64_t ri = 0; ri < static_cast<std::int64_t>(h); ++ri) {
    const auto r = static_cast<std::size_t>(ri);
    auto& out = rows[r];
    out.reserve(w * (diagonal ? 8 : 4));
    auto add = [&](std::size_t c, const int (*offs)[2], std::size_t count) {
      for (std::size_t k = 0; k < count; ++k) {
        const auto rr = static_cast<std::int64_t>(r) + offs[k][0];
        const auto cc = static_cast<std::int64_t>(c) + offs[k][1];
        if (rr < 0 || cc < 0 || rr >= static_cast<std::int64_t>(h) || cc >= static_cast<std::int64_t>(w)) continue;
        out.push_back({static_cast<PointIndex>(r * w + c), static_cast<PointIndex>(rr * w + cc)});
      }
    };
    for (std::size_t c = 0; c < w; ++c) {
      add(c, kOrtho, 4);
      if (diagonal) add(c, kDiag, 4);
    }
  }
  std::vector<Edge> edges;
  std::size_t total = 0;
  for (const auto& row : rows) total += row.size();
  edges.reserve(total);
  for (auto& row : rows) edges.insert(edges.end(), row.begin(), row.end());
  return Model(std::move(ids), std::move(atoms), std::move(valuation), std::move(edges));
}

Model disjoint_union(std::span<const Model> models, std::span<const std::string> tags) {
  if (models.empty()) throw ValidationError("disjoint union of no models");
  if (!tags.empty() && tags.size() != models.size()) throw ValidationError("one tag per model required");

  std::set<std::string> universe;
  for (const Model& m : models) universe.insert(m.atoms().begin(), m.atoms().end());
  std::vector<std::string> atoms(universe.begin(), universe.end());

  std::vector<std::string> ids;
  std::vector<std::vector<AtomIndex>> valuation;
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < models.size(); ++k) {
    const Model& m = models[k];
    const std::string tag = tags.empty() ? "m" + std::to_string(k) : tags[k];
    const auto base = static_cast<PointIndex>(ids.size());
    std::vector<AtomIndex> remap;
    for (const auto& a : m.atoms())
      remap.push_back(static_cast<AtomIndex>(std::lower_bound(atoms.begin(), atoms.end(), a) - atoms.begin()));
    for (PointIndex x = 0; x < m.size(); ++x) {
      ids.push_back(tag + ":" + m.id(x));
      std::vector<AtomIndex> va;
      for (AtomIndex a : m.point_atoms(x)) va.push_back(remap[a]);
      valuation.push_back(std::move(va));
    }
    for (const Edge& e : m.edges()) edges.push_back({base + e.from, base + e.to});
  }
  return Model(std::move(ids), std::move(atoms), std::move(valuation), std::move(edges));
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string emit_dot(const Model& m, DotStyle style, std::vector<std::string>* warnings) {
  std::vector<std::optional<std::string>> fill(m.size());
  if (style == DotStyle::Colour) {
    for (PointIndex x = 0; x < m.size() && style == DotStyle::Colour; ++x) {
      const auto names = m.point_atom_names(x);
      if (names.size() > 1 || (names.size() == 1 && !parse_colour(names[0]))) {
        if (warnings)
          warnings->push_back("point '" + m.id(x) +
                              "' has atoms that are not a single #rrggbb colour; using plain style");
        style = DotStyle::Plain;
      } else if (names.size() == 1) {
        fill[x] = names[0];
      }
    }
  }

  std::ostringstream out;
  out << "digraph model {\n";
  for (PointIndex x = 0; x < m.size(); ++x) {
    std::string label;
    for (const auto& a : m.point_atom_names(x)) label += (label.empty() ? "" : ", ") + a;
    out << "  " << quoted(m.id(x)) << " [label=" << quoted(label);
    if (style == DotStyle::Colour && fill[x]) out << ", style=filled, fillcolor=" << quoted(*fill[x]);
    out << "];\n";
  }
  for (const Edge& e : m.edges()) out << "  " << quoted(m.id(e.from)) << " -> " << quoted(m.id(e.to)) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace slcs::io
