#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "slcs/closure_space.hpp"
#include "slcs/image.hpp"
#include "slcs/model.hpp"

namespace slcs::io {

inline constexpr int kSchemaVersion = 1;

/// Model document:
///
///   {"version": 1, "atoms": [...], "points": [{"id": "a", "atoms": [...]}],
///    "edges": [["a", "b"], ...]}
///
/// A closure-space document has "singletonClosure": [{"id", "closure"}]
/// instead of "edges". "atoms" may list atoms no point carries. An optional
/// "projection" object (original id -> quotient id) is ignored on load.
///
/// Throws IoError on malformed JSON (with line and column) or an unknown
/// version, ValidationError on duplicate ids or dangling references.
Model parse_model(std::string_view json);
Model load_model(const std::filesystem::path& path);
std::string model_to_json(const Model& m, const std::map<std::string, std::string>* projection = nullptr);
void save_model(const Model& m, const std::filesystem::path& path,
                const std::map<std::string, std::string>* projection = nullptr);

/// Accepts both document kinds; an edge document yields the induced space.
FiniteClosureSpace parse_space(std::string_view json);
FiniteClosureSpace load_space(const std::filesystem::path& path);
std::string space_to_json(const FiniteClosureSpace& s);

enum class Connectivity { Orthogonal, Orthodiagonal };

struct ImageOptions {
  Connectivity connectivity = Connectivity::Orthodiagonal;
  /// Colour ("#rrggbb") -> atom. Unset: one atom per distinct colour, named
  /// by the colour.
  std::optional<std::map<std::string, std::string>> colour_atoms;
  /// With an explicit map, an unmapped colour is an error; otherwise such
  /// pixels carry no atom.
  bool strict = true;
};

/// One point per pixel, id "r<row>c<col>", with symmetric edges to the 4
/// (orthogonal) or 8 (orthodiagonal) neighbours. No self-edges.
Model image_to_model(const Image& img, const ImageOptions& opts = {});

/// Tagged union: point ids become "<tag>:<id>". Default tags are "m0", "m1", ...
Model disjoint_union(std::span<const Model> models, std::span<const std::string> tags = {});

enum class DotStyle { Plain, Colour };

/// Deterministic DOT digraph, nodes and edges in point-index order. Plain
/// labels list the atoms; colour style fills nodes by their "#rrggbb" atom
/// and falls back to plain (with a warning) if any point has a non-colour
/// atom or more than one colour.
std::string emit_dot(const Model& m, DotStyle style = DotStyle::Plain, std::vector<std::string>* warnings = nullptr);

}  // namespace slcs::io
