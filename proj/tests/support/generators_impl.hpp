#pragma once

namespace slcs::testing {

template <typename F>
void for_each_model(std::size_t n, std::size_t atoms, F&& f) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back("p" + std::to_string(i));
  const std::vector<std::string> names = atom_names(atoms);
  std::vector<Edge> candidates;
  for (PointIndex x = 0; x < n; ++x)
    for (PointIndex y = 0; y < n; ++y)
      if (x != y) candidates.push_back({x, y});

  const std::uint64_t valuations = std::uint64_t{1} << (n * atoms);
  const std::uint64_t edge_sets = std::uint64_t{1} << candidates.size();
  for (std::uint64_t v = 0; v < valuations; ++v) {
    std::vector<std::vector<AtomIndex>> val(n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t a = 0; a < atoms; ++a)
        if (v >> (x * atoms + a) & 1) val[x].push_back(static_cast<AtomIndex>(a));
    for (std::uint64_t es = 0; es < edge_sets; ++es) {
      std::vector<Edge> edges;
      for (std::size_t k = 0; k < candidates.size(); ++k)
        if (es >> k & 1) edges.push_back(candidates[k]);
      f(Model(ids, names, val, std::move(edges)));
    }
  }
}

}  // namespace slcs::testing
