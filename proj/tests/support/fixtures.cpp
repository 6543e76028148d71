#include "support/fixtures.hpp"

namespace slcs::testing {

Model grid(const std::string& prefix, int rows, int cols, const std::function<bool(int, int)>& red,
           bool diagonal) {
  std::vector<std::string> ids;
  std::vector<std::vector<std::string>> atoms;
  std::vector<std::pair<std::string, std::string>> edges;
  auto name = [&](int r, int c) {
    return rows == 1 ? prefix + std::to_string(c) : prefix + std::to_string(r) + std::to_string(c);
  };
  for (int r = 1; r <= rows; ++r)
    for (int c = 1; c <= cols; ++c) {
      ids.push_back(name(r, c));
      atoms.push_back({red(r, c) ? "red" : "blue"});
      for (int dr = -1; dr <= 1; ++dr)
        for (int dc = -1; dc <= 1; ++dc) {
          if ((dr == 0 && dc == 0) || (!diagonal && dr != 0 && dc != 0)) continue;
          const int rr = r + dr, cc = c + dc;
          if (rr >= 1 && rr <= rows && cc >= 1 && cc <= cols) edges.emplace_back(name(r, c), name(rr, cc));
        }
    }
  return Model::from_names(ids, atoms, edges, {"blue", "red"});
}

Model model_a() {
  return grid("a", 1, 3, [](int, int c) { return c == 2; });
}
Model model_b() {
  return grid("b", 3, 3, [](int r, int c) { return r == 2 && c == 2; });
}
Model model_c() {
  return grid("c", 4, 4, [](int r, int c) { return r >= 2 && r <= 3 && c >= 2 && c <= 3; });
}
Model model_d() {
  return grid("d", 5, 5, [](int r, int c) { return r >= 2 && r <= 4 && c >= 2 && c <= 4; });
}

Model pointed_pairs_model() {
  return Model::from_names({"x1", "x2", "x1'", "x2'"}, {{}, {}, {"p"}, {"q"}}, {{"x1'", "x1"}, {"x2'", "x2"}});
}

Model colour_rows_model() {
  const std::vector<std::string> left{"red", "blue", "green", "yellow"};
  const std::vector<std::string> right{"yellow", "green", "blue", "red", "blue", "green", "yellow"};
  std::vector<std::string> ids;
  std::vector<std::vector<std::string>> atoms;
  std::vector<std::pair<std::string, std::string>> edges;
  auto row = [&](const std::string& prefix, const std::vector<std::string>& colours) {
    for (std::size_t i = 0; i < colours.size(); ++i) {
      ids.push_back(prefix + std::to_string(i + 1));
      atoms.push_back({colours[i]});
      if (i > 0) {
        edges.emplace_back(prefix + std::to_string(i), prefix + std::to_string(i + 1));
        edges.emplace_back(prefix + std::to_string(i + 1), prefix + std::to_string(i));
      }
    }
  };
  row("l", left);
  row("r", right);
  return Model::from_names(ids, atoms, edges);
}

Model two_point_minimal() {
  return Model::from_names({"t1", "t2"}, {{"blue"}, {"red"}},
                           {{"t1", "t1"}, {"t1", "t2"}, {"t2", "t1"}, {"t2", "t2"}});
}

}  // namespace slcs::testing
