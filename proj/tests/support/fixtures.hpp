#pragma once

#include <functional>
#include <string>

#include "slcs/closure_space.hpp"
#include "slcs/model.hpp"

namespace slcs::testing {

/// rows x cols grid with symmetric orthodiagonal (or orthogonal) adjacency
/// and atoms red | blue. Ids are prefix + row + col, 1-based; a single-row
/// grid uses prefix + col.
Model grid(const std::string& prefix, int rows, int cols, const std::function<bool(int, int)>& red,
           bool diagonal = true);

Model model_a();  // 1x3, middle red
Model model_b();  // 3x3, centre red
Model model_c();  // 4x4, central 2x2 red
Model model_d();  // 5x5, central 3x3 red

/// x'1 -> x1, x'2 -> x2; x'1 carries p, x'2 carries q, x1 and x2 nothing.
/// Ids "x1", "x2", "x1'", "x2'".
Model pointed_pairs_model();

/// Two components with orthogonal adjacency: a row R B G Y and a row
/// Y G B R B G Y (11 cells). Ids "l1".."l4", "r1".."r7".
Model colour_rows_model();

/// Minimal model with one blue and one red point, each seeing both.
Model two_point_minimal();

}  // namespace slcs::testing
