#pragma once

#include <vector>

#include "heg/presheaf.hpp"

namespace heg {

// The terminal presheaf: a single element everywhere.
SetPresheaf make_terminal_presheaf();

// Arc orientations, encoded one character per edge ('+' orients the even
// arc forward); a target arc inherits the orientation of its source arc.
SetPresheaf make_orientation_presheaf();

// Vertex labellings by 0..label_bound (a bounded window on the infinite
// set), encoded "l0,l1,..."; pushforward adds the fiber's Betti number to
// the fiber label sum and reports LABEL_OVERFLOW past the bound.
SetPresheaf make_grading_presheaf(int label_bound);

// A finite commutative monoid: op[i][j] with identity `unit`.
struct MonoidTable {
  int size = 0;
  std::vector<std::vector<int>> op;
  int unit = 0;
};

// Vertex labellings by monoid elements; pushforward multiplies over fibers
// (Betti numbers ignored). Throws BAD_MONOID on an invalid table.
SetPresheaf make_monoid_presheaf(const MonoidTable& table);

// One colour of the linear presheaf: a vector space dimension and a
// symmetric invertible bilinear form over F_p.
struct LinearColour {
  int dim = 0;
  std::vector<std::vector<int>> form;
};

// The endomorphism-style presheaf over F_p: an element is an edge
// colouring plus a dense tensor per vertex over its incident arcs.
// Contraction goes through the forms, subdivision inserts copairings.
// Throws BAD_FORM on a non-symmetric or singular form.
SetPresheaf make_linear_presheaf(long p, std::vector<LinearColour> colours);

}  // namespace heg
