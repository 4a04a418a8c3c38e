#include "fgcell/dualize.hpp"

namespace fg {

ACoords dual_coords(const ACoords& c) {
  const Triangulation& T = c.chart;
  ACoords d = c;
  for (int i = 0; i < T.num_sides(); ++i) d.side[i] = c.at(T.opposite(Triangulation::side_at(i)));
  for (int t = 0; t < T.num_triangles(); ++t) {
    Scalar fwd(1), bwd(1);
    for (int k = 0; k < 3; ++k) {
      fwd *= c.at({t, k});
      bwd *= c.at(T.opposite({t, k}));
    }
    d.tri[t] = (fwd + bwd) / c.tri[t];
  }
  return d;
}

}  // namespace fg
