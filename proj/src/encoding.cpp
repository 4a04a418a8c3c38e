#include "fgcell/encoding.hpp"

#include <deque>

#include "fgcell/errors.hpp"

namespace fg {

namespace {

// A ribbon graph: darts are sides of kept edges; `next` walks a cell boundary
// counter-clockwise, `opp` crosses the edge.
struct Ribbon {
  std::vector<int> next, opp;
  std::vector<std::string> label;  // per dart payload
};

std::string encode(const Ribbon& g, const SurfaceSignature& sig) {
  const int n = static_cast<int>(g.next.size());
  std::string best;
  for (int start = 0; start < n; ++start) {
    std::vector<int> id(n, -1), order;
    std::deque<int> queue{start};
    id[start] = 0;
    order.push_back(start);
    while (!queue.empty()) {
      int d = queue.front();
      queue.pop_front();
      for (int nb : {g.next[d], g.opp[d]})
        if (id[nb] < 0) {
          id[nb] = static_cast<int>(order.size());
          order.push_back(nb);
          queue.push_back(nb);
        }
    }
    std::string s = "S" + std::to_string(sig.genus) + "," + std::to_string(sig.punctures) + ";";
    for (int d : order) {
      s += std::to_string(id[g.next[d]]) + "," + std::to_string(id[g.opp[d]]);
      if (!g.label[d].empty()) s += ":" + g.label[d];
      s += ";";
    }
    if (start == 0 || s < best) best = std::move(s);
  }
  return best;
}

void check_chart(const Triangulation& tri, const ACoords* coords) {
  if (coords && !(coords->chart == tri))
    throw Error(ErrorCode::ChartMismatch, "coordinates are not on the encoded chart");
}

}  // namespace

std::string canonical_encoding(const Triangulation& tri, const ACoords* coords) {
  check_chart(tri, coords);
  Ribbon g;
  for (int i = 0; i < tri.num_sides(); ++i) {
    Side s = Triangulation::side_at(i);
    g.next.push_back(Triangulation::side_index(rotate(s, 1)));
    g.opp.push_back(Triangulation::side_index(tri.opposite(s)));
    g.label.push_back(coords ? coords->side[i].str() + "|" + coords->tri[s.tri].str() : "");
  }
  return encode(g, tri.signature());
}

std::string canonical_encoding(const CellDecomposition& cell, const ACoords* coords) {
  const Triangulation& T = cell.chart;
  check_chart(T, coords);
  std::vector<int> dart(T.num_sides(), -1);
  std::vector<Side> sides;
  for (int i = 0; i < T.num_sides(); ++i)
    if (cell.kept[T.edge_at(Triangulation::side_at(i))]) {
      dart[i] = static_cast<int>(sides.size());
      sides.push_back(Triangulation::side_at(i));
    }
  Ribbon g;
  for (Side s : sides) {
    // Next kept side along the boundary of the cell containing s.
    Side u = rotate(s, 1);
    while (!cell.kept[T.edge_at(u)]) u = rotate(T.opposite(u), 1);
    g.next.push_back(dart[Triangulation::side_index(u)]);
    g.opp.push_back(dart[Triangulation::side_index(T.opposite(s))]);
    std::string lab;
    if (coords) {
      lab = coords->at(s).str();
      const bool whole = cell.kept[T.edge_at(rotate(s, 1))] && cell.kept[T.edge_at(rotate(s, 2))];
      if (whole) lab += "|" + coords->tri[s.tri].str();
    }
    g.label.push_back(std::move(lab));
  }
  return encode(g, T.signature());
}

}  // namespace fg
