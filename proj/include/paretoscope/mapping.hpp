#pragma once

// Graph-side analysis of a sampled solution mapping: image point clouds,
// connected components, domain structure on the weight grid, closedness
// evidence, and per-component boundedness classification.

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "paretoscope/solver.hpp"

namespace paretoscope {

inline constexpr double kGrowthRatio = 1.3;
inline constexpr double kGrowthFloor = 1.0;

struct ImagePoint {
  std::vector<double> x;
  int weight_index = -1;
};

struct ComponentConfig {
  double eps_link = 1.1;    // direct-link radius between nearby image points
  double core_radius = 2.5; // inf-norm ball where direct linking applies
  double rho = 0.5;         // window-crowding fraction flagging unboundedness
};

struct Component {
  int id = 0;
  std::vector<int> point_indices;
  std::vector<int> inverse_weight_indices;
  bool bounded_at_scale = true;
  bool inverse_closed_at_resolution = true;
};

inline std::vector<ImagePoint> image_points(const GraphSample& g) {
  std::vector<ImagePoint> pts;
  for (std::size_t w = 0; w < g.outcomes.size(); ++w) {
    const SolveOutcome& out = g.outcomes[w];
    if (out.kind != SolveOutcome::Kind::Minimizers) continue;
    for (const auto& x : out.points) pts.push_back({x, static_cast<int>(w)});
  }
  return pts;
}

inline std::vector<int> dom_weight_indices(const GraphSample& g) {
  std::vector<int> idx;
  for (std::size_t w = 0; w < g.outcomes.size(); ++w)
    if (g.outcomes[w].kind == SolveOutcome::Kind::Minimizers) idx.push_back(static_cast<int>(w));
  return idx;
}

// Weights whose sampled value set stayed inside the window.
inline std::vector<int> bounded_value_weights(const GraphSample& g) {
  std::vector<int> idx;
  for (std::size_t w = 0; w < g.outcomes.size(); ++w)
    if (g.outcomes[w].kind == SolveOutcome::Kind::Minimizers &&
        !g.outcomes[w].value_unbounded_set)
      idx.push_back(static_cast<int>(w));
  return idx;
}

// Grid neighbors differ by moving one lattice unit between two coordinates.
inline bool weights_grid_adjacent(const Weight& a, const Weight& b) {
  if (a.lattice.empty() || a.lattice.size() != b.lattice.size()) return false;
  int plus = 0, minus = 0, diff = 0;
  for (std::size_t i = 0; i < a.lattice.size(); ++i) {
    int d = a.lattice[i] - b.lattice[i];
    if (d == 0) continue;
    ++diff;
    if (d == 1) ++plus;
    else if (d == -1) ++minus;
    else return false;
  }
  return diff == 2 && plus == 1 && minus == 1;
}

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

} // namespace detail

// Plain epsilon-graph components over a point cloud.
inline std::vector<std::vector<int>> connected_components(
    const std::vector<std::vector<double>>& pts, double eps_link) {
  detail::UnionFind uf(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (dist_2(pts[i], pts[j]) <= eps_link) uf.unite(static_cast<int>(i), static_cast<int>(j));
  std::map<int, std::vector<int>> by_root;
  for (std::size_t i = 0; i < pts.size(); ++i)
    by_root[uf.find(static_cast<int>(i))].push_back(static_cast<int>(i));
  std::vector<std::vector<int>> comps;
  for (auto& [root, members] : by_root) comps.push_back(std::move(members));
  return comps;
}

// Image components of a sampled graph. Near the origin (the core) points are
// linked directly at eps_link. Outer points are attached one by one, closest
// first, each to its nearest already-placed anchor that is structurally
// reachable: a point at a neighboring grid weight whose value set stayed
// bounded, or a point at the same weight when this point's own value set is
// unbounded (so discretized rays chain outward). Distances are never capped;
// outer points with no anchor start new components.
inline std::vector<Component> build_components(const GraphSample& g,
                                               const std::vector<ImagePoint>& image,
                                               const ComponentConfig& cc = {}) {
  const std::size_t n = image.size();
  detail::UnionFind uf(n);
  std::vector<char> assigned(n, 0);

  std::vector<int> core;
  for (std::size_t i = 0; i < n; ++i)
    if (norm_inf(image[i].x) <= cc.core_radius) core.push_back(static_cast<int>(i));
  for (std::size_t a = 0; a < core.size(); ++a)
    for (std::size_t b = a + 1; b < core.size(); ++b)
      if (dist_2(image[core[a]].x, image[core[b]].x) <= cc.eps_link)
        uf.unite(core[a], core[b]);
  for (int i : core) assigned[i] = 1;

  std::vector<int> outer;
  for (std::size_t i = 0; i < n; ++i)
    if (!assigned[i]) outer.push_back(static_cast<int>(i));
  std::sort(outer.begin(), outer.end(), [&](int a, int b) {
    double na = norm_2(image[a].x), nb = norm_2(image[b].x);
    if (na != nb) return na < nb;
    if (image[a].weight_index != image[b].weight_index)
      return image[a].weight_index < image[b].weight_index;
    return detail::lex_less(image[a].x, image[b].x);
  });

  for (int r : outer) {
    const int wr = image[r].weight_index;
    const bool own_vus = g.outcomes[wr].value_unbounded_set;
    int best = -1;
    double best_d = kInf;
    for (std::size_t i = 0; i < n; ++i) {
      if (!assigned[i]) continue;
      const int wi = image[i].weight_index;
      bool eligible;
      if (wi == wr) {
        eligible = own_vus;
      } else {
        eligible = weights_grid_adjacent(g.weights[wr], g.weights[wi]) &&
                   !g.outcomes[wi].value_unbounded_set;
      }
      if (!eligible) continue;
      double d = dist_2(image[r].x, image[i].x);
      if (d < best_d) {
        best_d = d;
        best = static_cast<int>(i);
      }
    }
    if (best >= 0) uf.unite(r, best);
    assigned[r] = 1;
  }

  std::map<int, Component> by_root;
  for (std::size_t i = 0; i < n; ++i)
    by_root[uf.find(static_cast<int>(i))].point_indices.push_back(static_cast<int>(i));

  std::vector<Component> comps;
  for (auto& [root, c] : by_root) comps.push_back(std::move(c));
  auto lex_min = [&](const Component& c) {
    const std::vector<double>* best = &image[c.point_indices.front()].x;
    for (int i : c.point_indices)
      if (detail::lex_less(image[i].x, *best)) best = &image[i].x;
    return *best;
  };
  std::sort(comps.begin(), comps.end(), [&](const Component& a, const Component& b) {
    if (a.point_indices.size() != b.point_indices.size())
      return a.point_indices.size() > b.point_indices.size();
    return detail::lex_less(lex_min(a), lex_min(b));
  });
  for (std::size_t c = 0; c < comps.size(); ++c) {
    comps[c].id = static_cast<int>(c);
    std::vector<int>& ws = comps[c].inverse_weight_indices;
    for (int i : comps[c].point_indices) ws.push_back(image[i].weight_index);
    std::sort(ws.begin(), ws.end());
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
  }
  return comps;
}

inline std::vector<std::vector<int>> domain_components(const GraphSample& g) {
  std::vector<int> dom = dom_weight_indices(g);
  detail::UnionFind uf(dom.size());
  for (std::size_t a = 0; a < dom.size(); ++a)
    for (std::size_t b = a + 1; b < dom.size(); ++b)
      if (weights_grid_adjacent(g.weights[dom[a]], g.weights[dom[b]]))
        uf.unite(static_cast<int>(a), static_cast<int>(b));
  std::map<int, std::vector<int>> by_root;
  for (std::size_t i = 0; i < dom.size(); ++i)
    by_root[uf.find(static_cast<int>(i))].push_back(dom[i]);
  std::vector<std::vector<int>> comps;
  for (auto& [root, members] : by_root) comps.push_back(std::move(members));
  return comps;
}

inline double max_point_norm2(const GraphSample& g, int weight_index) {
  double m = 0.0;
  for (const auto& x : g.outcomes[weight_index].points) m = std::max(m, norm_2(x));
  return m;
}

// Evidence that the mapping's domain is not closed: an escaping weight whose
// value sets at the two nearest in-domain grid weights in some direction grow
// sharply toward it. Weights with unbounded value sets end such a probe.
struct GrowthWitness {
  int escaping_index = -1;
  int dir_i = 0, dir_j = 0;  // lattice step e_i - e_j toward the domain
  int u_index = -1, u2_index = -1;
  double r1 = 0.0, r2 = 0.0;
};

struct DomainClosedness {
  bool closed_observed = true;
  std::vector<GrowthWitness> witnesses;
};

namespace detail {

inline std::map<std::vector<int>, int> lattice_index(const std::vector<Weight>& weights) {
  std::map<std::vector<int>, int> idx;
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (!weights[i].lattice.empty()) idx[weights[i].lattice] = static_cast<int>(i);
  return idx;
}

inline bool bounded_dom_entry(const GraphSample& g, int w) {
  return g.outcomes[w].kind == SolveOutcome::Kind::Minimizers &&
         !g.outcomes[w].value_unbounded_set;
}

} // namespace detail

inline DomainClosedness domain_closedness(const GraphSample& g) {
  DomainClosedness res;
  if (g.weights.empty() || g.weights.front().lattice.empty()) return res;
  const int m = static_cast<int>(g.weights.front().lattice.size());
  auto at = detail::lattice_index(g.weights);

  auto neighbor = [&](int w, int i, int j, int steps) -> int {
    std::vector<int> k = g.weights[w].lattice;
    k[i] += steps;
    k[j] -= steps;
    if (k[i] < 0 || k[j] < 0) return -1;
    auto it = at.find(k);
    return it == at.end() ? -1 : it->second;
  };

  for (std::size_t w = 0; w < g.outcomes.size(); ++w) {
    if (g.outcomes[w].kind != SolveOutcome::Kind::Escaping) continue;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        if (i == j) continue;
        int u = neighbor(static_cast<int>(w), i, j, 1);
        int u2 = neighbor(static_cast<int>(w), i, j, 2);
        if (u < 0 || u2 < 0) continue;
        if (!detail::bounded_dom_entry(g, u) || !detail::bounded_dom_entry(g, u2)) continue;
        double r1 = max_point_norm2(g, u);
        double r2 = max_point_norm2(g, u2);
        if (r1 > r2 && r1 >= kGrowthRatio * r2 && r1 >= kGrowthFloor) {
          res.witnesses.push_back({static_cast<int>(w), i, j, u, u2, r1, r2});
          res.closed_observed = false;
        }
      }
    }
  }
  return res;
}

// Flag components whose sampled points behave unboundedly: they crowd their
// solve window, contain an unbounded value set, or abut a growth-witnessed
// escaping weight.
inline void classify_boundedness(const GraphSample& g, const std::vector<ImagePoint>& image,
                                 std::vector<Component>& comps, const DomainClosedness& dc,
                                 double rho = 0.5) {
  for (Component& c : comps) {
    c.bounded_at_scale = true;
    for (int i : c.point_indices) {
      double used = g.outcomes[image[i].weight_index].window_radius_used;
      if (used > 0.0 && norm_inf(image[i].x) >= rho * used) {
        c.bounded_at_scale = false;
        break;
      }
    }
    if (c.bounded_at_scale) {
      for (int w : c.inverse_weight_indices)
        if (g.outcomes[w].value_unbounded_set) {
          c.bounded_at_scale = false;
          break;
        }
    }
  }
  for (const GrowthWitness& gw : dc.witnesses) {
    for (Component& c : comps) {
      if (std::binary_search(c.inverse_weight_indices.begin(), c.inverse_weight_indices.end(),
                             gw.u_index))
        c.bounded_at_scale = false;
    }
  }
}

// Localized growth probe of one component's inverse image: along its own
// weight runs, value sets must not blow up toward a weight outside of it.
inline void classify_inverse_closedness(const GraphSample& g, std::vector<Component>& comps) {
  if (g.weights.empty() || g.weights.front().lattice.empty()) return;
  const int m = static_cast<int>(g.weights.front().lattice.size());
  auto at = detail::lattice_index(g.weights);

  for (Component& c : comps) {
    auto member = [&](int w) {
      return std::binary_search(c.inverse_weight_indices.begin(),
                                c.inverse_weight_indices.end(), w);
    };
    c.inverse_closed_at_resolution = true;
    for (int w : c.inverse_weight_indices) {
      if (!detail::bounded_dom_entry(g, w)) continue;
      for (int i = 0; i < m && c.inverse_closed_at_resolution; ++i) {
        for (int j = 0; j < m; ++j) {
          if (i == j) continue;
          std::vector<int> k = g.weights[w].lattice;
          k[i] += 1;
          k[j] -= 1;
          if (k[j] < 0) continue;
          auto it = at.find(k);
          if (it != at.end() && member(it->second)) continue;  // interior of the run
          // w borders a non-member weight in direction (i,j); probe backwards
          std::vector<int> back = g.weights[w].lattice;
          back[i] -= 1;
          back[j] += 1;
          if (back[i] < 0) continue;
          auto bit = at.find(back);
          if (bit == at.end() || !member(bit->second)) continue;
          if (!detail::bounded_dom_entry(g, bit->second)) continue;
          double r1 = max_point_norm2(g, w);
          double r2 = max_point_norm2(g, bit->second);
          if (r1 > r2 && r1 >= kGrowthRatio * r2 && r1 >= kGrowthFloor) {
            c.inverse_closed_at_resolution = false;
            break;
          }
        }
      }
      if (!c.inverse_closed_at_resolution) break;
    }
  }
}

struct ValueConnectivity {
  bool all_connected = true;
  std::vector<int> disconnected_weights;
};

inline ValueConnectivity values_connected_each_weight(const GraphSample& g, double eps_link) {
  ValueConnectivity vc;
  for (std::size_t w = 0; w < g.outcomes.size(); ++w) {
    const SolveOutcome& out = g.outcomes[w];
    if (out.kind != SolveOutcome::Kind::Minimizers || out.points.size() <= 1) continue;
    if (connected_components(out.points, eps_link).size() > 1) {
      vc.all_connected = false;
      vc.disconnected_weights.push_back(static_cast<int>(w));
    }
  }
  return vc;
}

inline bool single_valued_on_dom(const GraphSample& g, double tol = 1e-6) {
  bool any = false;
  for (const SolveOutcome& out : g.outcomes) {
    if (out.kind != SolveOutcome::Kind::Minimizers) continue;
    if (out.points.empty()) return false;
    any = true;
    for (std::size_t a = 1; a < out.points.size(); ++a)
      if (dist_2(out.points[a], out.points[0]) > tol) return false;
  }
  return any;
}

// ---- set distances (oracle comparisons, tests) --------------------------

inline double hausdorff(const std::vector<std::vector<double>>& A,
                        const std::vector<std::vector<double>>& B) {
  if (A.empty() || B.empty()) return A.empty() && B.empty() ? 0.0 : kInf;
  double h = 0.0;
  for (const auto& a : A) {
    double d = kInf;
    for (const auto& b : B) d = std::min(d, dist_2(a, b));
    h = std::max(h, d);
  }
  for (const auto& b : B) {
    double d = kInf;
    for (const auto& a : A) d = std::min(d, dist_2(a, b));
    h = std::max(h, d);
  }
  return h;
}

inline double point_segment_distance(const std::vector<double>& p, const std::vector<double>& a,
                                     const std::vector<double>& b) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    num += (p[i] - a[i]) * (b[i] - a[i]);
    den += (b[i] - a[i]) * (b[i] - a[i]);
  }
  double t = den > 0.0 ? std::clamp(num / den, 0.0, 1.0) : 0.0;
  std::vector<double> q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[i] = a[i] + t * (b[i] - a[i]);
  return dist_2(p, q);
}

inline double point_box_distance(const std::vector<double>& p, const std::vector<double>& lo,
                                 const std::vector<double>& hi) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    double d = 0.0;
    if (p[i] < lo[i]) d = lo[i] - p[i];
    else if (p[i] > hi[i]) d = p[i] - hi[i];
    s += d * d;
  }
  return std::sqrt(s);
}

} // namespace paretoscope
