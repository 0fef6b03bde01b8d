#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <set>
#include <tuple>

#include "makai/errors.hpp"
#include "makai/fem.hpp"

namespace makai::fem {
namespace {

using Edge = std::pair<int, int>;

Edge make_edge(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

void cell_edges(const std::array<int, 4>& c, int dim, std::vector<Edge>& out) {
  out.clear();
  if (dim == 2) {
    out = {make_edge(c[0], c[1]), make_edge(c[1], c[2]), make_edge(c[0], c[2])};
  } else {
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) out.push_back(make_edge(c[i], c[j]));
  }
}

double cell_measure(const std::vector<Vec>& nodes, const std::array<int, 4>& c,
                    int dim) {
  if (dim == 2)
    return 0.5 * std::abs(cross2(nodes[c[1]] - nodes[c[0]], nodes[c[2]] - nodes[c[0]]));
  return std::abs(dot(nodes[c[1]] - nodes[c[0]],
                      cross(nodes[c[2]] - nodes[c[0]], nodes[c[3]] - nodes[c[0]]))) /
         6.0;
}

void flag_boundary(Mesh& mesh, const geo::ConvexBody& body) {
  mesh.on_boundary.assign(mesh.nodes.size(), false);
  const double eps = 1e-7 * body.diameter;
  for (std::size_t i = 0; i < mesh.nodes.size(); ++i)
    mesh.on_boundary[i] = geo::distance_to_boundary(body, mesh.nodes[i]) <= eps;
}

double mesh_h_max(const Mesh& mesh) {
  double h = 0.0;
  std::vector<Edge> edges;
  for (const auto& c : mesh.cells) {
    cell_edges(c, mesh.dim, edges);
    for (const Edge& e : edges)
      h = std::max(h, dist(mesh.nodes[e.first], mesh.nodes[e.second]));
  }
  return h;
}

// conforming bisection: split the globally longest edge in every cell that
// carries it, repeat until all edges fit under h_target
void bisect_to_target(Mesh& mesh, double h_target, std::size_t node_cap) {
  auto edge_len = [&](const Edge& e) {
    return dist(mesh.nodes[e.first], mesh.nodes[e.second]);
  };

  std::vector<std::array<int, 4>> cells = mesh.cells;
  std::vector<bool> alive(cells.size(), true);
  std::map<Edge, std::vector<int>> incidence;
  // queue keyed by (-length, edge): begin() is always the longest edge
  std::set<std::pair<double, Edge>> queue;
  std::vector<Edge> scratch;

  auto register_cell = [&](int ci) {
    cell_edges(cells[ci], mesh.dim, scratch);
    for (const Edge& e : scratch) {
      auto& list = incidence[e];
      if (list.empty()) queue.insert({-edge_len(e), e});
      list.push_back(ci);
    }
  };
  for (std::size_t i = 0; i < cells.size(); ++i) register_cell(static_cast<int>(i));

  while (!queue.empty()) {
    auto [neg_len, edge] = *queue.begin();
    if (-neg_len <= h_target) break;
    queue.erase(queue.begin());
    auto inc_it = incidence.find(edge);
    if (inc_it == incidence.end()) continue;
    std::vector<int> owners;
    for (int ci : inc_it->second)
      if (alive[ci]) owners.push_back(ci);
    incidence.erase(inc_it);
    if (owners.empty()) continue;

    if (mesh.nodes.size() + 1 > node_cap)
      throw MeshBudgetExceeded("node cap hit during mesh refinement");
    int mid = static_cast<int>(mesh.nodes.size());
    mesh.nodes.push_back(0.5 * (mesh.nodes[edge.first] + mesh.nodes[edge.second]));

    for (int ci : owners) {
      alive[ci] = false;
      // detach from its remaining edges
      cell_edges(cells[ci], mesh.dim, scratch);
      for (const Edge& e : scratch) {
        if (e == edge) continue;
        auto it = incidence.find(e);
        if (it == incidence.end()) continue;
        auto& list = it->second;
        list.erase(std::remove(list.begin(), list.end(), ci), list.end());
        if (list.empty()) {
          queue.erase({-edge_len(e), e});
          incidence.erase(it);
        }
      }
      for (int end : {edge.first, edge.second}) {
        std::array<int, 4> child = cells[ci];
        for (int& v : child)
          if (v == end) v = mid;
        cells.push_back(child);
        alive.push_back(true);
        register_cell(static_cast<int>(cells.size()) - 1);
      }
    }
  }

  mesh.cells.clear();
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (alive[i]) mesh.cells.push_back(cells[i]);
}

}  // namespace

std::size_t node_cap_from_env() {
  if (const char* s = std::getenv("MAKAI_NODE_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    throw InputError("MAKAI_NODE_CAP must be a positive integer");
  }
  return kDefaultNodeCap;
}

Mesh mesh_convex(const geo::ConvexBody& body, double h_target, std::size_t node_cap) {
  if (h_target <= 0.0) throw InputError("mesh size must be positive");
  Mesh mesh;
  mesh.dim = body.dim;
  auto [center, radius] = geo::chebyshev_center(body);
  if (radius <= 0.0) throw DegenerateBody("body has no interior to mesh");

  mesh.nodes = body.vertices;
  int ic = static_cast<int>(mesh.nodes.size());
  mesh.nodes.push_back(center);

  if (body.dim == 2) {
    int V = static_cast<int>(body.vertices.size());
    for (int i = 0; i < V; ++i) mesh.cells.push_back({ic, i, (i + 1) % V, -1});
  } else {
    for (std::size_t f = 0; f < body.facets.size(); ++f) {
      const auto& ring = body.facets[f];
      if (ring.size() == 3) {
        mesh.cells.push_back({ic, ring[0], ring[1], ring[2]});
        continue;
      }
      Vec centroid{};
      for (int v : ring) centroid = centroid + mesh.nodes[v];
      centroid = (1.0 / static_cast<double>(ring.size())) * centroid;
      int fc = static_cast<int>(mesh.nodes.size());
      mesh.nodes.push_back(centroid);
      for (std::size_t i = 0; i < ring.size(); ++i)
        mesh.cells.push_back(
            {ic, fc, ring[i], ring[(i + 1) % ring.size()]});
    }
  }
  for (const auto& c : mesh.cells)
    if (cell_measure(mesh.nodes, c, mesh.dim) <= 0.0)
      throw DegenerateBody("degenerate cell in the initial fan");

  bisect_to_target(mesh, h_target, node_cap);
  mesh.h_max = mesh_h_max(mesh);
  flag_boundary(mesh, body);
  return mesh;
}

Mesh refine_uniform(const Mesh& mesh, const geo::ConvexBody& body,
                    std::size_t node_cap) {
  Mesh fine;
  fine.dim = mesh.dim;
  fine.level = mesh.level + 1;
  fine.nodes = mesh.nodes;
  std::map<Edge, int> midpoint;
  auto mid = [&](int a, int b) {
    Edge e = make_edge(a, b);
    auto it = midpoint.find(e);
    if (it != midpoint.end()) return it->second;
    if (fine.nodes.size() + 1 > node_cap)
      throw MeshBudgetExceeded("node cap hit during uniform refinement");
    int id = static_cast<int>(fine.nodes.size());
    fine.nodes.push_back(0.5 * (fine.nodes[a] + fine.nodes[b]));
    midpoint[e] = id;
    return id;
  };

  for (const auto& c : mesh.cells) {
    if (mesh.dim == 2) {
      int m01 = mid(c[0], c[1]), m12 = mid(c[1], c[2]), m02 = mid(c[0], c[2]);
      fine.cells.push_back({c[0], m01, m02, -1});
      fine.cells.push_back({c[1], m12, m01, -1});
      fine.cells.push_back({c[2], m02, m12, -1});
      fine.cells.push_back({m01, m12, m02, -1});
    } else {
      // sorted corners give a stable diagonal choice for the inner octahedron
      std::array<int, 4> v = c;
      std::sort(v.begin(), v.end());
      int m01 = mid(v[0], v[1]), m02 = mid(v[0], v[2]), m03 = mid(v[0], v[3]);
      int m12 = mid(v[1], v[2]), m13 = mid(v[1], v[3]), m23 = mid(v[2], v[3]);
      fine.cells.push_back({v[0], m01, m02, m03});
      fine.cells.push_back({v[1], m01, m12, m13});
      fine.cells.push_back({v[2], m02, m12, m23});
      fine.cells.push_back({v[3], m03, m13, m23});
      fine.cells.push_back({m01, m02, m03, m13});
      fine.cells.push_back({m01, m02, m12, m13});
      fine.cells.push_back({m02, m03, m13, m23});
      fine.cells.push_back({m02, m12, m13, m23});
    }
  }
  fine.h_max = mesh_h_max(fine);
  flag_boundary(fine, body);
  return fine;
}

// largest interior angle over all triangles (cell faces in 3-D), in radians;
// P1 interpolation constants degrade with the maximum angle, not the aspect
double max_cell_angle(const Mesh& mesh) {
  double worst = 0.0;
  auto tri_angle = [&](int a, int b, int c) {
    for (int rot = 0; rot < 3; ++rot) {
      Vec u = mesh.nodes[b] - mesh.nodes[a];
      Vec v = mesh.nodes[c] - mesh.nodes[a];
      double cosang = dot(u, v) / (norm(u) * norm(v));
      worst = std::max(worst, std::acos(std::clamp(cosang, -1.0, 1.0)));
      std::swap(a, b);
      std::swap(b, c);
    }
  };
  for (const auto& c : mesh.cells) {
    if (mesh.dim == 2) {
      tri_angle(c[0], c[1], c[2]);
    } else {
      tri_angle(c[0], c[1], c[2]);
      tri_angle(c[0], c[1], c[3]);
      tri_angle(c[0], c[2], c[3]);
      tri_angle(c[1], c[2], c[3]);
    }
  }
  return worst;
}

}  // namespace makai::fem
