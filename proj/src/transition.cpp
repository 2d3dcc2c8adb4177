#include "gehm/transition.hpp"

#include "gehm/error.hpp"

#include <sstream>

namespace gehm {

MedialMap medial_map(const Gehm& g) {
  MedialMap m;
  const auto es = hyperedges(g);
  m.vertices.reserve(es.size());
  for (std::size_t i = 0; i < es.size(); ++i) {
    const auto& cyc = es[i].vertices;
    const std::size_t len = cyc.size();
    MedialVertex w;
    w.hyperedge = i;
    // The cycle reads w0 -b- w1 -r- w2 -b- ...; starting at w1 puts an r-edge
    // (grey gap) between h_0 and h_1.
    for (std::size_t j = 0; j < len; ++j) {
      w.half_edges.push_back(cyc[(j + 1) % len]);
      w.gaps.push_back(j % 2 == 0 ? FaceType::grey : FaceType::white);
    }
    m.vertices.push_back(std::move(w));
  }
  const auto gm = g.matching(Color::g);
  m.edge_partner.assign(gm.begin(), gm.end());
  m.free_loops = g.isolates();
  return m;
}

namespace {

Pairing pairing_across(const MedialVertex& w, FaceType gap) {
  const std::size_t len = w.degree();
  Pairing p(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    if (w.gaps[i] != gap) continue;
    const std::size_t j = (i + 1) % len;
    p[i] = static_cast<std::uint8_t>(j);
    p[j] = static_cast<std::uint8_t>(i);
  }
  return p;
}

bool is_pairing(const Pairing& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] >= p.size() || p[i] == i || p[p[i]] != i) return false;
  }
  return true;
}

void pairings_rec(Pairing& current, std::vector<bool>& used, std::vector<Pairing>& out) {
  std::size_t first = 0;
  while (first < used.size() && used[first]) ++first;
  if (first == used.size()) {
    out.push_back(current);
    return;
  }
  used[first] = true;
  for (std::size_t j = first + 1; j < used.size(); ++j) {
    if (used[j]) continue;
    used[j] = true;
    current[first] = static_cast<std::uint8_t>(j);
    current[j] = static_cast<std::uint8_t>(first);
    pairings_rec(current, used, out);
    used[j] = false;
  }
  used[first] = false;
}

}  // namespace

Pairing c_pairing(const MedialVertex& w) { return pairing_across(w, FaceType::white); }
Pairing d_pairing(const MedialVertex& w) { return pairing_across(w, FaceType::grey); }

GraphState cd_state(const MedialMap& m, const std::vector<bool>& contracted) {
  if (contracted.size() != m.vertices.size()) throw InvalidArgument("state flags do not match the medial map");
  GraphState s;
  for (std::size_t i = 0; i < m.vertices.size(); ++i)
    s.pairings.push_back(contracted[i] ? c_pairing(m.vertices[i]) : d_pairing(m.vertices[i]));
  return s;
}

std::vector<Pairing> all_pairings(std::size_t positions) {
  std::vector<Pairing> out;
  if (positions % 2 != 0) return out;
  Pairing current(positions, 0);
  std::vector<bool> used(positions, false);
  pairings_rec(current, used, out);
  return out;
}

std::size_t smooth_count(const MedialMap& m, const GraphState& s) {
  if (s.pairings.size() != m.vertices.size()) {
    throw InvalidArgument("incomplete state: " + std::to_string(s.pairings.size()) + " vertex states for " +
                          std::to_string(m.vertices.size()) + " medial vertices");
  }
  const std::size_t n = m.edge_partner.size();
  std::vector<Vertex> smoothed(n, 0);
  for (std::size_t i = 0; i < m.vertices.size(); ++i) {
    const auto& w = m.vertices[i];
    const auto& p = s.pairings[i];
    if (p.size() != w.degree() || !is_pairing(p)) {
      throw InvalidArgument("incomplete state: invalid pairing at medial vertex " + std::to_string(i));
    }
    for (std::size_t j = 0; j < p.size(); ++j) smoothed[w.half_edges[j]] = w.half_edges[p[j]];
  }
  std::vector<bool> seen(n, false);
  std::size_t loops = m.free_loops;
  for (Vertex h = 0; h < n; ++h) {
    if (seen[h]) continue;
    ++loops;
    Vertex x = h;
    do {
      seen[x] = true;
      const Vertex y = m.edge_partner[x];
      seen[y] = true;
      x = smoothed[y];
    } while (x != h);
  }
  return loops;
}

WeightSystem from_pair_weights(const MedialMap& m, const std::vector<PairWeightTable>& tables,
                               const Limits& limits) {
  if (tables.size() != m.vertices.size()) throw InvalidArgument("one pair weight table per medial vertex required");
  WeightSystem ws;
  for (std::size_t i = 0; i < m.vertices.size(); ++i) {
    const std::size_t deg = m.vertices[i].degree();
    if (deg > limits.max_vertex_degree) {
      throw GuardExceeded("medial vertex of degree " + std::to_string(deg) + " exceeds the state enumeration limit " +
                          std::to_string(limits.max_vertex_degree));
    }
    const auto& table = tables[i];
    if (table.size() != deg) throw InvalidArgument("pair weight table has the wrong size");
    VertexWeights vw;
    for (auto& p : all_pairings(deg)) {
      MultiPoly w = MultiPoly::constant(1);
      for (std::size_t a = 0; a < deg && !w.is_zero(); ++a)
        if (a < p[a]) w *= table[a].at(p[a]);
      if (!w.is_zero()) vw.states.emplace_back(std::move(p), std::move(w));
    }
    ws.vertices.push_back(std::move(vw));
  }
  return ws;
}

MultiPoly transition_poly(const MedialMap& m, const WeightSystem& weights, const std::string& loop_var) {
  const std::size_t count = m.vertices.size();
  if (weights.vertices.size() != count) throw InvalidArgument("weight system does not match the medial map");
  for (const auto& vw : weights.vertices)
    if (vw.states.empty()) return {};

  // Odometer over the supported states of every vertex.
  std::vector<std::size_t> digit(count, 0);
  GraphState s;
  s.pairings.resize(count);
  MultiPoly total;
  while (true) {
    MultiPoly w = MultiPoly::constant(1);
    for (std::size_t i = 0; i < count; ++i) {
      const auto& [pairing, weight] = weights.vertices[i].states[digit[i]];
      s.pairings[i] = pairing;
      w *= weight;
    }
    total += w * MultiPoly::variable(loop_var, static_cast<int>(smooth_count(m, s)));
    std::size_t i = 0;
    while (i < count && ++digit[i] == weights.vertices[i].states.size()) digit[i++] = 0;
    if (i == count) break;
  }
  return total;
}

namespace {

WeightSystem medial_weights(const Gehm& g, bool per_edge) {
  const MedialMap m = medial_map(g);
  WeightSystem ws;
  for (const auto& w : m.vertices) {
    VertexWeights vw;
    const int d = static_cast<int>(w.degree() / 2);
    if (d == 1) {
      vw.states.emplace_back(d_pairing(w), MultiPoly::constant(2));
    } else {
      const std::string u = per_edge ? edge_variable(w.hyperedge) : std::string("u");
      vw.states.emplace_back(c_pairing(w), MultiPoly::variable(u, d - 1));
      vw.states.emplace_back(d_pairing(w), MultiPoly::constant(1));
    }
    ws.vertices.push_back(std::move(vw));
  }
  return ws;
}

}  // namespace

WeightSystem omega_m(const Gehm& g) { return medial_weights(g, false); }

WeightSystem omega_m_multivariate(const Gehm& g) { return medial_weights(g, true); }

MultiPoly phi_m(const Gehm& g) { return transition_poly(medial_map(g), omega_m(g), "v"); }

WeightSystem omega_t(const Gehm& g, const MultiPoly& alpha, const MultiPoly& beta, const MultiPoly& gamma) {
  const MedialMap m = medial_map(g);
  WeightSystem ws;
  for (const auto& w : m.vertices) {
    if (w.degree() != 4) {
      throw InvalidArgument("omega_t needs a gem: hyperedge " + std::to_string(w.hyperedge) + " has degree " +
                            std::to_string(w.degree() / 2));
    }
    VertexWeights vw;
    const Pairing crossing{2, 3, 0, 1};
    for (auto [p, weight] : {std::pair{c_pairing(w), alpha}, std::pair{d_pairing(w), beta}, std::pair{crossing, gamma}})
      if (!weight.is_zero()) vw.states.emplace_back(std::move(p), std::move(weight));
    ws.vertices.push_back(std::move(vw));
  }
  return ws;
}

std::string dump_medial(const MedialMap& m) {
  std::ostringstream out;
  out << "medial vertices: " << m.vertices.size() << "\n";
  for (const auto& w : m.vertices) {
    out << "w" << w.hyperedge << " degree " << w.degree() << ":";
    for (std::size_t i = 0; i < w.degree(); ++i)
      out << ' ' << w.half_edges[i] << (w.gaps[i] == FaceType::grey ? " [grey]" : " [white]");
    out << "\n";
  }
  out << "edges:";
  for (Vertex h = 0; h < m.edge_partner.size(); ++h)
    if (h < m.edge_partner[h]) out << ' ' << h << '-' << m.edge_partner[h];
  out << "\nfree loops: " << m.free_loops << "\n";
  return out.str();
}

}  // namespace gehm
