#include "p6c4/patterns.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "p6c4/error.hpp"

namespace p6c4 {
namespace {

// Pattern vertices in BFS order, each component started at its highest
// degree vertex, so that most positions have a matched neighbor.
std::vector<VertexId> search_order(const Graph& pattern) {
  const int k = pattern.order();
  std::vector<VertexId> order;
  std::vector<char> seen(k, 0);
  while (static_cast<int>(order.size()) < k) {
    VertexId start = -1;
    for (VertexId v = 0; v < k; ++v) {
      if (!seen[v] && (start < 0 || pattern.degree(v) > pattern.degree(start))) start = v;
    }
    seen[start] = 1;
    std::size_t head = order.size();
    order.push_back(start);
    while (head < order.size()) {
      const VertexId v = order[head++];
      for (VertexId u : pattern.neighbors(v)) {
        if (!seen[u]) {
          seen[u] = 1;
          order.push_back(u);
        }
      }
    }
  }
  return order;
}

class InducedMatcher {
 public:
  InducedMatcher(const Graph& host, const Graph& pattern)
      : host_(host), pattern_(pattern), order_(search_order(pattern)) {
    const int n = host.order();
    const int k = pattern.order();
    image_.assign(k, -1);
    candidates_.assign(k, Bitset(n));
    used_ = Bitset(n);
    min_degree_ok_.assign(k, Bitset(n));
    for (int i = 0; i < k; ++i) {
      const int need = pattern.degree(order_[i]);
      for (VertexId v = 0; v < n; ++v) {
        if (host.degree(v) >= need) min_degree_ok_[i].set(v);
      }
    }
  }

  std::optional<InducedEmbedding> run() {
    if (pattern_.order() > host_.order()) return std::nullopt;
    if (!extend(0)) return std::nullopt;
    return image_;
  }

 private:
  bool extend(int depth) {
    const int k = pattern_.order();
    if (depth == k) return true;
    const VertexId p = order_[depth];
    Bitset& cand = candidates_[depth];
    cand = min_degree_ok_[depth];
    cand -= used_;
    for (int j = 0; j < depth && cand.any(); ++j) {
      const VertexId q = order_[j];
      if (pattern_.adjacent(p, q)) {
        cand &= host_.row(image_[q]);
      } else {
        cand -= host_.row(image_[q]);
      }
    }
    for (auto v = cand.find_first(); v != Bitset::npos; v = cand.find_next(v)) {
      image_[p] = static_cast<VertexId>(v);
      used_.set(v);
      if (extend(depth + 1)) return true;
      used_.reset(v);
    }
    image_[p] = -1;
    return false;
  }

  const Graph& host_;
  const Graph& pattern_;
  std::vector<VertexId> order_;
  std::vector<VertexId> image_;
  std::vector<Bitset> candidates_;
  std::vector<Bitset> min_degree_ok_;
  Bitset used_;
};

std::vector<int> sorted_degrees(const Graph& g) {
  std::vector<int> d(g.order());
  for (VertexId v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

Bitset closed_row(const Graph& g, VertexId v) {
  Bitset r = g.row(v);
  r.set(v);
  return r;
}

// Depth-first search over induced k-cycles with v0 the smallest vertex.
// `visit` returns false to stop the search.
void search_cycles(const Graph& g, int k, bool canonical,
                   const std::function<bool(const std::vector<VertexId>&)>& visit) {
  const int n = g.order();
  if (k < 3 || n < k) return;
  std::vector<VertexId> path(k);
  // far[i] = N[path[1]] | ... | N[path[i-2]]: vertices path[i] must avoid.
  std::vector<Bitset> far(k, Bitset(n));
  Bitset above(n);
  bool stop = false;

  std::function<void(int)> grow = [&](int i) {
    Bitset cand = g.row(path[i - 1]) & above;
    cand -= far[i];
    if (i == k - 1) {
      cand &= g.row(path[0]);
    } else if (i >= 2) {
      cand -= g.row(path[0]);
    }
    for (auto v = cand.find_first(); v != Bitset::npos && !stop; v = cand.find_next(v)) {
      path[i] = static_cast<VertexId>(v);
      if (i == k - 1) {
        if (canonical && path[i] < path[1]) continue;
        if (!visit(path)) stop = true;
        continue;
      }
      far[i + 1] = far[i];
      if (i >= 2) far[i + 1] |= closed_row(g, path[i - 1]);
      grow(i + 1);
    }
  };

  for (VertexId s = 0; s < n && !stop; ++s) {
    above.reset();
    for (VertexId v = s + 1; v < n; ++v) above.set(v);
    path[0] = s;
    far[1].reset();
    far[2].reset();
    grow(1);
  }
}

}  // namespace

std::optional<InducedEmbedding> contains_induced(const Graph& host, const Graph& pattern) {
  return InducedMatcher(host, pattern).run();
}

bool is_induced_embedding(const Graph& host, const Graph& pattern, const InducedEmbedding& embedding) {
  const int k = pattern.order();
  if (static_cast<int>(embedding.size()) != k) return false;
  for (VertexId v : embedding) {
    if (!host.contains(v)) return false;
  }
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      if (embedding[a] == embedding[b]) return false;
      if (pattern.adjacent(a, b) != host.adjacent(embedding[a], embedding[b])) return false;
    }
  }
  return true;
}

std::optional<InducedEmbedding> find_isomorphism(const Graph& g, const Graph& pattern) {
  if (g.order() != pattern.order() || g.size() != pattern.size()) return std::nullopt;
  if (sorted_degrees(g) != sorted_degrees(pattern)) return std::nullopt;
  return contains_induced(g, pattern);
}

namespace {

std::optional<std::vector<VertexId>> c4_search(const Graph& g) {
  const int n = g.order();
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId c = a + 1; c < n; ++c) {
      if (g.adjacent(a, c)) continue;
      const Bitset common = g.row(a) & g.row(c);
      if (common.count() < 2) continue;
      for (auto b = common.find_first(); b != Bitset::npos; b = common.find_next(b)) {
        Bitset others = common - g.row(static_cast<VertexId>(b));
        others.reset(b);
        const auto d = others.find_first();
        if (d != Bitset::npos) {
          return std::vector<VertexId>{a, static_cast<VertexId>(b), c, static_cast<VertexId>(d)};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::vector<VertexId>> p6_search(const Graph& g) {
  constexpr int kLength = 6;
  const int n = g.order();
  if (n < kLength) return std::nullopt;
  std::vector<VertexId> path(kLength);
  std::vector<Bitset> blocked(kLength, Bitset(n));

  // blocked[i] holds N[path[0..i-2]], which path[i] must avoid.
  std::function<bool(int)> grow = [&](int i) {
    Bitset cand = g.row(path[i - 1]) - blocked[i];
    for (auto v = cand.find_first(); v != Bitset::npos; v = cand.find_next(v)) {
      const auto w = static_cast<VertexId>(v);
      if (i == kLength - 1) {
        // Each path is found from both ends; keep the one starting lower.
        if (w < path[0]) continue;
        path[i] = w;
        return true;
      }
      path[i] = w;
      blocked[i + 1] = blocked[i];
      blocked[i + 1] |= g.row(path[i - 1]);
      blocked[i + 1].set(path[i - 1]);
      if (grow(i + 1)) return true;
    }
    return false;
  };

  for (VertexId s = 0; s < n; ++s) {
    path[0] = s;
    blocked[1].reset();
    blocked[1].set(s);
    if (grow(1)) return path;
  }
  return std::nullopt;
}

// Two true twins never both lie on an induced C4 or P6, so both searches
// run on one representative per closed neighborhood.
template <class Search>
std::optional<std::vector<VertexId>> on_twin_quotient(const Graph& g, Search search) {
  std::map<Bitset, VertexId> seen;
  VertexSet reps;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (seen.emplace(closed_row(g, v), v).second) reps.push_back(v);
  }
  if (static_cast<int>(reps.size()) == g.order()) return search(g);
  const auto [quotient, map] = induced_subgraph(g, reps);
  auto found = search(quotient);
  if (found) {
    for (auto& v : *found) v = map.new_to_old[v];
  }
  return found;
}

}  // namespace

std::optional<std::vector<VertexId>> find_induced_c4(const Graph& g) { return on_twin_quotient(g, c4_search); }

std::optional<std::vector<VertexId>> find_induced_p6(const Graph& g) { return on_twin_quotient(g, p6_search); }

bool is_c4_free(const Graph& g) { return !find_induced_c4(g).has_value(); }
bool is_p6_free(const Graph& g) { return !find_induced_p6(g).has_value(); }
bool is_p6_c4_free(const Graph& g) { return is_c4_free(g) && is_p6_free(g); }

std::optional<std::vector<VertexId>> find_induced_cycle(const Graph& g, int k) {
  if (k < 4 || k > 6) throw InvalidArgument("induced cycle length must be 4, 5 or 6");
  std::optional<std::vector<VertexId>> found;
  search_cycles(g, k, false, [&](const std::vector<VertexId>& c) {
    found = c;
    return false;
  });
  return found;
}

std::vector<std::vector<VertexId>> enumerate_induced_cycles(const Graph& g, int k, std::size_t limit) {
  if (k < 3) throw InvalidArgument("cycle length must be at least 3");
  std::vector<std::vector<VertexId>> out;
  if (limit == 0) return out;
  search_cycles(g, k, true, [&](const std::vector<VertexId>& c) {
    out.push_back(c);
    return out.size() < limit;
  });
  return out;
}

bool is_induced_cycle(const Graph& g, const std::vector<VertexId>& cycle) {
  const int k = static_cast<int>(cycle.size());
  if (k < 3) return false;
  for (int i = 0; i < k; ++i) {
    if (!g.contains(cycle[i])) return false;
    for (int j = i + 1; j < k; ++j) {
      if (cycle[i] == cycle[j]) return false;
      const bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
      if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
    }
  }
  return true;
}

std::vector<VertexId> lex_bfs_order(const Graph& g) {
  const int n = g.order();
  // Ordered partition of the unvisited vertices; the front class holds the
  // vertices with the lexicographically largest labels.
  std::vector<std::vector<VertexId>> classes;
  if (n > 0) {
    classes.emplace_back(n);
    std::iota(classes.back().begin(), classes.back().end(), 0);
  }
  std::vector<VertexId> order;
  order.reserve(n);
  while (!classes.empty()) {
    auto& front = classes.front();
    const VertexId v = front.front();
    front.erase(front.begin());
    if (front.empty()) classes.erase(classes.begin());
    order.push_back(v);
    std::vector<std::vector<VertexId>> refined;
    refined.reserve(classes.size() * 2);
    for (auto& cls : classes) {
      std::vector<VertexId> in, out;
      for (VertexId u : cls) (g.adjacent(v, u) ? in : out).push_back(u);
      if (!in.empty()) refined.push_back(std::move(in));
      if (!out.empty()) refined.push_back(std::move(out));
    }
    classes = std::move(refined);
  }
  return order;
}

bool is_perfect_elimination_ordering(const Graph& g, const std::vector<VertexId>& order) {
  const int n = g.order();
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    if (!g.contains(order[i]) || pos[order[i]] != -1) return false;
    pos[order[i]] = i;
  }
  for (int i = 0; i < n; ++i) {
    const VertexId v = order[i];
    VertexId parent = -1;
    for (VertexId u : g.neighbors(v)) {
      if (pos[u] > i && (parent < 0 || pos[u] < pos[parent])) parent = u;
    }
    if (parent < 0) continue;
    for (VertexId u : g.neighbors(v)) {
      if (pos[u] > i && u != parent && !g.adjacent(parent, u)) return false;
    }
  }
  return true;
}

bool is_chordal(const Graph& g) {
  auto order = lex_bfs_order(g);
  std::reverse(order.begin(), order.end());
  return is_perfect_elimination_ordering(g, order);
}

std::optional<VertexId> find_simplicial_vertex(const Graph& g) {
  for (VertexId v = 0; v < g.order(); ++v) {
    if (is_clique(g, g.row(v))) return v;
  }
  return std::nullopt;
}

}  // namespace p6c4
