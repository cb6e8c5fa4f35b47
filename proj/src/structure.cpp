#include "p6c4/structure.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "p6c4/coloring.hpp"
#include "p6c4/error.hpp"
#include "p6c4/patterns.hpp"

namespace p6c4 {

CyclePartition partition_by_cycle(const Graph& g, const std::vector<VertexId>& cycle) {
  if (cycle.size() > 12) throw InvalidArgument("cycle partition supports cycles of at most 12 vertices");
  if (!is_induced_cycle(g, cycle)) throw InvalidArgument("not an induced cycle of the graph");
  const int k = static_cast<int>(cycle.size());
  CyclePartition cp;
  cp.cycle = cycle;
  cp.mask_of.assign(g.order(), 0);
  cp.on_cycle.assign(g.order(), false);
  cp.buckets.assign(std::size_t{1} << k, {});
  cp.by_count.assign(k + 1, {});
  for (VertexId c : cycle) cp.on_cycle[c] = true;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (cp.on_cycle[v]) continue;
    std::uint32_t mask = 0;
    for (int i = 0; i < k; ++i) {
      if (g.adjacent(v, cycle[i])) mask |= std::uint32_t{1} << i;
    }
    cp.mask_of[v] = mask;
    cp.buckets[mask].push_back(v);
    cp.by_count[__builtin_popcount(mask)].push_back(v);
  }
  return cp;
}

bool is_dominating(const Graph& g, const VertexSet& s) {
  const Bitset inside = to_bitset(g, s);
  Bitset covered = inside;
  for (VertexId v : s) covered |= g.row(v);
  return covered.all();
}

namespace {

constexpr int kC5 = 5;

enum class Relation { kComplete, kAntiComplete, kClique, kOneEmpty, kCliquesIfBothNonEmpty };

// Union of buckets S(X), each X given as offsets from the base label i.
using SetSpec = std::vector<std::vector<int>>;

struct Clause {
  const char* property;
  int clause;
  Relation relation;
  SetSpec a;
  SetSpec b;
  const char* text;
};

const std::vector<Clause>& clauses() {
  static const std::vector<Clause> kClauses = {
      {"P2", 0, Relation::kClique, {{0, 1, 2, 3, 4}, {-1, 0, 1}}, {}, "S5 u S(i-1,i,i+1) is a clique"},
      {"P3", 0, Relation::kAntiComplete, {{-1, 0, 1}}, {{1, 2, 3}},
       "S(i-1,i,i+1) is anti-complete to S(i+1,i+2,i+3)"},
      {"P4", 0, Relation::kComplete, {{0, 1}}, {{1, 2}}, "S(i,i+1) is complete to S(i+1,i+2)"},
      {"P4", 1, Relation::kAntiComplete, {{0, 1}}, {{3, 4}}, "S(i,i+1) is anti-complete to S(i+3,i+4)"},
      {"P4", 2, Relation::kCliquesIfBothNonEmpty, {{0, 1}}, {{1, 2}},
       "if S(i,i+1) and S(i+1,i+2) are both non-empty, both are cliques"},
      {"P5", 0, Relation::kAntiComplete, {{0}}, {{1}}, "S(i) is anti-complete to S(i+1)"},
      {"P5", 1, Relation::kComplete, {{0}}, {{2}}, "S(i) is complete to S(i+2)"},
      {"P6", 0, Relation::kAntiComplete, {{-1, 0, 1}}, {{-2, 2}}, "S(i-1,i,i+1) is anti-complete to S(i-2,i+2)"},
      {"P7", 0, Relation::kAntiComplete, {{0}}, {{1, 2, 3}}, "S(i) is anti-complete to S(i+1,i+2,i+3)"},
      {"P8", 0, Relation::kOneEmpty, {{0}}, {{1, 2}}, "one of S(i) and S(i+1,i+2) is empty"},
      {"P9", 0, Relation::kAntiComplete, {{-2, 2}}, {{1}, {2}, {3}, {4}},
       "S(i-2,i+2) is anti-complete to S(j) for j != i"},
  };
  return kClauses;
}

std::uint32_t offsets_mask(const std::vector<int>& offsets, int base, bool reversed) {
  std::uint32_t mask = 0;
  for (int off : offsets) {
    const int pos = ((base + (reversed ? -off : off)) % kC5 + kC5) % kC5;
    mask |= std::uint32_t{1} << pos;
  }
  return mask;
}

bool in_spec(const CyclePartition& cp, VertexId v, const SetSpec& spec, int base, bool reversed) {
  if (cp.on_cycle[v]) return false;
  for (const auto& offsets : spec) {
    if (cp.mask_of[v] == offsets_mask(offsets, base, reversed)) return true;
  }
  return false;
}

VertexSet members(const CyclePartition& cp, const SetSpec& spec, int base, bool reversed) {
  VertexSet out;
  std::set<std::uint32_t> masks;
  for (const auto& offsets : spec) masks.insert(offsets_mask(offsets, base, reversed));
  for (std::uint32_t mask : masks) {
    const auto& b = cp.bucket(mask);
    out.insert(out.end(), b.begin(), b.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Legal neighborhoods on a C5: none, one vertex, or a run of 2, 3 or 5
// consecutive vertices.
bool legal_c5_mask(std::uint32_t mask) {
  const int count = __builtin_popcount(mask);
  if (count <= 1 || count == kC5) return true;
  if (count == 4) return false;
  for (int start = 0; start < kC5; ++start) {
    std::uint32_t run = 0;
    for (int j = 0; j < count; ++j) run |= std::uint32_t{1} << ((start + j) % kC5);
    if (run == mask) return true;
  }
  return false;
}

std::string labels(std::uint32_t mask) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (int i = 0; i < kC5; ++i) {
    if (mask & (std::uint32_t{1} << i)) {
      out << (first ? "" : ",") << i + 1;
      first = false;
    }
  }
  out << "}";
  return out.str();
}

std::string reason_for(const Clause& c, int base, bool reversed) {
  std::ostringstream out;
  out << c.property << ": " << c.text << " (i=" << base + 1 << (reversed ? ", reversed" : "") << ")";
  return out.str();
}

std::vector<PropertyViolation> check_clause(const Graph& g, const CyclePartition& cp, const Clause& c, int base,
                                            bool reversed) {
  std::vector<PropertyViolation> out;
  auto report = [&](std::vector<VertexId> witness) {
    out.push_back({c.property, c.clause, base, reversed, std::move(witness), reason_for(c, base, reversed)});
  };
  const VertexSet a = members(cp, c.a, base, reversed);
  const VertexSet b = c.b.empty() ? a : members(cp, c.b, base, reversed);
  switch (c.relation) {
    case Relation::kComplete:
    case Relation::kClique:
      for (VertexId u : a) {
        for (VertexId v : b) {
          if (u != v && !g.adjacent(u, v)) {
            if (c.relation == Relation::kClique && u > v) continue;
            report({u, v});
            return out;
          }
        }
      }
      break;
    case Relation::kAntiComplete:
      for (VertexId u : a) {
        for (VertexId v : b) {
          if (g.adjacent(u, v)) {
            report({u, v});
            return out;
          }
        }
      }
      break;
    case Relation::kOneEmpty:
      if (!a.empty() && !b.empty()) report({a.front(), b.front()});
      break;
    case Relation::kCliquesIfBothNonEmpty:
      if (a.empty() || b.empty()) break;
      for (const auto* side : {&a, &b}) {
        const auto& other = side == &a ? b : a;
        for (std::size_t x = 0; x < side->size(); ++x) {
          for (std::size_t y = x + 1; y < side->size(); ++y) {
            if (!g.adjacent((*side)[x], (*side)[y])) {
              report({(*side)[x], (*side)[y], other.front()});
              return out;
            }
          }
        }
      }
      break;
  }
  return out;
}

const Clause* find_clause(const std::string& property, int clause) {
  for (const auto& c : clauses()) {
    if (property == c.property && clause == c.clause) return &c;
  }
  return nullptr;
}

}  // namespace

std::vector<PropertyViolation> check_c5_properties(const Graph& g, const std::vector<VertexId>& cycle) {
  if (cycle.size() != kC5) throw InvalidArgument("property check needs an induced five-cycle");
  const CyclePartition cp = partition_by_cycle(g, cycle);
  std::vector<PropertyViolation> out;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (!cp.on_cycle[v] && !legal_c5_mask(cp.mask_of[v])) {
      out.push_back({"P1", 0, 0, false, {v},
                     "P1: neighborhood " + labels(cp.mask_of[v]) +
                         " on the cycle is not empty, a single vertex, or 2, 3 or 5 consecutive vertices"});
    }
  }
  std::set<std::tuple<std::string, int, std::vector<VertexId>>> seen;
  for (bool reversed : {false, true}) {
    for (int base = 0; base < kC5; ++base) {
      for (const auto& c : clauses()) {
        for (auto& violation : check_clause(g, cp, c, base, reversed)) {
          auto key_witness = violation.witness;
          std::sort(key_witness.begin(), key_witness.end());
          if (seen.emplace(violation.property, violation.clause, key_witness).second) {
            out.push_back(std::move(violation));
          }
        }
      }
    }
  }
  return out;
}

bool reverify_violation(const Graph& g, const std::vector<VertexId>& cycle, const PropertyViolation& v) {
  if (cycle.size() != kC5 || !is_induced_cycle(g, cycle)) return false;
  for (VertexId w : v.witness) {
    if (!g.contains(w)) return false;
  }
  const CyclePartition cp = partition_by_cycle(g, cycle);
  if (v.property == "P1") {
    return v.witness.size() == 1 && !cp.on_cycle[v.witness[0]] && !legal_c5_mask(cp.mask_of[v.witness[0]]);
  }
  const Clause* c = find_clause(v.property, v.clause);
  if (!c || v.rotation < 0 || v.rotation >= kC5) return false;
  const auto& w = v.witness;
  const SetSpec& b_spec = c->b.empty() ? c->a : c->b;
  auto in_a = [&](VertexId x) { return in_spec(cp, x, c->a, v.rotation, v.reversed); };
  auto in_b = [&](VertexId x) { return in_spec(cp, x, b_spec, v.rotation, v.reversed); };
  switch (c->relation) {
    case Relation::kComplete:
    case Relation::kClique:
      return w.size() == 2 && w[0] != w[1] && in_a(w[0]) && in_b(w[1]) && !g.adjacent(w[0], w[1]);
    case Relation::kAntiComplete:
      return w.size() == 2 && in_a(w[0]) && in_b(w[1]) && g.adjacent(w[0], w[1]);
    case Relation::kOneEmpty:
      return w.size() == 2 && in_a(w[0]) && in_b(w[1]);
    case Relation::kCliquesIfBothNonEmpty: {
      if (w.size() != 3 || w[0] == w[1] || g.adjacent(w[0], w[1])) return false;
      const bool pair_in_a = in_a(w[0]) && in_a(w[1]) && in_b(w[2]);
      const bool pair_in_b = in_b(w[0]) && in_b(w[1]) && in_a(w[2]);
      return pair_in_a || pair_in_b;
    }
  }
  return false;
}

AuditReport audit_atom_classification(const Graph& g, const AuditOptions& options) {
  AuditReport r;
  r.n = g.order();
  r.m = g.size();
  r.connected = !g.empty() && is_connected(g);
  r.c4_witness = find_induced_c4(g);
  r.p6_witness = find_induced_p6(g);
  r.in_class = !r.c4_witness && !r.p6_witness;
  if (r.connected) {
    r.cutset = find_clique_cutset(g);
    r.atom = !r.cutset;
  } else {
    r.atom = is_atom(g);
  }

  if (r.atom && r.connected) {
    if (g.order() > options.limits.clique) {
      r.classification_note = "skipped: graph exceeds the clique oracle limit";
    } else {
      const auto cls = classify_atom(g, options.limits);
      r.classified = true;
      r.kind = cls.kind;
      r.witness_vertex = cls.vertex;
      r.omega = cls.omega;
      using Kind = AtomClassification::Kind;
      switch (cls.kind) {
        case Kind::kSmall:
          r.classification_verified = 2 * g.degree(cls.vertex) + 2 <= 3 * cls.omega;
          break;
        case Kind::kUniversal:
          r.classification_verified = g.degree(cls.vertex) == g.order() - 1;
          break;
        case Kind::kPetersenBlowup:
        case Kind::kFBlowup: {
          const auto kind = cls.kind == Kind::kPetersenBlowup ? SkeletonKind::kPetersen : SkeletonKind::kF;
          const auto tp = twin_partition(g);
          r.classification_verified =
              is_induced_embedding(tp.skeleton, skeleton_pattern(kind), cls.skeleton_embedding) &&
              tp.skeleton.order() == skeleton_pattern(kind).order();
          break;
        }
        case Kind::kNotInClass:
          r.classification_verified = false;
          break;
      }
      if (r.in_class && !r.classification_verified) {
        r.failures.push_back("certified (P6,C4)-free atom with no verified structure case");
      }
    }
  }

  r.exhaustive = g.order() <= options.enumeration_cap;
  const std::size_t limit = r.exhaustive ? static_cast<std::size_t>(-1) : options.sampled_cycles;
  const bool in_class_atom = r.in_class && r.atom && r.connected;

  for (const auto& c5 : enumerate_induced_cycles(g, 5, limit)) {
    ++r.c5_checked;
    auto violations = check_c5_properties(g, c5);
    if (r.in_class && !violations.empty()) {
      r.failures.push_back("property " + violations.front().property + " fails on an induced C5");
    }
    for (auto& v : violations) r.violations.push_back(std::move(v));
    if (!is_dominating(g, VertexSet(c5.begin(), c5.end()))) {
      ++r.c5_non_dominating;
      if (in_class_atom) r.failures.push_back("induced C5 is not dominating in a (P6,C4)-free atom");
    }
  }

  std::optional<bool> petersen_join;
  for (const auto& c6 : enumerate_induced_cycles(g, 6, limit)) {
    ++r.c6_checked;
    if (is_dominating(g, VertexSet(c6.begin(), c6.end()))) continue;
    ++r.c6_non_dominating;
    if (!in_class_atom) continue;
    if (!petersen_join) {
      const auto leaf = match_join_blowup(g);
      petersen_join = leaf && leaf->kind == SkeletonKind::kPetersen;
    }
    if (!*petersen_join) {
      r.c6_structure_ok = false;
      r.failures.push_back("non-dominating induced C6 but the graph is not a Petersen blow-up joined with a clique");
      break;
    }
  }
  return r;
}

}  // namespace p6c4
