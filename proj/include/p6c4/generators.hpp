#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "p6c4/graph.hpp"

namespace p6c4 {

// Outer hexagon 0..5, spokes 6~{0,3}, 7~{1,4}, 8~{2,5}, centre 9~{6,7,8}.
Graph petersen();
// Hexagon u1..u6 = 0..5 plus 6~{5,0,1,2}, 7~{1,2,3,4}, 8~{3,4,5,0}.
Graph f_graph();
// Five-cycle 1..5 = 0..4, y = 5 ~{2,3}, z = 6 ~{4,5}, x = 7 ~{3,4,y,z}.
Graph f1();
// Five-cycle 1..5 = 0..4, y = 5 ~{2,3}, x = 6 ~{4,5}, t = 7 ~{5,1,2,y,x}.
Graph f2();
// f1() plus u = 8 adjacent to the whole five-cycle.
Graph f3();
Graph cycle(int k);  // k >= 3
Graph path(int k);   // k >= 1

// blow_up(petersen(), all s).
Graph tightness_family(int s);

// std::mt19937_64 (whose output sequence is fixed by the standard) with
// bounded draws done here by rejection, so corpora do not depend on the
// standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  // Independent stream for sub-task `index` of `family` under `seed`.
  static Rng stream(std::uint64_t seed, std::string_view family, std::uint64_t index);

  std::uint64_t next();
  // Uniform in [lo, hi].
  int uniform_int(int lo, int hi);
  // Uniform in [0, 1).
  double uniform_real();
  bool bernoulli(double p);
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[static_cast<std::size_t>(uniform_int(0, static_cast<int>(i) - 1))]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

struct CorpusSpec {
  std::uint64_t seed = 42;

  // Rejection-sampled G(n, p).
  int random_count = 150;
  int random_n_min = 4;
  int random_n_max = 13;
  double random_p_min = 0.05;
  double random_p_max = 0.95;
  int max_attempts = 10000;

  // join(blow_up(base, sizes), K_k) for base in {Petersen, F, C5, F3}.
  int blowup_count = 200;
  int class_size_max = 6;
  int clique_join_max = 3;
  int constructive_n_max = 60;

  // Random chordal graphs grown by simplicial insertion.
  int chordal_count = 100;
  int chordal_n_min = 4;
  int chordal_n_max = 20;

  // Disjoint unions of two smaller members.
  int union_count = 50;

  friend bool operator==(const CorpusSpec&, const CorpusSpec&) = default;
};

struct CorpusEntry {
  Graph graph;
  std::string family;
  std::string params;  // human-readable construction parameters
  int attempts = 1;
};

struct CorpusResult {
  std::vector<CorpusEntry> graphs;
  int requested = 0;
  // family -> targets that ran out of attempts
  std::map<std::string, int> exhausted;
};

// Every emitted graph passed is_p6_free and is_c4_free. Each target draws
// from its own Rng::stream, so `threads` does not change the output.
CorpusResult random_p6c4_free(const CorpusSpec& spec, int threads = 1);

}  // namespace p6c4
