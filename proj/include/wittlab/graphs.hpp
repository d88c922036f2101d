#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "wittlab/charpoly.hpp"

namespace wittlab {

inline constexpr int kDefaultMaxVertices = 40;

/// Finite loop-free undirected graph on vertices 0..v-1. Immutable after
/// construction; duplicate edges collapse, self-loops are rejected.
class Graph {
 public:
  Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return v_; }
  long edge_count() const { return edge_count_; }
  bool has_edge(int a, int b) const;
  std::vector<std::pair<int, int>> edges() const;

  /// Adjacency row as packed 64-bit words (v bits, little-endian words).
  const std::vector<uint64_t>& adjacency_row(int vertex) const {
    return adj_[static_cast<size_t>(vertex)];
  }
  size_t words_per_row() const { return words_; }

 private:
  int v_ = 0;
  size_t words_ = 0;
  long edge_count_ = 0;
  std::vector<std::vector<uint64_t>> adj_;
};

Graph complement(const Graph& g);

/// Cayley graph of Z/n with connection set S; S must be symmetric
/// (s in S => n-s in S) and must not contain 0 mod n.
Graph cayley_graph(int n, const std::vector<int>& connection_set);

// --- clique counting --------------------------------------------------------

/// counts[k] = number of k-cliques, k = 1..clique number (c_0 = 1 omitted;
/// trailing zeros trimmed). Pivoted recursive counting over a degeneracy
/// ordering; OpenMP-parallel over the top-level branches. Exact, so the
/// result is independent of the thread count. Throws SizeLimitError when the
/// graph exceeds max_vertices.
std::vector<mpz_class> clique_counts(const Graph& g, int max_vertices = kDefaultMaxVertices);

/// Serial reference for clique_counts, kept for tests and the benchmark.
std::vector<mpz_class> clique_counts_serial(const Graph& g,
                                            int max_vertices = kDefaultMaxVertices);

/// 1 + sum_k (-1)^k c_k y^k: the characteristic polynomial of the graph's
/// right-angled Artin Lie algebra.
CharPolynomial clique_polynomial(const Graph& g, int max_vertices = kDefaultMaxVertices);

/// Ranks of the lower-central-series quotients of the right-angled Artin
/// group of the graph: the dimension table of the clique polynomial.
std::vector<mpz_class> lcs_ranks(const Graph& g, long K,
                                 int max_vertices = kDefaultMaxVertices);

// --- extremal screens --------------------------------------------------------

struct TuranReport {
  bool mantel_applicable = false;  // triangle-free
  bool mantel_holds = false;       // c2 <= c1^2/4
  bool turan_question_holds = false;  // c2 <= (d-1)/(2d) * c1^2
  long clique_number = 0;
  mpz_class c1;
  mpz_class c2;
};

TuranReport turan_check(const Graph& g, int max_vertices = kDefaultMaxVertices);

// --- I/O ---------------------------------------------------------------------

/// Text format: first line `v`, then one `i j` edge per line (0-indexed).
/// A leading '{' switches to JSON: {"v": n, "edges": [[i,j], ...]}.
Graph parse_graph(std::istream& in);
Graph parse_graph_file(const std::string& path);

std::string graph_to_text(const Graph& g);
std::string graph_to_json(const Graph& g);

}  // namespace wittlab
