#include "wittlab/graphs.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace wittlab {

namespace {

struct BitRow {
  std::vector<uint64_t> w;

  explicit BitRow(size_t words = 0) : w(words, 0) {}
  explicit BitRow(std::vector<uint64_t> words) : w(std::move(words)) {}

  bool test(int i) const { return (w[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1; }
  void set(int i) { w[static_cast<size_t>(i) >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { w[static_cast<size_t>(i) >> 6] &= ~(uint64_t(1) << (i & 63)); }

  int count() const {
    int c = 0;
    for (uint64_t x : w) c += __builtin_popcountll(x);
    return c;
  }
  bool empty() const {
    for (uint64_t x : w)
      if (x) return false;
    return true;
  }
  void intersect(const std::vector<uint64_t>& other) {
    for (size_t i = 0; i < w.size(); ++i) w[i] &= other[i];
  }
  int intersection_count(const std::vector<uint64_t>& other) const {
    int c = 0;
    for (size_t i = 0; i < w.size(); ++i) c += __builtin_popcountll(w[i] & other[i]);
    return c;
  }
  template <typename F>
  void for_each(F&& f) const {
    for (size_t wi = 0; wi < w.size(); ++wi) {
      uint64_t x = w[wi];
      while (x) {
        const int b = __builtin_ctzll(x);
        f(static_cast<int>(wi * 64 + static_cast<size_t>(b)));
        x &= x - 1;
      }
    }
  }
};

// Counts cliques inside `cand` given `pivots` optional vertices accumulated
// so far; every leaf with p pivots adds binom(p, j) cliques of size h+j.
void pivot_count(const Graph& g, BitRow cand, long holds, long pivots,
                 std::vector<mpz_class>& counts) {
  if (cand.empty()) {
    for (long j = 0; j <= pivots; ++j)
      counts[static_cast<size_t>(holds + j)] +=
          binomial(mpz_class(pivots), static_cast<unsigned long>(j));
    return;
  }
  int pivot = -1, best = -1;
  cand.for_each([&](int u) {
    const int deg = cand.intersection_count(g.adjacency_row(u));
    if (deg > best) {
      best = deg;
      pivot = u;
    }
  });
  BitRow pivot_branch = cand;
  pivot_branch.intersect(g.adjacency_row(pivot));
  pivot_count(g, std::move(pivot_branch), holds, pivots + 1, counts);

  BitRow outside = cand;  // cand \ N(pivot) \ {pivot}
  for (size_t i = 0; i < outside.w.size(); ++i)
    outside.w[i] &= ~g.adjacency_row(pivot)[i];
  outside.reset(pivot);
  outside.for_each([&](int v) {
    // Branch holding v; cliques through already-processed outside vertices
    // were counted in their own branches, so v leaves cand for good.
    cand.reset(v);
    BitRow next = cand;
    next.intersect(g.adjacency_row(v));
    pivot_count(g, std::move(next), holds + 1, pivots, counts);
  });
}

std::vector<int> degeneracy_order(const Graph& g) {
  const int v = g.vertex_count();
  std::vector<int> deg(static_cast<size_t>(v));
  std::vector<char> removed(static_cast<size_t>(v), 0);
  for (int i = 0; i < v; ++i)
    deg[static_cast<size_t>(i)] = BitRow(std::vector<uint64_t>(g.adjacency_row(i))).count();
  std::vector<int> order;
  order.reserve(static_cast<size_t>(v));
  for (int step = 0; step < v; ++step) {
    int pick = -1;
    for (int i = 0; i < v; ++i)
      if (!removed[static_cast<size_t>(i)] &&
          (pick < 0 || deg[static_cast<size_t>(i)] < deg[static_cast<size_t>(pick)]))
        pick = i;
    removed[static_cast<size_t>(pick)] = 1;
    order.push_back(pick);
    BitRow row(std::vector<uint64_t>(g.adjacency_row(pick)));
    row.for_each([&](int u) {
      if (!removed[static_cast<size_t>(u)]) --deg[static_cast<size_t>(u)];
    });
  }
  return order;
}

std::vector<mpz_class> clique_counts_impl(const Graph& g, int max_vertices, bool parallel) {
  const int v = g.vertex_count();
  if (v > max_vertices)
    throw SizeLimitError("clique counting: graph has " + std::to_string(v) +
                         " vertices, limit is " + std::to_string(max_vertices));
  std::vector<mpz_class> counts(static_cast<size_t>(v) + 1, 0);
  if (v == 0) return {};

  const auto order = degeneracy_order(g);
  std::vector<int> position(static_cast<size_t>(v));
  for (int i = 0; i < v; ++i) position[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;

  // Top-level candidate sets (later neighbors in degeneracy order), biggest
  // first so the dynamic schedule stays balanced.
  std::vector<BitRow> top(static_cast<size_t>(v), BitRow(g.words_per_row()));
  std::vector<int> work_order(static_cast<size_t>(v));
  for (int idx = 0; idx < v; ++idx) {
    const int s = order[static_cast<size_t>(idx)];
    BitRow row(std::vector<uint64_t>(g.adjacency_row(s)));
    row.for_each([&](int u) {
      if (position[static_cast<size_t>(u)] > idx) top[static_cast<size_t>(idx)].set(u);
    });
    work_order[static_cast<size_t>(idx)] = idx;
  }
  std::sort(work_order.begin(), work_order.end(), [&](int a, int b) {
    const int ca = top[static_cast<size_t>(a)].count(), cb = top[static_cast<size_t>(b)].count();
    return ca != cb ? ca > cb : a < b;
  });

#pragma omp parallel if (parallel)
  {
    std::vector<mpz_class> local(static_cast<size_t>(v) + 1, 0);
#pragma omp for schedule(dynamic, 1) nowait
    for (int w = 0; w < v; ++w) {
      const int idx = work_order[static_cast<size_t>(w)];
      pivot_count(g, top[static_cast<size_t>(idx)], 1, 0, local);
    }
#pragma omp critical
    {
      for (size_t k = 0; k < counts.size(); ++k) counts[k] += local[k];
    }
  }

  while (!counts.empty() && counts.back() == 0) counts.pop_back();
  if (!counts.empty()) counts.erase(counts.begin());  // drop c_0 slot
  return counts;
}

}  // namespace

Graph::Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges)
    : v_(vertex_count) {
  if (v_ < 0) throw std::invalid_argument("Graph: negative vertex count");
  words_ = static_cast<size_t>((v_ + 63) / 64);
  adj_.assign(static_cast<size_t>(v_), std::vector<uint64_t>(words_, 0));
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= v_ || b >= v_)
      throw std::invalid_argument("Graph: edge endpoint out of range");
    if (a == b) throw std::invalid_argument("Graph: self-loops are not allowed");
    adj_[static_cast<size_t>(a)][static_cast<size_t>(b) >> 6] |= uint64_t(1) << (b & 63);
    adj_[static_cast<size_t>(b)][static_cast<size_t>(a) >> 6] |= uint64_t(1) << (a & 63);
  }
  for (int i = 0; i < v_; ++i) {
    for (uint64_t w : adj_[static_cast<size_t>(i)]) edge_count_ += __builtin_popcountll(w);
  }
  edge_count_ /= 2;
}

bool Graph::has_edge(int a, int b) const {
  if (a < 0 || b < 0 || a >= v_ || b >= v_) return false;
  return (adj_[static_cast<size_t>(a)][static_cast<size_t>(b) >> 6] >> (b & 63)) & 1;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < v_; ++a)
    for (int b = a + 1; b < v_; ++b)
      if (has_edge(a, b)) out.emplace_back(a, b);
  return out;
}

Graph complement(const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < g.vertex_count(); ++a)
    for (int b = a + 1; b < g.vertex_count(); ++b)
      if (!g.has_edge(a, b)) edges.emplace_back(a, b);
  return Graph(g.vertex_count(), edges);
}

Graph cayley_graph(int n, const std::vector<int>& connection_set) {
  if (n < 1) throw std::invalid_argument("cayley_graph: modulus must be positive");
  std::vector<char> in_set(static_cast<size_t>(n), 0);
  for (int s : connection_set) {
    const int r = ((s % n) + n) % n;
    if (r == 0) throw std::invalid_argument("cayley_graph: 0 is not allowed in the connection set");
    in_set[static_cast<size_t>(r)] = 1;
  }
  for (int r = 1; r < n; ++r)
    if (in_set[static_cast<size_t>(r)] && !in_set[static_cast<size_t>(n - r)])
      throw std::invalid_argument("cayley_graph: connection set must be symmetric");
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < n; ++x)
    for (int r = 1; r < n; ++r)
      if (in_set[static_cast<size_t>(r)]) edges.emplace_back(x, (x + r) % n);
  return Graph(n, edges);
}

std::vector<mpz_class> clique_counts(const Graph& g, int max_vertices) {
  return clique_counts_impl(g, max_vertices, true);
}

std::vector<mpz_class> clique_counts_serial(const Graph& g, int max_vertices) {
  return clique_counts_impl(g, max_vertices, false);
}

CharPolynomial clique_polynomial(const Graph& g, int max_vertices) {
  const auto c = clique_counts(g, max_vertices);
  std::vector<mpz_class> coeffs(c.size() + 1);
  coeffs[0] = 1;
  for (size_t k = 1; k < coeffs.size(); ++k)
    coeffs[k] = (k % 2 == 1) ? mpz_class(-c[k - 1]) : c[k - 1];
  return CharPolynomial(std::move(coeffs));
}

std::vector<mpz_class> lcs_ranks(const Graph& g, long K, int max_vertices) {
  const auto table = witt_dims(clique_polynomial(g, max_vertices), K);
  if (!table.realizable())
    throw std::logic_error("lcs_ranks: non-realizable clique polynomial (bug)");
  return table.dims;
}

TuranReport turan_check(const Graph& g, int max_vertices) {
  const auto c = clique_counts(g, max_vertices);
  TuranReport r;
  r.clique_number = static_cast<long>(c.size());
  r.c1 = c.empty() ? mpz_class(0) : c[0];
  r.c2 = c.size() > 1 ? c[1] : mpz_class(0);
  r.mantel_applicable = r.clique_number <= 2;
  r.mantel_holds = 4 * r.c2 <= r.c1 * r.c1;
  if (r.clique_number >= 1) {
    const long d = r.clique_number;
    r.turan_question_holds = 2 * d * r.c2 <= (d - 1) * r.c1 * r.c1;
  } else {
    r.turan_question_holds = true;  // empty graph, vacuous
  }
  return r;
}

Graph parse_graph(std::istream& in) {
  // Peek: '{' selects the JSON form.
  char c;
  while (in.get(c)) {
    if (!isspace(static_cast<unsigned char>(c))) break;
  }
  if (!in) throw std::invalid_argument("graph parse: empty input");
  in.putback(c);

  std::vector<std::pair<int, int>> edges;
  int v = 0;
  if (c == '{') {
    try {
      nlohmann::json j;
      in >> j;
      if (!j.contains("v") || !j["v"].is_number_integer())
        throw std::invalid_argument("graph parse: missing integer field \"v\"");
      v = j["v"].get<int>();
      for (const auto& e : j.value("edges", nlohmann::json::array())) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
          throw std::invalid_argument("graph parse: edges must be [i, j] integer pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
      }
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("graph parse: ") + e.what());
    }
  } else {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("graph parse: missing vertex count");
    try {
      v = std::stoi(line);
    } catch (...) {
      throw std::invalid_argument("graph parse: bad vertex count line: " + line);
    }
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      int a, b;
      if (!(ls >> a)) continue;  // blank line
      if (!(ls >> b)) throw std::invalid_argument("graph parse: bad edge line: " + line);
      edges.emplace_back(a, b);
    }
  }
  return Graph(v, edges);
}

Graph parse_graph_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open graph file: " + path);
  return parse_graph(f);
}

std::string graph_to_text(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << "\n";
  for (auto [a, b] : g.edges()) out << a << " " << b << "\n";
  return out.str();
}

std::string graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["v"] = g.vertex_count();
  auto edges = nlohmann::json::array();
  for (auto [a, b] : g.edges()) edges.push_back({a, b});
  j["edges"] = std::move(edges);
  return j.dump();
}

}  // namespace wittlab
