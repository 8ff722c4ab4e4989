#include "icover/verify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "icover/extension.hpp"
#include "icover/families.hpp"
#include "icover/formats.hpp"
#include "icover/indec.hpp"
#include "icover/iso.hpp"
#include "icover/modular.hpp"

namespace icover {

bool oracle_indecomposable(const Graph& g) {
  int n = g.vertex_count();
  if (n > 16)
    fail(ErrorKind::SizeCapExceeded, "subset-enumeration oracle capped at 16");
  if (n <= 2) return true;
  Row full = g.vertex_mask();
  for (Row s = 0; s < full; ++s) {
    if (std::popcount(s) < 2) continue;
    bool interval = true;
    for (Row m = full & ~s; m && interval; m &= m - 1) {
      Row t = g.neighbors(std::countr_zero(m)) & s;
      if (t != 0 && t != s) interval = false;
    }
    if (interval) return false;
  }
  return true;
}

int oracle_min_cover_size(const Graph& ig) {
  int n = ig.vertex_count();
  if (n > 16)
    fail(ErrorKind::SizeCapExceeded, "subset-enumeration oracle capped at 16");
  auto covers = [&](Row s) {
    for (int a = 0; a < n; ++a) {
      if (s & vbit(a)) continue;
      if (ig.neighbors(a) & ~s & ~mask_below(a + 1)) return false;
    }
    return true;
  };
  for (int k = 0; k <= n; ++k) {
    Row full = ig.vertex_mask();
    for (Row s = 0;; s = (s + 1)) {
      if (s > full) break;
      if (std::popcount(s) != k) continue;
      if (covers(s)) return k;
    }
  }
  return n;
}

namespace {

constexpr long kMismatchKeep = 100;

// ---------------------------------------------------------------------------
// harness plumbing
// ---------------------------------------------------------------------------

std::uint64_t mix(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(bound - 1);
  for (;;) {
    std::uint64_t v = rng() & mask;
    if (v < bound) return v;
  }
}

struct Sink {
  std::vector<Mismatch> mismatches;
  long total = 0;
  void add(long index, const Graph& g, std::string expected,
           std::string observed) {
    ++total;
    if (static_cast<long>(mismatches.size()) < kMismatchKeep)
      mismatches.push_back(
          {index, encode_edgelist(g), std::move(expected), std::move(observed)});
  }
};

// Runs per_index over [0, total), optionally chunked across threads. The
// per-index work is pure, so the merged result is schedule-independent.
template <typename Fn>
void for_indexed(long total, int jobs, VerificationReport& rep, Fn per_index) {
  jobs = std::max(1, jobs);
  if (total <= 0) return;
  jobs = static_cast<int>(std::min<long>(jobs, total));
  std::vector<Sink> sinks(jobs);
  std::vector<long> checked(jobs, 0);
  if (jobs == 1) {
    for (long i = 0; i < total; ++i) checked[0] += per_index(i, sinks[0]);
  } else {
    std::vector<std::thread> threads;
    long chunk = (total + jobs - 1) / jobs;
    for (int w = 0; w < jobs; ++w) {
      long lo = w * chunk, hi = std::min(total, lo + chunk);
      threads.emplace_back([&, w, lo, hi] {
        for (long i = lo; i < hi; ++i) checked[w] += per_index(i, sinks[w]);
      });
    }
    for (auto& t : threads) t.join();
  }
  long mismatch_total = 0;
  std::vector<Mismatch> merged;
  for (int w = 0; w < jobs; ++w) {
    mismatch_total += sinks[w].total;
    for (auto& m : sinks[w].mismatches) merged.push_back(std::move(m));
    rep.instances_checked += checked[w];
  }
  std::sort(merged.begin(), merged.end(),
            [](const Mismatch& a, const Mismatch& b) { return a.index < b.index; });
  if (static_cast<long>(merged.size()) > kMismatchKeep)
    merged.resize(kMismatchKeep);
  for (auto& m : merged) rep.mismatches.push_back(std::move(m));
  bool found = false;
  for (auto& d : rep.details)
    if (d.first == "mismatch_total") {
      d.second += mismatch_total;
      found = true;
    }
  if (!found && mismatch_total > 0)
    rep.details.emplace_back("mismatch_total", mismatch_total);
}

void add_detail(VerificationReport& rep, const std::string& key, long value) {
  for (auto& d : rep.details)
    if (d.first == key) {
      d.second += value;
      return;
    }
  rep.details.emplace_back(key, value);
}

// ---------------------------------------------------------------------------
// shared generators and predicates
// ---------------------------------------------------------------------------

Graph random_graph(int n, std::mt19937_64& rng) {
  Graph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (rng() & 1) g.add_edge(a, b);
  return g;
}

Graph random_indecomposable(int n, std::mt19937_64& rng) {
  for (int tries = 0; tries < 100000; ++tries) {
    Graph g = random_graph(n, rng);
    if (is_indecomposable(g)) return g;
  }
  fail(ErrorKind::InternalAnomaly, "no indecomposable sample found");
}

Graph random_extension(const Graph& base, int extra, std::mt19937_64& rng) {
  int m = base.vertex_count();
  Graph g(m + extra);
  for (auto [a, b] : base.edges()) g.add_edge(a, b);
  for (int v = m; v < m + extra; ++v)
    for (int u = 0; u < v; ++u)
      if (rng() & 1) g.add_edge(u, v);
  return g;
}

std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  for (int i = n - 1; i > 0; --i)
    std::swap(p[i], p[static_cast<int>(draw(rng, i + 1))]);
  return p;
}

bool pair_deletion_indec(const Graph& g, int x, int y) {
  return is_indecomposable(remove_vertices(g, vbit(x) | vbit(y)));
}

// {a, b} covers the indecomposability graph iff no deletion pair avoiding it
// stays indecomposable. Early-exits without building the whole graph.
bool cover_pair_covers(const Graph& g, int a, int b) {
  int n = g.vertex_count();
  for (int x = 0; x < n; ++x) {
    if (x == a || x == b) continue;
    for (int y = x + 1; y < n; ++y) {
      if (y == a || y == b) continue;
      if (pair_deletion_indec(g, x, y)) return false;
    }
  }
  return true;
}

std::string edge_list_string(const Graph& g) {
  std::ostringstream out;
  bool first = true;
  for (auto [a, b] : g.edges()) {
    if (!first) out << ",";
    out << "{" << a + 1 << "," << b + 1 << "}";
    first = false;
  }
  if (first) out << "(none)";
  return out.str();
}

std::string set_list_string(const std::vector<std::vector<int>>& sets) {
  std::ostringstream out;
  bool first = true;
  for (const auto& s : sets) {
    if (!first) out << ",";
    out << "{";
    for (std::size_t i = 0; i < s.size(); ++i)
      out << (i ? "," : "") << s[i];
    out << "}";
    first = false;
  }
  if (first) out << "(none)";
  return out.str();
}

// ---------------------------------------------------------------------------
// small-graph tables: adjacency code <-> graph, indecomposability bitmaps
// ---------------------------------------------------------------------------

inline int pair_bit(int i, int j) { return j * (j - 1) / 2 + i; }  // i < j

Graph graph_of_code(int n, std::uint32_t code) {
  Graph g(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (code & (std::uint32_t{1} << pair_bit(i, j))) g.add_edge(i, j);
  return g;
}

const std::vector<bool>& indec_table(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<bool>> tables;
  std::lock_guard<std::mutex> lock(mu);
  auto it = tables.find(n);
  if (it != tables.end()) return it->second;
  if (n > 7) fail(ErrorKind::EnvelopeExceeded, "code table capped at 7 vertices");
  long total = 1L << (n * (n - 1) / 2);
  std::vector<bool> t(static_cast<std::size_t>(total));
  for (long code = 0; code < total; ++code)
    t[static_cast<std::size_t>(code)] =
        is_indecomposable(graph_of_code(n, static_cast<std::uint32_t>(code)));
  return tables.emplace(n, std::move(t)).first->second;
}

struct SubsetExtractor {
  int sub_n = 0;
  std::vector<int> src_bits;  // source pair-bit per target pair-bit, colex
};

std::vector<SubsetExtractor> build_extractors(int n) {
  std::vector<SubsetExtractor> out(std::size_t{1} << n);
  for (Row s = 0; s < (Row{1} << n); ++s) {
    std::vector<int> mem;
    for (Row t = s; t; t &= t - 1) mem.push_back(std::countr_zero(t));
    SubsetExtractor& e = out[s];
    e.sub_n = static_cast<int>(mem.size());
    for (int j = 1; j < e.sub_n; ++j)
      for (int i = 0; i < j; ++i)
        e.src_bits.push_back(pair_bit(mem[i], mem[j]));
  }
  return out;
}

std::uint32_t extract_code(std::uint32_t code, const SubsetExtractor& e) {
  std::uint32_t sub = 0;
  for (std::size_t t = 0; t < e.src_bits.size(); ++t)
    if (code & (std::uint32_t{1} << e.src_bits[t]))
      sub |= std::uint32_t{1} << t;
  return sub;
}

// ---------------------------------------------------------------------------
// statement handlers
// ---------------------------------------------------------------------------

struct Resolved {
  std::vector<int> sizes;
  RunMode mode;
  std::uint64_t seed;
  long count;
  int jobs;
};

using Handler = void (*)(const Resolved&, VerificationReport&);

void stmt_remark1(const Resolved& r, VerificationReport& rep) {
  for (int n : r.sizes) {
    if (n < 6 || n > 16)
      fail(ErrorKind::EnvelopeExceeded, "closed-form lists stated for 6..16");
    for_indexed(1, 1, rep, [&](long, Sink& sink) -> long {
      Graph ip = indecomposability_graph(make_path(n));
      Graph ep(n);
      ep.add_edge(0, 1);
      ep.add_edge(0, n - 1);
      ep.add_edge(n - 2, n - 1);
      if (!(ip == ep))
        sink.add(n, make_path(n), edge_list_string(ep), edge_list_string(ip));
      Graph iq = indecomposability_graph(make_q(n));
      Graph eq(n);
      eq.add_edge(0, 1);
      eq.add_edge(1, n - 1);
      eq.add_edge(n - 2, n - 1);
      if (n >= 8) eq.add_edge(0, n - 1);
      if (!(iq == eq))
        sink.add(n, make_q(n), edge_list_string(eq), edge_list_string(iq));
      return 2;
    });
  }
}

// Deficit-1 exhaustive equivalence: definitional class membership vs the
// listed neighborhood shapes, over every extension of the literal base.
void stmt_prop_m1(ClassId cls, const Resolved& r, VerificationReport& rep) {
  for (int n : r.sizes) {
    if (n < class_min_size(cls))
      fail(ErrorKind::EnvelopeExceeded, "below the class minimum");
    if (n - 1 > 24) fail(ErrorKind::EnvelopeExceeded, "parameter bits > 24");
    Graph base = class_uses_quasi_base(cls) ? make_q(n - 1) : make_path(n - 1);
    long total = 1L << (n - 1);
    std::atomic<long> positives{0};
    auto body = [&](long maskv, Sink& sink) -> long {
      Graph g(n);
      for (auto [a, b] : base.edges()) g.add_edge(a, b);
      for (Row t = static_cast<Row>(maskv); t; t &= t - 1)
        g.add_edge(n - 1, std::countr_zero(t));
      bool member = is_indecomposable(g) && cover_pair_covers(g, 0, n - 2);
      bool shape = class_predicate(g, cls).ok;
      if (member) positives.fetch_add(1, std::memory_order_relaxed);
      if (member != shape)
        sink.add(maskv, g, member ? "class member" : "not a member",
                 shape ? "shape listed" : "shape not listed");
      return 1;
    };
    if (r.mode == RunMode::Exhaustive) {
      for_indexed(total, r.jobs, rep, body);
    } else {
      for_indexed(r.count, r.jobs, rep, [&](long i, Sink& sink) -> long {
        std::mt19937_64 rng(mix(r.seed, i));
        return body(static_cast<long>(draw(rng, total)), sink);
      });
    }
    add_detail(rep, "positives_n" + std::to_string(n), positives.load());
  }
}

void stmt_prop42(const Resolved& r, VerificationReport& rep) {
  stmt_prop_m1(ClassId::Pm1, r, rep);
}
void stmt_prop44(const Resolved& r, VerificationReport& rep) {
  stmt_prop_m1(ClassId::Qm1, r, rep);
}

// Deficit-3/5 propositions. Forward: every generated member is
// indecomposable with the required cover pair. Reverse (sampled): every
// random frame extension that lands in the class by definition is isomorphic
// to a generated shape, certified by the frame witness search.
void stmt_prop_mk(ClassId cls, const Resolved& r, VerificationReport& rep) {
  int k = class_deficit(cls);
  for (int n : r.sizes) {
    if (n < class_min_size(cls))
      fail(ErrorKind::EnvelopeExceeded, "below the class minimum");
    std::vector<Graph> members = enumerate_class(cls, n);
    add_detail(rep, "members_n" + std::to_string(n),
               static_cast<long>(members.size()));
    auto cover = class_cover_pair(cls, n);
    for_indexed(static_cast<long>(members.size()), r.jobs, rep,
                [&](long i, Sink& sink) -> long {
                  const Graph& g = members[static_cast<std::size_t>(i)];
                  if (!is_indecomposable(g))
                    sink.add(i, g, "indecomposable", "decomposable");
                  else if (!cover_pair_covers(g, cover.first, cover.second))
                    sink.add(i, g, "cover pair covers", "uncovered deletion pair");
                  return 1;
                });
    if (r.mode != RunMode::Sampled) continue;
    Graph base = class_uses_quasi_base(cls) ? make_q(n - k) : make_path(n - k);
    std::atomic<long> hits{0};
    for_indexed(r.count, r.jobs, rep, [&](long i, Sink& sink) -> long {
      std::mt19937_64 rng(mix(r.seed, i));
      Graph g = random_extension(base, k, rng);
      if (!is_indecomposable(g)) return 1;
      if (!cover_pair_covers(g, cover.first, cover.second)) return 1;
      hits.fetch_add(1, std::memory_order_relaxed);
      if (!class_member_witness(g, cls))
        sink.add(i, g, "isomorphic to a listed shape", "no witness found");
      return 1;
    });
    add_detail(rep, "reverse_hits_n" + std::to_string(n), hits.load());
  }
}

void stmt_prop47(const Resolved& r, VerificationReport& rep) {
  stmt_prop_mk(ClassId::Pm3, r, rep);
}
void stmt_prop410(const Resolved& r, VerificationReport& rep) {
  stmt_prop_mk(ClassId::Qm3, r, rep);
}
void stmt_prop411(const Resolved& r, VerificationReport& rep) {
  stmt_prop_mk(ClassId::Pm5, r, rep);
}
void stmt_prop412(const Resolved& r, VerificationReport& rep) {
  stmt_prop_mk(ClassId::Qm5, r, rep);
}

void stmt_thm14(const Resolved& r, VerificationReport& rep) {
  for (int n : r.sizes) {
    if (n < 4) fail(ErrorKind::EnvelopeExceeded, "needs >= 4 vertices");
    if (r.mode == RunMode::Exhaustive && n > 7)
      fail(ErrorKind::EnvelopeExceeded, "exhaustive sweep capped at 7 vertices");
    if (r.mode == RunMode::Exhaustive) {
      for (int s = 3; s <= n; ++s) indec_table(s);  // build before threading
      std::vector<SubsetExtractor> extractors = build_extractors(n);
      const std::vector<bool>& table_n = indec_table(n);
      long total = 1L << (n * (n - 1) / 2);
      for_indexed(total, r.jobs, rep, [&](long code, Sink& sink) -> long {
        if (!table_n[static_cast<std::size_t>(code)]) return 0;
        Graph g = graph_of_code(n, static_cast<std::uint32_t>(code));
        long checked = 0;
        for (int a = 0; a < n; ++a)
          for (int b = a + 1; b < n; ++b) {
            bool fast = pinned_pq_isomorphism(g, a, b).has_value();
            bool brute = true;
            Row free_bits = g.vertex_mask() & ~(vbit(a) | vbit(b));
            for (Row t = free_bits;; t = (t - 1) & free_bits) {
              Row x = t | vbit(a) | vbit(b);
              int size = std::popcount(x);
              if (size >= 3 && size < n) {
                const SubsetExtractor& e = extractors[x];
                if (indec_table(e.sub_n)[extract_code(
                        static_cast<std::uint32_t>(code), e)]) {
                  brute = false;
                  break;
                }
              }
              if (t == 0) break;
            }
            if (fast != brute)
              sink.add(code * 64 + pair_bit(a, b), g,
                       brute ? "pair-minimal" : "not pair-minimal",
                       fast ? "pinned structure found" : "no pinned structure");
            // spot-check the public brute-force mode against the table path
            if (code % 509 == 0 &&
                is_pair_minimal(g, a, b, MinimalityMode::BruteForce) != brute)
              sink.add(code * 64 + pair_bit(a, b), g, "table brute",
                       "api brute disagrees");
            ++checked;
          }
        return checked;
      });
    } else {
      for_indexed(r.count, r.jobs, rep, [&](long i, Sink& sink) -> long {
        std::mt19937_64 rng(mix(r.seed, i));
        Graph g = random_indecomposable(n, rng);
        int a = static_cast<int>(draw(rng, n));
        int b = static_cast<int>(draw(rng, n - 1));
        if (b >= a) ++b;
        bool fast = is_pair_minimal(g, a, b, MinimalityMode::FastPinned);
        bool brute = is_pair_minimal(g, a, b, MinimalityMode::BruteForce);
        if (fast != brute)
          sink.add(i, g, brute ? "pair-minimal" : "not pair-minimal",
                   fast ? "pinned structure found" : "no pinned structure");
        return 1;
      });
    }
  }
}

void stmt_not1covered(const Resolved& r, VerificationReport& rep) {
  for (int n : r.sizes) {
    if (n < 11) fail(ErrorKind::EnvelopeExceeded, "stated for >= 11 vertices");
    for_indexed(r.count, r.jobs, rep, [&](long i, Sink& sink) -> long {
      std::mt19937_64 rng(mix(r.seed, i));
      Graph g = random_indecomposable(n, rng);
      for (int x = 0; x < n; ++x) {
        bool found = false;
        for (int y = 0; y < n && !found; ++y) {
          if (y == x) continue;
          for (int z = y + 1; z < n && !found; ++z) {
            if (z == x) continue;
            if (pair_deletion_indec(g, y, z)) found = true;
          }
        }
        if (!found) {
          sink.add(i, g, "an indecomposable pair deletion avoiding " +
                             std::to_string(x + 1),
                   "none");
          break;
        }
      }
      return 1;
    });
  }
}

void stmt_minus2(const Resolved& r, VerificationReport& rep) {
  for (int n : r.sizes) {
    if (n < 6) fail(ErrorKind::EnvelopeExceeded, "stated for >= 6 vertices");
    auto check = [&](long idx, const Graph& g, Sink& sink) {
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
          if (pair_deletion_indec(g, x, y)) return;
      sink.add(idx, g, "some indecomposable pair deletion", "none");
    };
    if (r.mode == RunMode::Exhaustive) {
      if (n > 6) fail(ErrorKind::EnvelopeExceeded, "exhaustive capped at 6");
      const std::vector<bool>& table = indec_table(n);
      long total = 1L << (n * (n - 1) / 2);
      for_indexed(total, r.jobs, rep, [&](long code, Sink& sink) -> long {
        if (!table[static_cast<std::size_t>(code)]) return 0;
        check(code, graph_of_code(n, static_cast<std::uint32_t>(code)), sink);
        return 1;
      });
    } else {
      for_indexed(r.count, r.jobs, rep, [&](long i, Sink& sink) -> long {
        std::mt19937_64 rng(mix(r.seed, i));
        check(i, random_indecomposable(n, rng), sink);
        return 1;
      });
    }
  }
}

// Lexicographically first small subset with an indecomposable induced graph.
std::optional<Row> first_indec_base(const Graph& g, int base_size) {
  int n = g.vertex_count();
  std::vector<int> comb(base_size);
  for (int i = 0; i < base_size; ++i) comb[i] = i;
  for (;;) {
    Row sel = 0;
    for (int v : comb) sel |= vbit(v);
    if (is_indecomposable(remove_vertices(g, g.vertex_mask() & ~sel)))
      return sel;
    int i = base_size - 1;
    while (i >= 0 && comb[i] == n - base_size + i) --i;
    if (i < 0) return std::nullopt;
    ++comb[i];
    for (int j = i + 1; j < base_size; ++j) comb[j] = comb[j - 1] + 1;
  }
}

void stmt_minus2_outside(const Resolved& r, VerificationReport& rep) {
  for (int n : r.sizes) {
    if (n < 10)
      fail(ErrorKind::EnvelopeExceeded,
           "needs a 4-vertex base plus >= 6 outside vertices");
    for_indexed(r.count, r.jobs, rep, [&](long i, Sink& sink) -> long {
      std::mt19937_64 rng(mix(r.seed, i));
      Graph g;
      std::optional<Row> base;
      for (int tries = 0; tries < 1000 && !base; ++tries) {
        g = random_indecomposable(n, rng);
        base = first_indec_base(g, 4);
      }
      if (!base) return 1;
      bool found = false;
      Row outside = g.vertex_mask() & ~*base;
      for (Row t1 = outside; t1 && !found; t1 &= t1 - 1) {
        int x = std::countr_zero(t1);
        for (Row t2 = t1 & (t1 - 1); t2 && !found; t2 &= t2 - 1)
          if (pair_deletion_indec(g, x, std::countr_zero(t2))) found = true;
      }
      if (!found)
        sink.add(i, g, "an indecomposable pair deletion outside the base",
                 "none");
      return 1;
    });
  }
}

void stmt_prop15(const Resolved& r, VerificationReport& rep) {
  for (int n : r.sizes) {
    for (ClassId cls : {ClassId::Pm1, ClassId::Qm1, ClassId::Pm3, ClassId::Qm3,
                        ClassId::Pm5, ClassId::Qm5}) {
      if (n < class_min_size(cls)) continue;
      std::vector<Graph> members = enumerate_class(cls, n);
      auto [a, b] = class_cover_pair(cls, n);
      for_indexed(static_cast<long>(members.size()), r.jobs, rep,
                  [&, a = a, b = b](long i, Sink& sink) -> long {
                    const Graph& g = members[static_cast<std::size_t>(i)];
                    bool found = false;
                    for (int k : {0, 1, 3, 5}) {
                      int m = n - k;
                      if (m < 4) break;
                      // subsets of size m containing the cover pair
                      Row fixed = vbit(a) | vbit(b);
                      Row free_bits = g.vertex_mask() & ~fixed;
                      for (Row t = free_bits;; t = (t - 1) & free_bits) {
                        if (std::popcount(t) == m - 2) {
                          Induced ind =
                              induced_subgraph(g, VertexSet(t | fixed, n));
                          if (pinned_pq_isomorphism(ind.graph,
                                                    ind.new_of_old[a],
                                                    ind.new_of_old[b])) {
                            found = true;
                            break;
                          }
                        }
                        if (t == 0) break;
                      }
                      if (found) break;
                    }
                    if (!found)
                      sink.add(i, g,
                               "a pair-minimal induced subgraph of deficit "
                               "0/1/3/5",
                               "none");
                    return 1;
                  });
    }
  }
}

bool verify_classification_witness(const Graph& g, const ClassificationResult& res) {
  if (!res.two_covered) return false;
  if (!res.cover_pair || !res.class_id || !res.relabel || !res.embedded_base)
    return false;
  if (!cover_pair_covers(g, res.cover_pair->first, res.cover_pair->second))
    return false;
  Graph k = res.complemented ? complement(g) : g;
  Graph candidate = apply_relabeling(k, *res.relabel);
  return class_predicate(candidate, *res.class_id).ok;
}

void stmt_thm17(const Resolved& r, VerificationReport& rep) {
  for (int n : r.sizes) {
    if (n < 14) fail(ErrorKind::EnvelopeExceeded, "stated for >= 14 vertices");
    constexpr ClassId kClasses[] = {ClassId::Pm1, ClassId::Qm1, ClassId::Pm3,
                                    ClassId::Qm3, ClassId::Pm5, ClassId::Qm5};
    std::vector<std::vector<Graph>> members;
    for (ClassId c : kClasses) members.push_back(enumerate_class(c, n));
    long half = r.count / 2;
    for_indexed(r.count, r.jobs, rep, [&](long i, Sink& sink) -> long {
      std::mt19937_64 rng(mix(r.seed, i));
      if (i < half) {
        const auto& pool = members[draw(rng, 6)];
        Graph g0 = pool[draw(rng, pool.size())];
        if (rng() & 1) g0 = complement(g0);
        Graph g = apply_relabeling(g0, random_permutation(n, rng));
        ClassificationResult res = classify_2covered(g);
        if (!res.two_covered)
          sink.add(i, g, "2-covered", "classifier negative");
        else if (!verify_classification_witness(g, res))
          sink.add(i, g, "verifiable witness", "witness failed re-check");
      } else {
        Graph g = random_indecomposable(n, rng);
        ClassificationResult res = classify_2covered(g);
        bool oracle = first_cover_pair(indecomposability_graph(g)).has_value();
        if (res.two_covered != oracle)
          sink.add(i, g, oracle ? "2-covered" : "not 2-covered",
                   res.two_covered ? "classifier positive" : "classifier negative");
        else if (res.two_covered && !verify_classification_witness(g, res))
          sink.add(i, g, "verifiable witness", "witness failed re-check");
      }
      return 1;
    });
  }
}

void stmt_thm21(const Resolved& r, VerificationReport& rep) {
  for (int n : r.sizes) {
    if (n < 5) fail(ErrorKind::EnvelopeExceeded, "needs a base plus outside");
    for_indexed(r.count, r.jobs, rep, [&](long i, Sink& sink) -> long {
      std::mt19937_64 rng(mix(r.seed, i));
      for (int tries = 0; tries < 1000; ++tries) {
        Graph g = random_graph(n, rng);
        int bs = 4 + static_cast<int>(draw(rng, std::min(3, n - 4)));
        Row sel = 0;
        while (std::popcount(sel) < bs)
          sel |= vbit(static_cast<int>(draw(rng, n)));
        if (!is_indecomposable(remove_vertices(g, g.vertex_mask() & ~sel)))
          continue;
        VertexSet x(sel, n);
        for (Row t = g.vertex_mask() & ~sel; t; t &= t - 1) {
          OutsideMembership m =
              outside_membership(g, x, std::countr_zero(t));
          if (m.category_count() != 1) {
            sink.add(i, g, "exactly one partition block",
                     std::to_string(m.category_count()) + " blocks");
            return 1;
          }
        }
        return 1;
      }
      return 0;
    });
  }
}

void stmt_cor22(const Resolved& r, VerificationReport& rep) {
  if (r.mode == RunMode::Exhaustive) {
    // base sizes 4..5 with 2..3 outside vertices: every labeled shape
    struct Shape { int bs, o; };
    for (Shape sh : {Shape{4, 2}, Shape{4, 3}, Shape{5, 2}}) {
      long base_codes = 1L << (sh.bs * (sh.bs - 1) / 2);
      int ext_bits = sh.o * sh.bs + sh.o * (sh.o - 1) / 2;
      long exts = 1L << ext_bits;
      const std::vector<bool>& base_table = indec_table(sh.bs);
      for (long bc = 0; bc < base_codes; ++bc) {
        if (!base_table[static_cast<std::size_t>(bc)]) continue;
        Graph base = graph_of_code(sh.bs, static_cast<std::uint32_t>(bc));
        for_indexed(exts, r.jobs, rep, [&](long e, Sink& sink) -> long {
          int n = sh.bs + sh.o;
          Graph g(n);
          for (auto [a, b] : base.edges()) g.add_edge(a, b);
          long bits = e;
          for (int v = sh.bs; v < n; ++v)
            for (int u = 0; u < v; ++u) {
              if (bits & 1) g.add_edge(u, v);
              bits >>= 1;
            }
          if (!is_indecomposable(g)) return 0;
          bool found = false;
          for (int x = sh.bs; x < n && !found; ++x)
            for (int y = x + 1; y < n && !found; ++y) {
              Row keep = mask_below(sh.bs) | vbit(x) | vbit(y);
              if (is_indecomposable(
                      remove_vertices(g, g.vertex_mask() & ~keep)))
                found = true;
            }
          if (!found)
            sink.add(bc * exts + e, g,
                     "an indecomposable 2-vertex base extension", "none");
          return 1;
        });
      }
    }
    return;
  }
  for (int n : r.sizes) {
    for_indexed(r.count, r.jobs, rep, [&](long i, Sink& sink) -> long {
      std::mt19937_64 rng(mix(r.seed, i));
      Graph g = random_indecomposable(n, rng);
      auto base = first_indec_base(g, 4);
      if (!base) return 1;
      bool found = false;
      Row outside = g.vertex_mask() & ~*base;
      for (Row t1 = outside; t1 && !found; t1 &= t1 - 1) {
        int x = std::countr_zero(t1);
        for (Row t2 = t1 & (t1 - 1); t2 && !found; t2 &= t2 - 1) {
          Row keep = *base | vbit(x) | vbit(std::countr_zero(t2));
          if (is_indecomposable(remove_vertices(g, g.vertex_mask() & ~keep)))
            found = true;
        }
      }
      if (!found)
        sink.add(i, g, "an indecomposable 2-vertex base extension", "none");
      return 1;
    });
  }
}

void stmt_thm31(const Resolved& r, VerificationReport& rep) {
  for (int n : r.sizes) {
    if (r.mode == RunMode::Exhaustive && n > 6)
      fail(ErrorKind::EnvelopeExceeded, "exhaustive capped at 6 vertices");
    Graph half = (n % 2 == 0 && n >= 4) ? make_halfgraph(n) : Graph(0);
    Graph cohalf = (n % 2 == 0 && n >= 4) ? complement(half) : Graph(0);
    auto check = [&](long idx, const Graph& g, Sink& sink) {
      bool crit = is_indecomposable(g);
      if (crit)
        for (int v = 0; v < n && crit; ++v)
          if (is_indecomposable(remove_vertex(g, v))) crit = false;
      bool canonical =
          n % 2 == 0 && n >= 4 &&
          (are_isomorphic(g, half).has_value() ||
           are_isomorphic(g, cohalf).has_value());
      if (crit != canonical)
        sink.add(idx, g, canonical ? "half-graph shape" : "not a half-graph",
                 crit ? "critical" : "not critical");
    };
    if (r.mode == RunMode::Exhaustive) {
      long total = 1L << (n * (n - 1) / 2);
      for_indexed(total, r.jobs, rep, [&](long code, Sink& sink) -> long {
        check(code, graph_of_code(n, static_cast<std::uint32_t>(code)), sink);
        return 1;
      });
    } else {
      for_indexed(r.count, r.jobs, rep, [&](long i, Sink& sink) -> long {
        std::mt19937_64 rng(mix(r.seed, i));
        check(i, random_graph(n, rng), sink);
        return 1;
      });
    }
  }
}

// Shared instance space for the partial-criticality statements: the literal
// 5-path base extended by 1..3 outside vertices, exhaustive over all
// adjacency completions.
template <typename Check>
void partial_criticality_sweep(const Resolved& r, VerificationReport& rep,
                               Check check) {
  const int bs = 5;
  Graph base = make_path(bs);
  for (int o : {1, 2, 3}) {
    int n = bs + o;
    int ext_bits = o * bs + o * (o - 1) / 2;
    long exts = 1L << ext_bits;
    for_indexed(exts, r.jobs, rep, [&](long e, Sink& sink) -> long {
      Graph g(n);
      for (auto [a, b] : base.edges()) g.add_edge(a, b);
      long bits = e;
      for (int v = bs; v < n; ++v)
        for (int u = 0; u < v; ++u) {
          if (bits & 1) g.add_edge(u, v);
          bits >>= 1;
        }
      return check(e, g, VertexSet(mask_below(bs), n), sink);
    });
  }
}

bool definitional_partial_critical(const Graph& g, const VertexSet& x) {
  if (!is_indecomposable(g)) return false;
  for (Row t = g.vertex_mask() & ~x.bits(); t; t &= t - 1)
    if (is_indecomposable(remove_vertex(g, std::countr_zero(t)))) return false;
  return true;
}

void stmt_thm32(const Resolved& r, VerificationReport& rep) {
  partial_criticality_sweep(
      r, rep, [](long e, const Graph& g, const VertexSet& x, Sink& sink) -> long {
        CriticalityReport cr = check_partial_criticality_conditions(g, x);
        bool rhs = definitional_partial_critical(g, x);
        if (cr.h_all() != rhs)
          sink.add(e, g, rhs ? "indecomposable and partially critical" : "not",
                   cr.h_all() ? "conditions hold" : "conditions fail");
        return 1;
      });
}

void stmt_thm33(const Resolved& r, VerificationReport& rep) {
  partial_criticality_sweep(
      r, rep, [](long e, const Graph& g, const VertexSet& x, Sink& sink) -> long {
        CriticalityReport cr = check_partial_criticality_conditions(g, x);
        if (cr.k_status != KFormStatus::Evaluated) return 0;
        bool rhs = definitional_partial_critical(g, x);
        if (cr.k_all() != rhs)
          sink.add(e, g, rhs ? "indecomposable and partially critical" : "not",
                   cr.k_all() ? "conditions hold" : "conditions fail");
        return 1;
      });
}

void stmt_cor34(const Resolved& r, VerificationReport& rep) {
  partial_criticality_sweep(
      r, rep, [](long e, const Graph& g, const VertexSet& x, Sink& sink) -> long {
        if (!definitional_partial_critical(g, x)) return 0;
        int outside = g.vertex_count() - x.size();
        if (outside < 2) return 1;  // vacuous: cannot be partially critical anyway
        OutsideGraph og = outside_graph(g, x);
        for (int v = 0; v < og.graph.vertex_count(); ++v)
          if (og.graph.degree(v) == 0) {
            sink.add(e, g, "no isolated outside-graph vertex",
                     "isolated vertex present");
            break;
          }
        return 1;
      });
}

// Edge translation between the plain graph and the outside graph, per the
// block signs; same-block pairs never join in the outside graph.
std::optional<std::string> edge_translation_violation(const Graph& g,
                                                      const VertexSet& x) {
  XPartition p = compute_partition(g, x);
  Row outside = p.outside_bits();
  if (std::popcount(outside) < 2) return std::nullopt;
  OutsideGraph og = outside_graph(g, x);
  auto block_of = [&](int v) -> std::pair<char, int> {
    if (p.ext.contains(v)) return {'e', -1};
    if (p.hull_minus.contains(v)) return {'m', -1};
    if (p.hull_plus.contains(v)) return {'p', -1};
    for (Row t = x.bits(); t; t &= t - 1) {
      int u = std::countr_zero(t);
      if (p.attached(u) & vbit(v)) return {'a', u};
    }
    return {'?', -1};
  };
  for (Row t1 = outside; t1; t1 &= t1 - 1) {
    int v = std::countr_zero(t1);
    for (Row t2 = t1 & (t1 - 1); t2; t2 &= t2 - 1) {
      int w = std::countr_zero(t2);
      bool e = g.adjacent(v, w);
      bool ex = og.graph.adjacent(og.new_of_old[v], og.new_of_old[w]);
      auto [bv, uv] = block_of(v);
      auto [bw, uw] = block_of(w);
      bool v_hull = bv == 'm' || bv == 'p';
      bool w_hull = bw == 'm' || bw == 'p';
      if (v_hull && w_hull) {
        if (ex) return "uniform pair joined in the outside graph";
      } else if (bv == 'a' && bw == 'a' && uv == uw) {
        if (ex) return "same-attachment pair joined in the outside graph";
      } else if ((bv == 'm' && !w_hull) || (bw == 'm' && !v_hull)) {
        if (e != ex) return "bare-side pair does not translate plainly";
      } else if ((bv == 'p' && !w_hull) || (bw == 'p' && !v_hull)) {
        if (e == ex) return "full-side pair does not translate flipped";
      } else if (bv == 'a' && bw == 'a' && uv != uw) {
        if (g.adjacent(uv, uw) ? (e == ex) : (e != ex))
          return "attached pair does not translate by the anchors' adjacency";
      }
    }
  }
  return std::nullopt;
}

void stmt_remark24(const Resolved& r, VerificationReport& rep) {
  // class members first
  for (ClassId cls : {ClassId::Pm3, ClassId::Qm3, ClassId::Pm5, ClassId::Qm5}) {
    for (int n : {class_min_size(cls), 14}) {
      if (n < class_min_size(cls)) continue;
      std::vector<Graph> members = enumerate_class(cls, n);
      int m = n - class_deficit(cls);
      for_indexed(static_cast<long>(members.size()), r.jobs, rep,
                  [&](long i, Sink& sink) -> long {
                    const Graph& g = members[static_cast<std::size_t>(i)];
                    VertexSet x(mask_below(m), n);
                    if (auto why = edge_translation_violation(g, x))
                      sink.add(i, g, "translation rules hold", *why);
                    return 1;
                  });
    }
  }
  // then random bases
  for (int n : r.sizes) {
    for_indexed(r.count, r.jobs, rep, [&](long i, Sink& sink) -> long {
      std::mt19937_64 rng(mix(r.seed, i));
      for (int tries = 0; tries < 1000; ++tries) {
        Graph g = random_graph(n, rng);
        auto base = first_indec_base(g, 4 + static_cast<int>(draw(rng, 2)));
        if (!base) continue;
        VertexSet x(*base, n);
        if (auto why = edge_translation_violation(g, x))
          sink.add(i, g, "translation rules hold", *why);
        return 1;
      }
      return 0;
    });
  }
}

std::vector<std::vector<int>> remark49_expected(int n, int i) {
  auto range = [](int lo, int hi) {
    std::vector<int> v;
    for (int t = lo; t <= hi; ++t) v.push_back(t);
    return v;
  };
  auto with = [](std::vector<int> v, std::initializer_list<int> extra) {
    for (int e : extra) v.push_back(e);
    return v;
  };
  if (i == 2) return {{1, n - 3}};
  if (i == 3) return {{1, 2}, {1, 2, n - 3}};
  if (i == 4) {
    if (n == 10) return {{1, 3}, {1, 2, 3}, {1, 2, 3, 7}, {1, 2, 3, 6, 7}};
    return {{1, 3}, {1, 2, 3}, {1, 2, 3, n - 3}};
  }
  if (i == 5) {
    if (n == 11) return {{1, 2, 3, 4}, {1, 2, 3, 4, 8}, {1, 2, 3, 4, 7, 8}};
    return {{1, 2, 3, 4}, {1, 2, 3, 4, n - 3}};
  }
  if (i == n - 4) return {range(1, n - 5)};
  if (i == n - 6 && n >= 11)
    return {range(1, n - 7), with(range(1, n - 7), {n - 3}),
            with(range(1, n - 7), {n - 4, n - 3})};
  // remaining inner labels, including i == n-5
  return {range(1, i - 1), with(range(1, i - 1), {n - 3})};
}

void stmt_remark49(const Resolved& r, VerificationReport& rep) {
  for (int n : r.sizes) {
    if (n < 10 || n > 16)
      fail(ErrorKind::EnvelopeExceeded, "tables stated for sizes 10..16");
    for (int i = 2; i <= n - 4; ++i) {
      for_indexed(1, 1, rep, [&](long, Sink& sink) -> long {
        Graph q = make_q(n - 3);
        int removed = i - 1;  // internal id of the dropped label
        Graph h = remove_vertex(q, removed);
        std::vector<std::vector<int>> observed;
        for (const VertexSet& s : nontrivial_intervals(h)) {
          std::vector<int> paper;
          for (int v : s.members()) paper.push_back(v < removed ? v + 1 : v + 2);
          observed.push_back(std::move(paper));
        }
        std::vector<std::vector<int>> expected = remark49_expected(n, i);
        for (auto& s : expected) std::sort(s.begin(), s.end());
        auto canon = [](std::vector<std::vector<int>> v) {
          std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
          });
          return v;
        };
        if (canon(expected) != canon(observed))
          sink.add(n * 100 + i, h, set_list_string(canon(expected)),
                   set_list_string(canon(observed)));
        return 1;
      });
    }
  }
}

// ---------------------------------------------------------------------------
// registry
// ---------------------------------------------------------------------------

struct Entry {
  StatementInfo info;
  Handler handler;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> kEntries = {
      {{"NOT-1-COVERED",
        "no single vertex of an indecomposable graph on >= 11 vertices meets "
        "every indecomposability-preserving pair deletion",
        RunMode::Sampled, {11, 12, 13}, 500},
       stmt_not1covered},
      {{"MINUS2",
        "every indecomposable graph on >= 6 vertices admits a pair deletion "
        "that stays indecomposable",
        RunMode::Sampled, {10}, 5000},
       stmt_minus2},
      {{"MINUS2-OUTSIDE-X",
        "an indecomposable graph with an indecomposable 4-vertex base and >= "
        "6 outside vertices admits an indecomposability-preserving pair "
        "deletion avoiding the base",
        RunMode::Sampled, {10, 11, 12}, 500},
       stmt_minus2_outside},
      {{"THM-1.4",
        "pair-minimality coincides with a pinned path / quasi-path structure "
        "of the graph or its complement",
        RunMode::Exhaustive, {4, 5, 6}, 2000},
       stmt_thm14},
      {{"PROP-1.5",
        "every listed-class member contains a pair-minimal induced subgraph "
        "of deficit 0, 1, 3 or 5 through its cover pair",
        RunMode::Exhaustive, {14}, 500},
       stmt_prop15},
      {{"THM-1.7",
        "the 2-covered classification agrees with the definitional cover "
        "search and every positive witness re-verifies",
        RunMode::Sampled, {14}, 200},
       stmt_thm17},
      {{"THM-2.1",
        "each outside vertex of an indecomposable base lands in exactly one "
        "block: extending, uniform, or attached to a unique base vertex",
        RunMode::Sampled, {8, 10, 12}, 2000},
       stmt_thm21},
      {{"COR-2.2",
        "an indecomposable graph with an indecomposable base of size >= 4 "
        "and >= 2 outside vertices has an indecomposable 2-vertex base "
        "extension",
        RunMode::Exhaustive, {8, 10}, 2000},
       stmt_cor22},
      {{"THM-3.1",
        "the graphs whose every vertex deletion breaks indecomposability are "
        "exactly the half-graphs and their complements",
        RunMode::Exhaustive, {6}, 2000},
       stmt_thm31},
      {{"THM-3.2",
        "the three block conditions characterize graphs that are "
        "indecomposable and critical according to a base",
        RunMode::Exhaustive, {}, 2000},
       stmt_thm32},
      {{"THM-3.3",
        "with >= 3 outside vertices and a connected outside graph, the four "
        "block conditions characterize partial criticality",
        RunMode::Exhaustive, {}, 2000},
       stmt_thm33},
      {{"COR-3.4",
        "a graph critical according to a base has no isolated vertex in its "
        "outside graph",
        RunMode::Exhaustive, {}, 2000},
       stmt_cor34},
      {{"PROP-4.2",
        "above a literal path base, the deficit-1 members are exactly the "
        "listed singleton and consecutive-pair neighborhoods",
        RunMode::Exhaustive, {9, 10, 11}, 2000},
       stmt_prop42},
      {{"PROP-4.4",
        "above a literal quasi-path base, the deficit-1 members are exactly "
        "the four listed neighborhood shapes",
        RunMode::Exhaustive, {11, 12}, 2000},
       stmt_prop44},
      {{"PROP-4.7",
        "the deficit-3 path-frame members are exactly the first shape-list "
        "class, up to relabeling",
        RunMode::Sampled, {12, 14}, 20000},
       stmt_prop47},
      {{"PROP-4.10",
        "the deficit-3 quasi-path-frame members are exactly the second "
        "shape-list class, up to relabeling",
        RunMode::Sampled, {10, 14}, 20000},
       stmt_prop410},
      {{"PROP-4.11",
        "the deficit-5 path-frame members are exactly the 5-path "
        "bipartition shapes, up to relabeling",
        RunMode::Sampled, {14}, 20000},
       stmt_prop411},
      {{"PROP-4.12",
        "the deficit-5 quasi-path-frame members are exactly the 5-path "
        "bipartition shapes over the four allowed blocks, up to relabeling",
        RunMode::Sampled, {12, 14}, 20000},
       stmt_prop412},
      {{"REMARK-1",
        "the indecomposability graphs of paths and quasi-paths equal their "
        "closed-form three- and four-edge lists",
        RunMode::Exhaustive, {6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16}, 2000},
       stmt_remark1},
      {{"REMARK-2.4",
        "outside-graph edges translate to plain edges by block signs, and "
        "same-block pairs never join",
        RunMode::Sampled, {8, 10, 12}, 1000},
       stmt_remark24},
      {{"REMARK-4.9",
        "the nontrivial intervals of a quasi-path minus one inner label "
        "match their closed-form tables",
        RunMode::Exhaustive, {10, 11, 12, 13}, 2000},
       stmt_remark49},
  };
  return kEntries;
}

}  // namespace

const std::vector<StatementInfo>& statement_registry() {
  static const std::vector<StatementInfo> kInfos = [] {
    std::vector<StatementInfo> v;
    for (const Entry& e : entries()) v.push_back(e.info);
    return v;
  }();
  return kInfos;
}

const StatementInfo* find_statement(const std::string& id) {
  for (const StatementInfo& s : statement_registry())
    if (s.id == id) return &s;
  return nullptr;
}

VerificationReport run_statement(const std::string& id, const RunParams& params) {
  const Entry* entry = nullptr;
  for (const Entry& e : entries())
    if (e.info.id == id) entry = &e;
  if (!entry) fail(ErrorKind::UnknownStatement, "unknown statement id: " + id);

  Resolved r;
  r.sizes = params.n >= 0 ? std::vector<int>{params.n} : entry->info.default_sizes;
  r.mode = params.mode.value_or(entry->info.default_mode);
  r.seed = params.seed;
  r.count = params.count > 0 ? params.count : entry->info.default_count;
  r.jobs = params.jobs;

  VerificationReport rep;
  rep.statement_id = id;
  rep.sizes = r.sizes;
  rep.mode = r.mode;
  rep.seed = r.mode == RunMode::Sampled ? r.seed : 0;
  rep.count = r.mode == RunMode::Sampled ? r.count : 0;

  auto start = std::chrono::steady_clock::now();
  entry->handler(r, rep);
  rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return rep;
}

}  // namespace icover
