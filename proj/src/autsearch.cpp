#include "haarforge/autsearch.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "haarforge/constructions.hpp"
#include "haarforge/graph6.hpp"

namespace haarforge {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  // splitmix64 finalizer over the running state
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebULL;
  h ^= h >> 31;
  return h;
}

// Ordered partition of the vertex set. Cells are contiguous position ranges
// of `lab`; `cell[p]` is the start of the cell holding position p and
// `len[s]` is the length of the cell starting at s.
struct Partition {
  std::vector<Vertex> lab;
  std::vector<std::uint32_t> pos;
  std::vector<std::uint32_t> cell;
  std::vector<std::uint32_t> len;
  std::uint32_t cells = 0;

  std::size_t size() const { return lab.size(); }
  bool discrete() const { return cells == lab.size(); }
};

class Refiner {
public:
  explicit Refiner(const Graph& g)
      : g_(g), count_(g.order(), 0), touched_flag_(g.order(), 0), in_queue_(g.order(), 0) {}

  // Refines p to the coarsest equitable partition finer than it, starting
  // from the given splitter cells. Returns a hash of the refinement trace;
  // the trace depends only on cell positions and counts.
  std::uint64_t refine(Partition& p, std::vector<std::uint32_t> queue, std::uint64_t h) {
    for (auto s : queue) in_queue_[s] = 1;
    std::size_t head = 0;
    while (head < queue.size() && !p.discrete()) {
      const std::uint32_t w = queue[head++];
      in_queue_[w] = 0;
      const std::uint32_t wlen = p.len[w];
      touched_starts_.clear();
      touched_vertices_.clear();
      for (std::uint32_t q = w; q < w + wlen; ++q)
        for (Vertex u : g_.neighbors(p.lab[q])) {
          if (count_[u]++ == 0) {
            touched_vertices_.push_back(u);
            const std::uint32_t s = p.cell[p.pos[u]];
            if (!touched_flag_[s]) {
              touched_flag_[s] = 1;
              touched_starts_.push_back(s);
            }
          }
        }
      std::sort(touched_starts_.begin(), touched_starts_.end());
      for (std::uint32_t s : touched_starts_) {
        touched_flag_[s] = 0;
        const std::uint32_t l = p.len[s];
        if (l == 1) continue;
        split(p, s, l, w, queue, h);
      }
      for (Vertex u : touched_vertices_) count_[u] = 0;
    }
    for (std::size_t i = head; i < queue.size(); ++i) in_queue_[queue[i]] = 0;
    return mix(h, p.cells);
  }

private:
  void split(Partition& p, std::uint32_t s, std::uint32_t l, std::uint32_t w,
             std::vector<std::uint32_t>& queue, std::uint64_t& h) {
    auto first = p.lab.begin() + s, last = first + l;
    std::stable_sort(first, last, [&](Vertex a, Vertex b) { return count_[a] < count_[b]; });
    if (count_[*first] == count_[*(last - 1)]) return;
    for (std::uint32_t q = s; q < s + l; ++q) p.pos[p.lab[q]] = q;

    frag_starts_.clear();
    for (std::uint32_t q = s; q < s + l; ++q)
      if (q == s || count_[p.lab[q]] != count_[p.lab[q - 1]]) frag_starts_.push_back(q);
    h = mix(h, (std::uint64_t{s} << 32) | w);
    std::size_t largest = 0;
    std::uint32_t largest_len = 0;
    for (std::size_t f = 0; f < frag_starts_.size(); ++f) {
      const std::uint32_t fs = frag_starts_[f];
      const std::uint32_t fe = f + 1 < frag_starts_.size() ? frag_starts_[f + 1] : s + l;
      p.len[fs] = fe - fs;
      for (std::uint32_t q = fs; q < fe; ++q) p.cell[q] = fs;
      h = mix(h, (std::uint64_t{count_[p.lab[fs]]} << 32) | (fe - fs));
      if (fe - fs > largest_len) {
        largest_len = fe - fs;
        largest = f;
      }
    }
    p.cells += static_cast<std::uint32_t>(frag_starts_.size() - 1);
    const bool was_queued = in_queue_[s];
    for (std::size_t f = 0; f < frag_starts_.size(); ++f) {
      const std::uint32_t fs = frag_starts_[f];
      if ((was_queued || f != largest) && !in_queue_[fs]) {
        in_queue_[fs] = 1;
        queue.push_back(fs);
      }
    }
  }

  const Graph& g_;
  std::vector<std::uint32_t> count_;
  std::vector<char> touched_flag_;
  std::vector<char> in_queue_;
  std::vector<std::uint32_t> touched_starts_;
  std::vector<Vertex> touched_vertices_;
  std::vector<std::uint32_t> frag_starts_;
};

// Union-find orbits of the subgroup generated by those automorphisms that
// fix a given vertex sequence pointwise. Grows incrementally as generators
// are discovered.
class StabilizerOrbits {
public:
  explicit StabilizerOrbits(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), Vertex{0});
  }

  void update(const std::vector<Permutation>& gens, const std::vector<Vertex>& fixed) {
    for (; seen_ < gens.size(); ++seen_) {
      const auto& g = gens[seen_];
      if (!std::all_of(fixed.begin(), fixed.end(), [&](Vertex v) { return g[v] == v; })) continue;
      for (Vertex v = 0; v < parent_.size(); ++v) unite(v, g[v]);
    }
  }

  Vertex find(Vertex v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }

private:
  void unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

  std::vector<Vertex> parent_;
  std::size_t seen_ = 0;
};

class Searcher {
public:
  Searcher(const Graph& g, std::span<const int> colors)
      : g_(g), n_(g.order()), words_((g.order() + 63) / 64), refiner_(g), colors_(colors) {
    if (!colors_.empty() && colors_.size() != n_)
      throw std::invalid_argument("search_symmetries: colour vector has wrong length");
  }

  SymmetryResult run() {
    SymmetryResult result;
    if (n_ == 0) {
      result.certificate = {encode_graph6(g_), Permutation::identity(0)};
      return result;
    }
    Partition root = initial_partition();
    std::vector<std::uint32_t> queue;
    for (std::uint32_t s = 0; s < n_; s += root.len[s]) queue.push_back(s);
    trace_.assign(1, refiner_.refine(root, queue, root_hash_));
    explore(root, 0, true, 0);

    result.generators = std::move(gens_);
    std::vector<Point> relabel(n_);
    for (std::uint32_t i = 0; i < n_; ++i) relabel[best_lab_[i]] = i;
    Permutation relabeling(std::move(relabel));
    result.certificate = {encode_graph6(g_.relabeled(relabeling.images())), std::move(relabeling)};
    result.leaves = leaves_;
    return result;
  }

private:
  Partition initial_partition() {
    Partition p;
    p.lab.resize(n_);
    std::iota(p.lab.begin(), p.lab.end(), Vertex{0});
    if (!colors_.empty())
      std::stable_sort(p.lab.begin(), p.lab.end(),
                       [&](Vertex a, Vertex b) { return colors_[a] < colors_[b]; });
    p.pos.resize(n_);
    p.cell.resize(n_);
    p.len.assign(n_, 0);
    std::uint32_t start = 0;
    root_hash_ = mix(0, n_);
    for (std::uint32_t q = 0; q < n_; ++q) {
      p.pos[p.lab[q]] = q;
      if (q > 0 && !colors_.empty() && colors_[p.lab[q]] != colors_[p.lab[q - 1]]) {
        p.len[start] = q - start;
        root_hash_ = mix(root_hash_, (static_cast<std::uint64_t>(colors_[p.lab[start]]) << 32) |
                                         (q - start));
        start = q;
        ++p.cells;
      }
      p.cell[q] = start;
    }
    p.len[start] = static_cast<std::uint32_t>(n_) - start;
    if (!colors_.empty())
      root_hash_ = mix(root_hash_, (static_cast<std::uint64_t>(colors_[p.lab[start]]) << 32) |
                                       (n_ - start));
    ++p.cells;
    return p;
  }

  std::uint32_t target_cell(const Partition& p) const {
    std::uint32_t best = 0, best_len = 0;
    for (std::uint32_t s = 0; s < n_; s += p.len[s])
      if (p.len[s] > 1 && (best_len == 0 || p.len[s] < best_len)) {
        best = s;
        best_len = p.len[s];
      }
    return best;
  }

  // Splits {v} off the front of its cell and refines.
  std::uint64_t individualize(Partition& p, Vertex v) {
    const std::uint32_t s = p.cell[p.pos[v]], l = p.len[s];
    const std::uint32_t q = p.pos[v];
    std::swap(p.lab[s], p.lab[q]);
    p.pos[p.lab[q]] = q;
    p.pos[v] = s;
    p.len[s] = 1;
    p.len[s + 1] = l - 1;
    for (std::uint32_t r = s + 1; r < s + l; ++r) p.cell[r] = s + 1;
    ++p.cells;
    return refiner_.refine(p, {s}, mix(0x7e57ab1eULL, (std::uint64_t{s} << 32) | l));
  }

  std::vector<std::uint64_t> encode(const std::vector<Vertex>& lab, const Partition& p) const {
    std::vector<std::uint64_t> enc(n_ * words_, 0);
    for (std::uint32_t i = 0; i < n_; ++i)
      for (Vertex w : g_.neighbors(lab[i])) {
        const std::uint32_t j = p.pos[w];
        enc[i * words_ + j / 64] |= std::uint64_t{1} << (63 - j % 64);
      }
    return enc;
  }

  void add_automorphism(const std::vector<Vertex>& from, const std::vector<Vertex>& to) {
    std::vector<Point> img(n_);
    for (std::uint32_t i = 0; i < n_; ++i) img[from[i]] = to[i];
    Permutation gamma(std::move(img));
    if (!gamma.is_identity()) gens_.push_back(std::move(gamma));
  }

  static int common_prefix(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::size_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
    return static_cast<int>(k);
  }

  int leaf(const Partition& p, int level, bool eq_first, int cmp_best) {
    ++leaves_;
    auto enc = encode(p.lab, p);
    if (!have_first_) {
      have_first_ = true;
      first_lab_ = best_lab_ = p.lab;
      first_trace_ = best_trace_ = trace_;
      first_enc_ = best_enc_ = enc;
      first_seq_ = best_seq_ = seq_;
      return level - 1;
    }
    if (eq_first && enc == first_enc_) {
      add_automorphism(first_lab_, p.lab);
      return common_prefix(seq_, first_seq_);
    }
    if (cmp_best > 0 || (cmp_best == 0 && enc < best_enc_)) {
      best_lab_ = p.lab;
      best_trace_ = trace_;
      best_enc_ = std::move(enc);
      best_seq_ = seq_;
      return level - 1;
    }
    if (cmp_best == 0 && enc == best_enc_) {
      add_automorphism(best_lab_, p.lab);
      return common_prefix(seq_, best_seq_);
    }
    return level - 1;
  }

  int explore(const Partition& p, int level, bool eq_first, int cmp_best) {
    if (p.discrete()) return leaf(p, level, eq_first, cmp_best);
    const std::uint32_t s = target_cell(p);
    const std::vector<Vertex> candidates(p.lab.begin() + s, p.lab.begin() + s + p.len[s]);
    StabilizerOrbits orbits(n_);
    std::vector<Vertex> explored;
    const std::size_t next = static_cast<std::size_t>(level) + 1;
    for (Vertex v : candidates) {
      orbits.update(gens_, seq_);
      const Vertex root = orbits.find(v);
      if (std::any_of(explored.begin(), explored.end(),
                      [&](Vertex w) { return orbits.find(w) == root; }))
        continue;
      explored.push_back(v);

      Partition child = p;
      const std::uint64_t t = individualize(child, v);
      bool child_eq_first = eq_first;
      int child_cmp = cmp_best;
      if (have_first_) {
        child_eq_first = eq_first && next < first_trace_.size() && t == first_trace_[next];
        if (child_cmp == 0) {
          if (next >= best_trace_.size())
            child_cmp = -1;
          else if (t != best_trace_[next])
            child_cmp = t > best_trace_[next] ? 1 : -1;
        }
        if (!child_eq_first && child_cmp < 0) continue;
      }
      trace_.resize(next + 1);
      trace_[next] = t;
      seq_.push_back(v);
      const int r = explore(child, level + 1, child_eq_first, child_cmp);
      seq_.pop_back();
      if (r < level) return r;
    }
    return level - 1;
  }

  const Graph& g_;
  std::size_t n_;
  std::size_t words_;
  Refiner refiner_;
  std::span<const int> colors_;
  std::uint64_t root_hash_ = 0;

  std::vector<Permutation> gens_;
  bool have_first_ = false;
  std::vector<Vertex> first_lab_, best_lab_;
  std::vector<std::uint64_t> first_trace_, best_trace_;
  std::vector<std::uint64_t> first_enc_, best_enc_;
  std::vector<Vertex> first_seq_, best_seq_;
  std::vector<Vertex> seq_;
  std::vector<std::uint64_t> trace_;
  std::size_t leaves_ = 0;
};

}  // namespace

SymmetryResult search_symmetries(const Graph& g, std::span<const int> colors) {
  return Searcher(g, colors).run();
}

PermGroup automorphism_group(const Graph& g) {
  return PermGroup(g.order(), search_symmetries(g).generators);
}

Certificate canonical_form(const Graph& g) { return search_symmetries(g).certificate; }

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  if (a.degree_sequence() != b.degree_sequence()) return false;
  if (girth(a) != girth(b)) return false;
  if (bipartition(a).has_value() != bipartition(b).has_value()) return false;
  return canonical_form(a) == canonical_form(b);
}

BruteForceResult brute_force_automorphisms(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kBruteForceVertexCap)
    throw std::invalid_argument("brute_force_automorphisms: " + std::to_string(n) +
                                " vertices exceeds the cap of " +
                                std::to_string(kBruteForceVertexCap));
  const auto edges = g.edges();
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  BruteForceResult result;
  std::vector<Permutation> gens;
  PermGroup current(n, {});
  do {
    bool ok = true;
    for (auto [a, b] : edges)
      if (!g.adjacent(img[a], img[b])) {
        ok = false;
        break;
      }
    if (!ok) continue;
    ++result.automorphism_count;
    Permutation p(img);
    if (!current.contains(p)) {
      gens.push_back(std::move(p));
      current = PermGroup(n, gens);
    }
  } while (std::next_permutation(img.begin(), img.end()));
  result.group = current;
  return result;
}

}  // namespace haarforge
