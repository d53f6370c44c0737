#include "haarforge/classify.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_set>

#include "haarforge/autsearch.hpp"
#include "haarforge/constructions.hpp"
#include "haarforge/groups.hpp"

namespace haarforge {

namespace {

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (Point x : p.images()) h = (h ^ x) * 1099511628211ULL;
    return static_cast<std::size_t>(h);
  }
};

// A semiregular subgroup, with each element indexed by the image of the
// search base point.
struct Subgroup {
  std::vector<Permutation> elems;  // elems[0] is the identity
  std::vector<int> at;             // at[p]: element mapping the base to p, or -1
  std::vector<Permutation> gens;

  std::size_t size() const { return elems.size(); }
};

class RegularSearch {
public:
  RegularSearch(const PermGroup& group, std::span<const Point> points,
                const RegularSubgroupOptions& options)
      : degree_(group.degree()),
        points_(points.begin(), points.end()),
        in_points_(group.degree(), 0),
        everywhere_(options.semiregular_everywhere),
        seeds_(options.seeds),
        source_(group) {
    if (points_.empty()) throw std::invalid_argument("find_regular_subgroup: empty point set");
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
    for (Point p : points_) {
      if (p >= degree_) throw std::invalid_argument("find_regular_subgroup: point out of range");
      in_points_[p] = 1;
    }
    for (const auto& g : group.generators())
      for (Point p : points_)
        if (!in_points_[g[p]])
          throw std::invalid_argument("find_regular_subgroup: point set is not invariant");
    target_ = points_.size();
    base_ = points_.front();
  }

  std::optional<std::vector<Permutation>> run() {
    if (source_.orbit(base_).size() != target_) return std::nullopt;
    group_ = PermGroup(degree_, source_.generators(), {base_});
    chain_ = &group_.chain();
    if (group_.order() % target_ != 0) return std::nullopt;

    const Subgroup trivial = trivial_subgroup();
    for (const auto& seed : seeds_) {
      std::optional<Subgroup> h = trivial;
      for (const auto& s : seed) {
        if (!h) break;
        if (s.degree() != degree_ || !group_.contains(s)) {
          h.reset();
          break;
        }
        if (s.is_identity() || h->at[s[base_]] >= 0) continue;
        h = close(*h, s);
      }
      if (!h) continue;
      if (auto found = dfs(*h)) return found->gens;
    }
    if (auto found = top_level(trivial)) return found->gens;
    return std::nullopt;
  }

private:
  Subgroup trivial_subgroup() const {
    Subgroup h;
    h.elems.push_back(Permutation::identity(degree_));
    h.at.assign(degree_, -1);
    h.at[base_] = 0;
    return h;
  }

  // Non-identity elements of a semiregular group have all cycles of one
  // length on the relevant points, and no fixed points there.
  bool semiregular_ok(const Permutation& c) const {
    std::vector<char> seen(degree_, 0);
    std::size_t cycle_len = 0;
    for (Point p = 0; p < degree_; ++p) {
      if (seen[p] || (!everywhere_ && !in_points_[p])) continue;
      std::size_t len = 0;
      for (Point q = p; !seen[q]; q = c[q]) {
        seen[q] = 1;
        ++len;
      }
      if (len == 1) return false;
      if (cycle_len == 0) cycle_len = len;
      if (len != cycle_len) return false;
    }
    return cycle_len != 0 && target_ % cycle_len == 0;
  }

  // Closure of <H, c>, or nullopt if it is not semiregular.
  std::optional<Subgroup> close(const Subgroup& h, const Permutation& c) const {
    Subgroup r = h;
    r.gens.push_back(c);
    const std::size_t old_size = r.size();
    for (std::size_t i = 0; i < r.size(); ++i) {
      const std::size_t first_gen = i < old_size ? r.gens.size() - 1 : 0;
      for (std::size_t k = first_gen; k < r.gens.size(); ++k) {
        Permutation e = compose(r.elems[i], r.gens[k]);
        const Point y = e[base_];
        if (r.at[y] >= 0) {
          if (r.elems[r.at[y]] != e) return std::nullopt;
          continue;
        }
        if (!semiregular_ok(e)) return std::nullopt;
        r.at[y] = static_cast<int>(r.size());
        r.elems.push_back(std::move(e));
        if (r.size() > target_) return std::nullopt;
      }
    }
    return r;
  }

  std::optional<Subgroup> dfs(const Subgroup& h) {
    if (h.size() == target_) return h;
    Point x = base_;
    for (Point p : points_)
      if (h.at[p] < 0) {
        x = p;
        break;
      }
    if (2 * h.size() == target_) return extend_index_two(h, x);
    return extend_by_coset(h, x);
  }

  std::optional<Subgroup> try_candidate(const Subgroup& h, const Permutation& c) {
    if (!semiregular_ok(c)) return std::nullopt;
    auto next = close(h, c);
    if (!next) return std::nullopt;
    return dfs(*next);
  }

  // Lazily enumerates the coset {c in A : c(base) = x} level by level down
  // the stabilizer chain. The partial product fixes the images of the base
  // points handled so far, which lets whole subtrees be pruned.
  std::optional<Subgroup> extend_by_coset(const Subgroup& h, Point x) {
    const auto& levels = chain_->levels;
    const Permutation start = levels[0].transversal_for(x);
    std::function<std::optional<Subgroup>(std::size_t, const Permutation&)> walk =
        [&](std::size_t level, const Permutation& suffix) -> std::optional<Subgroup> {
      if (level == levels.size()) return try_candidate(h, suffix);
      const Point beta = levels[level].point;
      for (Point y : levels[level].orbit) {
        Permutation s = compose(levels[level].transversal_for(y), suffix);
        const Point img = s[beta];
        if (img == beta && (everywhere_ || in_points_[beta])) continue;
        // An element of R outside H cannot map a point of base^H back into
        // base^H.
        if (h.at[beta] >= 0 && h.at[img] >= 0) continue;
        if (auto found = walk(level + 1, s)) return found;
      }
      return std::nullopt;
    };
    return walk(1, start);
  }

  // When [R : H] = 2, H is normal in R and any c in R \ H with c(base) = x
  // is fixed by an automorphism phi of H (phi(h) = c h c^-1) and by
  // h0 = c^2 in H. Enumerates those pairs instead of the coset.
  std::optional<Subgroup> extend_index_two(const Subgroup& h, Point x) {
    const std::size_t m = h.size();
    std::vector<std::vector<Element>> table(m, std::vector<Element>(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        // As maps: apply elems[j] then elems[i], so the table is that of
        // function composition.
        const Point y = h.elems[i][h.elems[j][base_]];
        table[i][j] = static_cast<Element>(h.at[y]);
      }
    const FiniteGroup abstract = validate_table(table, "H");
    const auto automorphisms = group_automorphisms(abstract);

    constexpr Point unset = ~Point{0};
    for (const auto& phi : automorphisms)
      for (std::size_t k = 0; k < m; ++k) {
        std::vector<Point> img(degree_, unset);
        std::vector<char> used(degree_, 0);
        // c(h(p)) = phi(h)(z) and c(c(h(p))) = h0(h(p)).
        auto assign = [&](std::vector<Point>& map, std::vector<char>& taken, Point p, Point z) {
          auto set = [&](Point from, Point to) {
            if (map[from] == unset) {
              if (taken[to]) return false;
              map[from] = to;
              taken[to] = 1;
              return true;
            }
            return map[from] == to;
          };
          for (std::size_t i = 0; i < m; ++i) {
            const Point q = h.elems[i][p];
            const Point cq = h.elems[phi[i]][z];
            if (!set(q, cq) || !set(cq, h.elems[k][q])) return false;
          }
          return true;
        };
        if (!assign(img, used, base_, x)) continue;

        std::function<std::optional<Subgroup>(std::vector<Point>&, std::vector<char>&)> complete =
            [&](std::vector<Point>& map, std::vector<char>& taken) -> std::optional<Subgroup> {
          const auto free = std::find(map.begin(), map.end(), unset);
          if (free == map.end()) {
            Permutation c(map);
            if (!group_.contains(c)) return std::nullopt;
            return try_candidate(h, c);
          }
          const Point p = static_cast<Point>(free - map.begin());
          for (Point z = 0; z < degree_; ++z) {
            if (taken[z] || in_points_[z] != in_points_[p]) continue;
            auto map2 = map;
            auto taken2 = taken;
            if (!assign(map2, taken2, p, z)) continue;
            if (auto found = complete(map2, taken2)) return found;
          }
          return std::nullopt;
        };
        if (auto found = complete(img, used)) return found;
      }
    return std::nullopt;
  }

  // First step from the trivial subgroup. The target point is taken from a
  // smallest orbit of the base stabilizer; candidates conjugate under the
  // two-point stabilizer lead to conjugate searches, so one per class is
  // enough.
  std::optional<Subgroup> top_level(const Subgroup& trivial) {
    if (target_ == 1) return trivial;
    if (2 == target_) return dfs(trivial);

    std::vector<Permutation> stab_gens;
    for (const auto& s : chain_->strong_generators)
      if (s[base_] == base_) stab_gens.push_back(s);
    const PermGroup stabilizer(degree_, stab_gens);
    Point x = base_;
    std::size_t best = 0;
    for (Point p : points_) {
      if (p == base_) continue;
      const std::size_t size = stabilizer.orbit(p).size();
      if (best == 0 || size < best) {
        best = size;
        x = p;
      }
    }

    BigInt stab_order = group_.order() / target_;
    constexpr unsigned kEnumerationCap = 200000;
    if (stab_order > kEnumerationCap) return extend_by_coset(trivial, x);

    const PermGroup two_point(degree_, source_.generators(), {base_, x});
    std::vector<Permutation> conj_gens;
    for (const auto& s : two_point.chain().strong_generators)
      if (s[base_] == base_ && s[x] == x) conj_gens.push_back(s);
    std::vector<Permutation> conj_inv;
    for (const auto& s : conj_gens) conj_inv.push_back(s.inverse());

    std::vector<Permutation> candidates;
    const auto& levels = chain_->levels;
    std::function<void(std::size_t, const Permutation&)> collect = [&](std::size_t level,
                                                                      const Permutation& suffix) {
      if (level == levels.size()) {
        if (semiregular_ok(suffix)) candidates.push_back(suffix);
        return;
      }
      for (Point y : levels[level].orbit)
        collect(level + 1, compose(levels[level].transversal_for(y), suffix));
    };
    collect(1, levels[0].transversal_for(x));

    std::unordered_set<Permutation, PermutationHash> covered;
    for (const auto& c : candidates) {
      if (covered.count(c)) continue;
      std::vector<Permutation> queue{c};
      covered.insert(c);
      for (std::size_t i = 0; i < queue.size(); ++i)
        for (std::size_t k = 0; k < conj_gens.size(); ++k) {
          Permutation d = compose(compose(conj_inv[k], queue[i]), conj_gens[k]);
          if (covered.insert(d).second) queue.push_back(std::move(d));
        }
      if (auto found = try_candidate(trivial, c)) return found;
    }
    return std::nullopt;
  }

  std::size_t degree_;
  std::vector<Point> points_;
  std::vector<char> in_points_;
  bool everywhere_;
  std::vector<std::vector<Permutation>> seeds_;
  const PermGroup& source_;
  PermGroup group_;
  const StabilizerChain* chain_ = nullptr;
  std::size_t target_ = 0;
  Point base_ = 0;
};

}  // namespace

std::optional<std::vector<Permutation>> find_regular_subgroup(const PermGroup& group,
                                                              std::span<const Point> points,
                                                              const RegularSubgroupOptions& options) {
  return RegularSearch(group, points, options).run();
}

PermGroup part_preserving_subgroup(const PermGroup& group, std::span<const unsigned char> side) {
  if (side.size() != group.degree())
    throw std::invalid_argument("part_preserving_subgroup: side vector has wrong length");
  auto preserves = [&](const Permutation& g) {
    for (Point p = 0; p < g.degree(); ++p)
      if (side[g[p]] != side[p]) return false;
    return true;
  };
  auto swaps = [&](const Permutation& g) {
    for (Point p = 0; p < g.degree(); ++p)
      if (side[g[p]] == side[p]) return false;
    return true;
  };
  const Permutation* swap = nullptr;
  for (const auto& g : group.generators()) {
    if (preserves(g)) continue;
    if (!swaps(g))
      throw std::invalid_argument("part_preserving_subgroup: generator mixes the parts");
    if (!swap) swap = &g;
  }
  if (!swap) return group;
  // Schreier generators for the transversal {1, t}.
  const Permutation& t = *swap;
  const Permutation t_inv = t.inverse();
  std::vector<Permutation> gens;
  for (const auto& g : group.generators()) {
    if (preserves(g)) {
      gens.push_back(g);
      gens.push_back(compose(compose(t, g), t_inv));
    } else {
      gens.push_back(compose(g, t_inv));
      gens.push_back(compose(t, g));
    }
  }
  std::erase_if(gens, [](const Permutation& p) { return p.is_identity(); });
  return PermGroup(group.degree(), std::move(gens));
}

bool is_vertex_transitive(const PermGroup& aut) { return aut.orbits().size() <= 1; }

bool is_vertex_transitive(const Graph& g) { return is_vertex_transitive(automorphism_group(g)); }

bool is_arc_transitive(const Graph& g, const PermGroup& aut) {
  if (g.edge_count() == 0) throw std::invalid_argument("is_arc_transitive: graph has no edges");
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) return false;
  std::vector<std::size_t> offset(g.order() + 1, 0);
  for (Vertex v = 0; v < g.order(); ++v) offset[v + 1] = offset[v] + g.degree(v);
  auto arc_index = [&](Vertex a, Vertex b) {
    const auto nb = g.neighbors(a);
    return offset[a] + (std::lower_bound(nb.begin(), nb.end(), b) - nb.begin());
  };
  const std::size_t arcs = offset.back();
  std::vector<char> seen(arcs, 0);
  std::vector<Edge> queue{{0, g.neighbors(0)[0]}};
  seen[0] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& s : aut.generators()) {
      const Vertex a = s[queue[i].first], b = s[queue[i].second];
      const std::size_t k = arc_index(a, b);
      if (!seen[k]) {
        seen[k] = 1;
        queue.emplace_back(a, b);
      }
    }
  return queue.size() == arcs;
}

bool is_arc_transitive(const Graph& g) { return is_arc_transitive(g, automorphism_group(g)); }

Witness is_cayley(const Graph& g, const PermGroup& aut, const RegularSubgroupOptions& options) {
  if (g.order() == 0) return {};
  std::vector<Point> all(g.order());
  for (Point p = 0; p < all.size(); ++p) all[p] = p;
  auto found = find_regular_subgroup(aut, all, options);
  if (!found) return {};
  return {true, std::move(*found)};
}

Witness is_cayley(const Graph& g) { return is_cayley(g, automorphism_group(g)); }

Witness is_haar(const Graph& g, const PermGroup& aut, const RegularSubgroupOptions& options) {
  const auto bp = bipartition(g);
  if (!bp || bp->part0.empty() || bp->part0.size() != bp->part1.size()) return {};
  PermGroup preserving;
  if (is_connected(g)) {
    preserving = part_preserving_subgroup(aut, bp->side);
  } else {
    // Automorphisms of a disconnected graph can map part 0 of one component
    // into part 1 of another; restrict the search by colour instead.
    std::vector<int> colors(bp->side.begin(), bp->side.end());
    preserving = PermGroup(g.order(), search_symmetries(g, colors).generators);
  }
  RegularSubgroupOptions opts = options;
  opts.semiregular_everywhere = true;
  auto found = find_regular_subgroup(preserving, bp->part0, opts);
  if (!found) return {};
  return {true, std::move(*found)};
}

Witness is_haar(const Graph& g) { return is_haar(g, automorphism_group(g)); }

ClassificationReport classify(const Graph& g, const PermGroup& aut,
                              const RegularSubgroupOptions& cayley_hints) {
  ClassificationReport r;
  r.order = g.order();
  r.edge_count = g.edge_count();
  r.regular_valency = g.regular_valency();
  r.bipartite = bipartition(g).has_value();
  r.girth = girth(g);
  r.aut_order = aut.order();
  r.aut_generators = aut.generators();
  r.orbit_count = aut.orbits().size();
  r.vertex_transitive = r.orbit_count <= 1;
  r.arc_transitive = g.edge_count() > 0 && is_arc_transitive(g, aut);
  if (r.vertex_transitive) {
    auto w = is_cayley(g, aut, cayley_hints);
    r.cayley = w.found;
    r.cayley_witness = std::move(w.generators);
  }
  if (r.bipartite) {
    auto w = is_haar(g, aut);
    r.haar = w.found;
    r.haar_witness = std::move(w.generators);
  }
  return r;
}

ClassificationReport classify(const Graph& g) { return classify(g, automorphism_group(g)); }

}  // namespace haarforge
