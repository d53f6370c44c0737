#include "haarforge/perm_group.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

namespace haarforge {

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> b;
  for (const auto& l : levels) b.push_back(l.point);
  return b;
}

BigInt StabilizerChain::order() const {
  BigInt n = 1;
  for (const auto& l : levels) n *= l.orbit.size();
  return n;
}

std::pair<Permutation, std::size_t> StabilizerChain::strip(Permutation p, std::size_t from) const {
  for (std::size_t j = from; j < levels.size(); ++j) {
    const auto& level = levels[j];
    const Point x = p[level.point];
    if (!level.in_orbit(x)) return {std::move(p), j};
    p = compose(p, level.transversal_for(x).inverse());
  }
  return {std::move(p), levels.size()};
}

namespace {

bool fixes_prefix(const Permutation& p, const std::vector<Point>& base, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i)
    if (p[base[i]] != base[i]) return false;
  return true;
}

void rebuild_level(ChainLevel& level, std::size_t degree, const std::vector<Permutation>& gens) {
  level.orbit.assign(1, level.point);
  level.transversal_index.assign(degree, -1);
  level.transversal.assign(1, Permutation::identity(degree));
  level.transversal_index[level.point] = 0;
  for (std::size_t i = 0; i < level.orbit.size(); ++i) {
    const Point x = level.orbit[i];
    for (const auto& s : gens) {
      const Point y = s[x];
      if (level.transversal_index[y] >= 0) continue;
      level.transversal_index[y] = static_cast<int>(level.transversal.size());
      level.transversal.push_back(compose(level.transversal_for(x), s));
      level.orbit.push_back(y);
    }
  }
}

}  // namespace

StabilizerChain schreier_sims(std::size_t degree, std::span<const Permutation> generators,
                              std::span<const Point> base_prefix) {
  StabilizerChain chain;
  std::vector<Point> base(base_prefix.begin(), base_prefix.end());
  auto& strong = chain.strong_generators;
  for (const auto& g : generators) {
    if (g.degree() != degree) throw std::invalid_argument("schreier_sims: generator degree mismatch");
    if (!g.is_identity()) strong.push_back(g);
  }
  for (const auto& g : strong)
    if (fixes_prefix(g, base, base.size())) base.push_back(g.lowest_moved_point());

  // level_gens[i] = strong generators fixing base[0..i).
  auto level_gens = [&](std::size_t i) {
    std::vector<Permutation> out;
    for (const auto& s : strong)
      if (fixes_prefix(s, base, i)) out.push_back(s);
    return out;
  };

  std::vector<std::vector<Permutation>> gens_at(base.size());
  chain.levels.resize(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    gens_at[i] = level_gens(i);
    chain.levels[i].point = base[i];
    rebuild_level(chain.levels[i], degree, gens_at[i]);
  }

  // Holt's SCHREIERSIMS: complete levels from the bottom up; a Schreier
  // generator that fails to strip becomes a new strong generator and the
  // scan resumes at the level where stripping stopped.
  auto first_failure = [&](std::size_t lvl) -> std::optional<std::pair<Permutation, std::size_t>> {
    const auto& level = chain.levels[lvl];
    for (const Point beta : level.orbit)
      for (const auto& s : gens_at[lvl]) {
        auto g = compose(compose(level.transversal_for(beta), s),
                         level.transversal_for(s[beta]).inverse());
        if (g.is_identity()) continue;
        auto stripped = chain.strip(std::move(g), lvl + 1);
        if (stripped.second < chain.levels.size() || !stripped.first.is_identity()) return stripped;
      }
    return std::nullopt;
  };

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(base.size()) - 1;
  while (i >= 0) {
    auto failure = first_failure(static_cast<std::size_t>(i));
    if (!failure) {
      --i;
      continue;
    }
    auto& [h, j] = *failure;
    if (j == chain.levels.size()) {
      base.push_back(h.lowest_moved_point());
      chain.levels.emplace_back();
      chain.levels.back().point = base.back();
      gens_at.emplace_back();
    }
    strong.push_back(h);
    // Levels at or above i keep their orbits but see the new generator.
    for (std::size_t l = 0; l <= static_cast<std::size_t>(i); ++l) gens_at[l].push_back(h);
    for (std::size_t l = i + 1; l <= j; ++l) {
      gens_at[l] = level_gens(l);
      rebuild_level(chain.levels[l], degree, gens_at[l]);
    }
    i = static_cast<std::ptrdiff_t>(j);
  }
  return chain;
}

struct PermGroup::Lazy {
  std::once_flag once;
  StabilizerChain chain;
};

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     std::vector<Point> base_prefix)
    : degree_(degree),
      generators_(std::move(generators)),
      base_prefix_(std::move(base_prefix)),
      lazy_(std::make_shared<Lazy>()) {
  for (const auto& g : generators_)
    if (g.degree() != degree_) throw std::invalid_argument("PermGroup: generator degree mismatch");
}

const StabilizerChain& PermGroup::chain() const {
  if (!lazy_) {
    static const StabilizerChain empty;
    return empty;
  }
  std::call_once(lazy_->once,
                 [this] { lazy_->chain = schreier_sims(degree_, generators_, base_prefix_); });
  return lazy_->chain;
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) throw std::invalid_argument("membership: degree mismatch");
  auto [h, j] = chain().strip(p);
  return j == chain().levels.size() && h.is_identity();
}

std::vector<Point> PermGroup::orbit(Point x) const {
  std::vector<Point> out{x};
  std::vector<char> seen(degree_, 0);
  seen[x] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& g : generators_) {
      const Point y = g[out[i]];
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Point>> PermGroup::orbits() const {
  std::vector<std::vector<Point>> result;
  std::vector<char> done(degree_, 0);
  for (Point x = 0; x < degree_; ++x) {
    if (done[x]) continue;
    auto o = orbit(x);
    for (Point y : o) done[y] = 1;
    result.push_back(std::move(o));
  }
  return result;
}

std::vector<Permutation> PermGroup::enumerate_elements(std::size_t cap) const {
  std::set<Permutation> seen{Permutation::identity(degree_)};
  std::vector<Permutation> queue{Permutation::identity(degree_)};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& g : generators_) {
      auto p = compose(queue[i], g);
      if (seen.insert(p).second) {
        if (seen.size() > cap)
          throw std::length_error("enumerate_elements: group exceeds " + std::to_string(cap) +
                                  " elements");
        queue.push_back(std::move(p));
      }
    }
  return queue;
}

BigInt group_order(const PermGroup& g) { return g.order(); }

std::vector<std::vector<Point>> orbits(const PermGroup& g) { return g.orbits(); }

bool membership(const PermGroup& g, const Permutation& p) { return g.contains(p); }

bool is_regular_on(const PermGroup& g, std::span<const Point> points) {
  if (points.empty()) throw std::invalid_argument("is_regular_on: empty point set");
  std::vector<char> in(g.degree(), 0);
  for (Point x : points) in[x] = 1;
  for (const auto& gen : g.generators())
    for (Point x : points)
      if (!in[gen[x]])
        throw std::invalid_argument("is_regular_on: point set is not invariant under the group");
  const auto orb = g.orbit(points.front());
  if (orb.size() != points.size()) return false;
  return g.order() == points.size();
}

std::vector<Permutation> brute_force_closure(const PermGroup& g) {
  return g.enumerate_elements(10000);
}

}  // namespace haarforge
