#include "haarforge/dnr.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "haarforge/autsearch.hpp"
#include "haarforge/groups.hpp"

namespace haarforge {

namespace {

using Kind = DgpLabeling::Kind;

long long mod(long long a, long long n) { return ((a % n) + n) % n; }

void require_params(long long n, long long r) {
  if (n < 3) throw std::invalid_argument("D(n,r): n must be at least 3");
  r = mod(r, n);
  if (r == 0 || 2 * r == n) throw std::invalid_argument("D(n,r): r must be nonzero with 2r != n mod n");
}

template <class F>
Permutation index_map(const DgpLabeling& lab, F&& f) {
  std::vector<Point> images(4 * lab.n);
  for (int k = 0; k < 4; ++k)
    for (long long i = 0; i < lab.n; ++i) {
      const auto [kind, j] = f(static_cast<Kind>(k), i);
      images[lab.at(static_cast<Kind>(k), i)] = lab.at(kind, j);
    }
  return Permutation(std::move(images));
}

bool preserves_edges(const Graph& g, const Permutation& p) {
  for (const auto& [a, b] : g.edges())
    if (!g.adjacent(p[a], p[b])) return false;
  return true;
}

Permutation delta_normal_form(const DgpLabeling& lab, long long r, long long m) {
  const bool m_even = m % 2 == 0;
  return index_map(lab, [&](Kind k, long long i) -> std::pair<Kind, long long> {
    const long long shift = (m_even && (k == Kind::w || k == Kind::z)) ? m : 0;
    const long long j = r * i + 1 + shift;
    if (i % 2 == 0) {
      switch (k) {
        case Kind::u: return {Kind::v, j};
        case Kind::v: return {Kind::u, j};
        case Kind::w: return {Kind::z, j};
        case Kind::z: return {Kind::w, j};
      }
    }
    switch (k) {
      case Kind::u: return {Kind::w, j};
      case Kind::v: return {Kind::z, j};
      case Kind::w: return {Kind::u, j};
      case Kind::z: return {Kind::v, j};
    }
    return {k, i};
  });
}

std::vector<std::size_t> element_orders(const PermGroup& g) {
  std::vector<std::size_t> orders;
  for (const auto& p : g.enumerate_elements(100000)) orders.push_back(static_cast<std::size_t>(p.order()));
  std::sort(orders.begin(), orders.end());
  return orders;
}

}  // namespace

StandardAutomorphisms standard_automorphisms(long long n, long long r) {
  const auto d = double_generalized_petersen(n, r);
  const auto& lab = d.labeling;
  StandardAutomorphisms s{
      index_map(lab, [](Kind k, long long i) { return std::pair{k, i + 1}; }),
      index_map(lab,
                [](Kind k, long long i) {
                  static constexpr Kind swap[] = {Kind::z, Kind::w, Kind::v, Kind::u};
                  return std::pair{swap[static_cast<int>(k)], i};
                }),
      index_map(lab, [](Kind k, long long i) { return std::pair{k, -i}; }),
  };
  for (const auto* p : {&s.alpha, &s.beta, &s.gamma})
    if (!preserves_edges(d.graph, *p)) throw std::logic_error("standard automorphism is not an automorphism");
  return s;
}

DeltaAutomorphism delta_automorphism(long long n, long long r) {
  if (n < 3 || n % 2 != 0) throw DeltaError("delta: n must be even");
  require_params(n, r);
  DeltaAutomorphism out;
  out.n = n;
  out.m = n / 2;
  const long long m = out.m;
  out.r = mod(r, n);
  if (mod(out.r * out.r, m) != mod(-1, m))
    throw DeltaError("delta: r^2 is not -1 mod n/2 for (n,r) = (" + std::to_string(n) + "," +
                     std::to_string(r) + ")");

  // D(n,r) and D(n,n-r) have the same edge set; the half turn psi on the w
  // and z layers maps D(n,r) onto D(n,m-r).
  long long r1 = out.r > m ? n - out.r : out.r;
  const DgpLabeling lab{n};
  Permutation psi = Permutation::identity(static_cast<std::size_t>(4 * n));
  long long r2 = r1;
  if (r1 % 2 == 0) {
    if (m % 2 == 0) throw DeltaError("delta: normalization failed (r even with m even)");
    r2 = m - r1;
    psi = index_map(lab, [&](Kind k, long long i) {
      return std::pair{k, (k == Kind::w || k == Kind::z) ? i + m : i};
    });
  }
  if (!(0 < r2 && r2 < m && r2 % 2 == 1)) throw DeltaError("delta: normalization failed");
  out.normalized_r = r2;
  out.normalizing_map = psi;
  out.normalized_delta = delta_normal_form(lab, r2, m);

  const auto target = double_generalized_petersen(n, r2).graph;
  if (!preserves_edges(target, out.normalized_delta))
    throw std::logic_error("delta does not preserve the edge set of D(" + std::to_string(n) + "," +
                           std::to_string(r2) + ")");
  // delta = psi^-1 . delta' . psi, as maps applied left to right.
  out.delta = compose(compose(psi, out.normalized_delta), psi.inverse());
  const auto source = double_generalized_petersen(n, out.r).graph;
  if (!preserves_edges(source, out.delta)) throw std::logic_error("transported delta is not an automorphism");
  return out;
}

HaarWitnessReport verify_haar_witness(long long n, long long r) {
  const auto d = delta_automorphism(n, r);
  const auto dgp = double_generalized_petersen(n, d.r);
  const auto& g = dgp.graph;
  HaarWitnessReport rep;
  rep.n = n;
  rep.r = d.r;
  rep.m = d.m;
  const Permutation& delta = d.delta;
  rep.preserves_edges = preserves_edges(g, delta);

  const auto bp = bipartition(g);
  if (bp) {
    rep.preserves_parts = true;
    for (Vertex v = 0; v < g.order(); ++v)
      if (bp->side[delta[v]] != bp->side[v]) rep.preserves_parts = false;
  }

  const auto alpha = standard_automorphisms(n, d.r).alpha;
  const Permutation a2 = power(alpha, 2);
  const Permutation conj = compose(compose(delta.inverse(), a2), delta);
  if (conj == power(alpha, 2 * d.r))
    rep.conjugation_sign = 1;
  else if (conj == power(alpha, -2 * d.r))
    rep.conjugation_sign = -1;

  rep.generators = {a2, delta};
  const PermGroup group(g.order(), rep.generators);
  rep.group_order = group.order();
  if (bp && rep.preserves_parts) {
    rep.regular_on_part0 = is_regular_on(group, bp->part0);
    rep.regular_on_part1 = is_regular_on(group, bp->part1);
  }
  if (rep.group_order == 2 * n) {
    const auto model = semidirect_cyclic(static_cast<std::size_t>(d.m), 4, d.r);
    rep.matches_semidirect = element_orders(group) == element_order_profile(model);
  }
  return rep;
}

std::string to_string(DnrBranch b) {
  switch (b) {
    case DnrBranch::odd_or_nonresidue: return "odd-or-nonresidue";
    case DnrBranch::square_residue: return "square-residue";
    case DnrBranch::negative_residue: return "negative-residue";
    case DnrBranch::dodecahedral_exception: return "dodecahedral-exception";
  }
  return "?";
}

DnrPrediction predict_dnr(long long n, long long r) {
  require_params(n, r);
  DnrPrediction p;
  p.n = n;
  p.r = mod(r, n);
  if (n == 5) {
    if (p.r == 2 || p.r == 3) {
      p.vertex_transitive = true;
      p.branch = DnrBranch::dodecahedral_exception;
    }
    return p;
  }
  if (n % 2 != 0) return p;
  const long long m = n / 2;
  p.m = m;
  const long long sq = mod(p.r * p.r, m);
  if (sq == mod(1, m)) {
    p.branch = DnrBranch::square_residue;
    p.vertex_transitive = p.cayley = p.haar = true;
  } else if (sq == mod(-1, m)) {
    p.branch = DnrBranch::negative_residue;
    p.vertex_transitive = p.haar = true;
  }
  return p;
}

DnrCheck check_dnr(long long n, long long r) {
  DnrCheck c;
  c.predicted = predict_dnr(n, r);
  c.n = n;
  c.r = c.predicted.r;
  const auto g = double_generalized_petersen(n, c.r).graph;
  const PermGroup aut = automorphism_group(g);
  const auto std_aut = standard_automorphisms(n, c.r);
  RegularSubgroupOptions hints;
  hints.seeds.push_back({std_aut.alpha, std_aut.beta});
  const auto report = classify(g, aut, hints);
  c.vertex_transitive = report.vertex_transitive;
  c.cayley = report.cayley;
  c.haar = report.haar;
  c.arc_transitive = report.arc_transitive;
  c.orbit_count = report.orbit_count;
  c.aut_order = report.aut_order;
  return c;
}

std::vector<DnrCheck> verify_theorems(long long max_n, unsigned workers) {
  if (max_n < 3) throw std::invalid_argument("verify_theorems: max_n must be at least 3");
  std::vector<std::pair<long long, long long>> params;
  for (long long n = 3; n <= max_n; ++n)
    for (long long r = 1; r < n; ++r)
      if (2 * r != n) params.emplace_back(n, r);
  std::vector<DnrCheck> results(params.size());
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(params.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < params.size();)
      results[i] = check_dnr(params[i].first, params[i].second);
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  return results;
}

}  // namespace haarforge
