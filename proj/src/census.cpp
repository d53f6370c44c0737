#include "haarforge/census.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "haarforge/autsearch.hpp"
#include "haarforge/classify.hpp"
#include "haarforge/constructions.hpp"

namespace haarforge {

namespace {

constexpr std::size_t kMaxReducedOrder = 24;

template <class F>
void parallel_for(std::size_t count, unsigned workers, F&& f) {
  workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, workers), count));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        f(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
}

std::vector<std::vector<Element>> all_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<Element>> out;
  if (k > n) return out;
  std::vector<Element> s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = static_cast<Element>(i);
  while (true) {
    out.push_back(s);
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

// Right multiplication by the group, which acts regularly on each part of
// H(G, S).
std::vector<Permutation> right_regular_action(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<Permutation> gens;
  for (Element a : generating_set(g)) {
    std::vector<Point> images(2 * n);
    for (Element x = 0; x < n; ++x) {
      images[x] = g.mul(x, a);
      images[n + x] = static_cast<Point>(n + g.mul(x, a));
    }
    gens.emplace_back(std::move(images));
  }
  return gens;
}

struct Candidate {
  std::vector<Element> subset;
  bool connected = false;
  std::string certificate;
  std::vector<Permutation> generators;
};

struct Stratum {
  std::size_t group_index;
  std::size_t valency;
};

struct Checkpoint {
  std::size_t completed = 0;
  std::vector<std::string> seen;
};

std::optional<Checkpoint> read_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  Checkpoint cp;
  std::string word;
  if (!(in >> word >> cp.completed) || word != "stratum")
    throw std::runtime_error("census: malformed checkpoint " + path.string());
  for (std::string cert; in >> cert;) cp.seen.push_back(cert);
  return cp;
}

void write_checkpoint(const std::filesystem::path& path, std::size_t completed,
                      const std::vector<std::string>& seen) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << "stratum " << completed << '\n';
    for (const auto& c : seen) out << c << '\n';
    if (!out) throw std::runtime_error("census: cannot write checkpoint " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

bool passes(const CensusRecord& r, CensusFilter f) {
  switch (f) {
    case CensusFilter::all: return true;
    case CensusFilter::vt: return r.vertex_transitive;
    case CensusFilter::vt_noncayley: return r.vertex_transitive && !r.cayley;
  }
  return false;
}

CensusSummary census_impl(const std::vector<FiniteGroup>& groups, const CensusConfig& cfg,
                          const std::function<void(const CensusRecord&)>& sink) {
  if (cfg.min_valency < 1 || cfg.min_valency > cfg.max_valency)
    throw std::invalid_argument("census: bad valency range");
  if (cfg.min_order > cfg.max_order) throw std::invalid_argument("census: bad order range");
  const unsigned workers = census_workers(cfg.workers);

  std::vector<Stratum> strata;
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const std::size_t order = 2 * groups[gi].order();
    if (order < cfg.min_order || order > cfg.max_order) continue;
    for (std::size_t k = cfg.min_valency; k <= std::min(cfg.max_valency, groups[gi].order()); ++k)
      strata.push_back({gi, k});
  }

  CensusSummary summary;
  std::unordered_set<std::string> seen;
  std::vector<std::string> seen_order;
  std::size_t first = 0;
  if (cfg.checkpoint) {
    if (auto cp = read_checkpoint(*cfg.checkpoint)) {
      first = std::min(cp->completed, strata.size());
      for (auto& c : cp->seen)
        if (seen.insert(c).second) seen_order.push_back(std::move(c));
    }
  }
  summary.strata_skipped = first;
  summary.classes = seen.size();

  std::ofstream out;
  if (cfg.output) {
    out.open(*cfg.output, first > 0 ? std::ios::app : std::ios::trunc);
    if (!out) throw std::runtime_error("census: cannot open " + cfg.output->string());
  }

  for (std::size_t si = first; si < strata.size(); ++si) {
    const FiniteGroup& g = groups[strata[si].group_index];
    const std::size_t k = strata[si].valency;
    const auto subsets = cfg.reduce ? subset_representatives(g, k, cfg.use_automorphisms)
                                    : all_subsets(g.order(), k);
    summary.subsets_examined += subsets.size();

    std::vector<Candidate> cands(subsets.size());
    parallel_for(subsets.size(), workers, [&](std::size_t i) {
      Candidate& c = cands[i];
      c.subset = subsets[i];
      const Graph h = haar_graph(g, ElementSubset(g, c.subset));
      c.connected = is_connected(h);
      if (!c.connected) return;
      auto sym = search_symmetries(h);
      c.certificate = std::move(sym.certificate.graph6);
      c.generators = std::move(sym.generators);
    });

    std::vector<std::size_t> fresh;
    for (std::size_t i = 0; i < cands.size(); ++i)
      if (cands[i].connected && seen.insert(cands[i].certificate).second) {
        seen_order.push_back(cands[i].certificate);
        fresh.push_back(i);
      }

    const auto seeds = right_regular_action(g);
    std::vector<CensusRecord> records(fresh.size());
    parallel_for(fresh.size(), workers, [&](std::size_t j) {
      const Candidate& c = cands[fresh[j]];
      CensusRecord& r = records[j];
      r.certificate = c.certificate;
      r.order = 2 * g.order();
      r.valency = k;
      r.group = g.name();
      r.subset = c.subset;
      const PermGroup aut(r.order, c.generators);
      r.vertex_transitive = aut.orbits().size() == 1;
      if (r.vertex_transitive) {
        const Graph h = haar_graph(g, ElementSubset(g, c.subset));
        RegularSubgroupOptions opts;
        opts.seeds.push_back(seeds);
        r.cayley = is_cayley(h, aut, opts).found;
      }
    });

    summary.classes += fresh.size();
    ++summary.strata;
    for (const auto& r : records) {
      if (!passes(r, cfg.filter)) continue;
      ++summary.records;
      ++summary.records_by_valency[r.valency];
      if (out.is_open()) out << to_json(r).dump() << '\n';
      if (sink) sink(r);
    }
    if (out.is_open()) out.flush();
    if (cfg.checkpoint) write_checkpoint(*cfg.checkpoint, si + 1, seen_order);
  }
  return summary;
}

}  // namespace

CensusFilter parse_census_filter(const std::string& text) {
  if (text == "all") return CensusFilter::all;
  if (text == "vt") return CensusFilter::vt;
  if (text == "vt-noncayley") return CensusFilter::vt_noncayley;
  throw std::invalid_argument("unknown census filter '" + text + "'");
}

std::string to_string(CensusFilter f) {
  switch (f) {
    case CensusFilter::all: return "all";
    case CensusFilter::vt: return "vt";
    case CensusFilter::vt_noncayley: return "vt-noncayley";
  }
  return "?";
}

nlohmann::json to_json(const CensusRecord& r) {
  return {
      {"graph6", r.certificate},
      {"order", r.order},
      {"valency", r.valency},
      {"group", r.group},
      {"subset", r.subset},
      {"vertex_transitive", r.vertex_transitive},
      {"cayley", r.cayley},
      {"haar", r.haar},
  };
}

unsigned census_workers(unsigned fallback) {
  if (const char* env = std::getenv("HAARFORGE_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, fallback);
}

std::vector<std::vector<Element>> subset_representatives(const FiniteGroup& g, std::size_t k,
                                                         bool use_automorphisms) {
  const std::size_t n = g.order();
  if (n > kMaxReducedOrder) throw std::invalid_argument("subset_representatives: group too large");
  if (k > n) return {};

  std::vector<std::vector<Element>> autos;
  if (use_automorphisms) {
    autos = group_automorphisms(g);
  } else {
    std::vector<Element> id(n);
    for (Element x = 0; x < n; ++x) id[x] = x;
    autos.push_back(std::move(id));
  }
  std::set<std::vector<Element>> maps;
  for (const auto& sigma : autos)
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) {
        std::vector<Element> m(n);
        for (Element x = 0; x < n; ++x) m[x] = g.mul(g.mul(a, sigma[x]), b);
        maps.insert(std::move(m));
      }

  std::vector<bool> marked(std::size_t{1} << n, false);
  std::vector<std::vector<Element>> reps;
  const std::uint32_t last = static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  std::uint32_t mask = k == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << k) - 1);
  while (true) {
    if (!marked[mask]) {
      std::vector<Element> s;
      for (std::uint32_t rest = mask; rest; rest &= rest - 1)
        s.push_back(static_cast<Element>(std::countr_zero(rest)));
      reps.push_back(s);
      for (const auto& m : maps) {
        std::uint32_t image = 0;
        for (Element x : s) image |= std::uint32_t{1} << m[x];
        marked[image] = true;
      }
    }
    if (k == 0 || mask == (last & ~((std::uint32_t{1} << (n - k)) - 1))) break;
    // Next mask with the same popcount (Gosper).
    const std::uint32_t low = mask & (~mask + 1);
    const std::uint32_t ripple = mask + low;
    mask = ripple | (((mask ^ ripple) >> 2) / low);
  }
  return reps;
}

CensusSummary run_census(const CensusConfig& cfg, const std::function<void(const CensusRecord&)>& sink) {
  return census_impl(load_catalog(cfg.catalog), cfg, sink);
}

std::vector<CensusRecord> enumerate_haar_census(const CensusConfig& cfg) {
  std::vector<CensusRecord> out;
  run_census(cfg, [&](const CensusRecord& r) { out.push_back(r); });
  return out;
}

std::vector<CensusRecord> enumerate_haar_census(const std::vector<FiniteGroup>& groups,
                                                const CensusConfig& cfg) {
  CensusConfig local = cfg;
  local.output.reset();
  local.checkpoint.reset();
  std::vector<CensusRecord> out;
  census_impl(groups, local, [&](const CensusRecord& r) { out.push_back(r); });
  return out;
}

}  // namespace haarforge
