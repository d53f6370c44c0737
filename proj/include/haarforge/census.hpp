#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "haarforge/groups.hpp"

namespace haarforge {

enum class CensusFilter { all, vt, vt_noncayley };

CensusFilter parse_census_filter(const std::string& text);
std::string to_string(CensusFilter f);

struct CensusConfig {
  std::filesystem::path catalog;
  std::size_t min_order = 1;  // graph order, i.e. 2|G|
  std::size_t max_order = 40;
  std::size_t min_valency = 1;
  std::size_t max_valency = 3;
  CensusFilter filter = CensusFilter::all;
  unsigned workers = 1;  // HAARFORGE_WORKERS overrides this
  std::optional<std::filesystem::path> output;
  std::optional<std::filesystem::path> checkpoint;
  /// Also identify S with sigma(S) for sigma in Aut(G). The automorphisms are
  /// computed from the table and each one is checked to be a bijective
  /// homomorphism before use.
  bool use_automorphisms = true;
  /// Skip the subset-orbit reduction entirely (for soundness checks).
  bool reduce = true;
};

struct CensusRecord {
  std::string certificate;  // graph6 of the canonical form
  std::size_t order = 0;
  std::size_t valency = 0;
  std::string group;
  std::vector<Element> subset;
  bool vertex_transitive = false;
  bool cayley = false;
  bool haar = true;
};

nlohmann::json to_json(const CensusRecord& r);

struct CensusSummary {
  std::size_t strata = 0;          // strata processed in this run
  std::size_t strata_skipped = 0;  // completed before a resume
  std::size_t subsets_examined = 0;
  std::size_t classes = 0;         // isomorphism classes seen (before filter)
  std::size_t records = 0;         // records passing the filter
  std::map<std::size_t, std::size_t> records_by_valency;
};

/// Reads the worker count from HAARFORGE_WORKERS if set, else `fallback`.
unsigned census_workers(unsigned fallback);

/// Connected Haar graphs H(G, S) for catalog groups G with 2|G| in the order
/// range and |S| in the valency range, one record per isomorphism class.
/// Subsets are reduced to orbit representatives under S -> a sigma(S) b.
/// Strata (group, |S|) run in catalog order; each record passing the filter
/// is handed to `sink` (and appended to cfg.output as a JSON line) as soon as
/// its stratum completes. With a checkpoint path, completed strata are
/// recorded there and skipped on the next run.
CensusSummary run_census(const CensusConfig& cfg,
                         const std::function<void(const CensusRecord&)>& sink = {});

/// Collects the records of run_census.
std::vector<CensusRecord> enumerate_haar_census(const CensusConfig& cfg);

/// Census over explicit groups (no catalog, output or checkpoint).
std::vector<CensusRecord> enumerate_haar_census(const std::vector<FiniteGroup>& groups,
                                                const CensusConfig& cfg);

/// Orbit representatives of the size-k subsets of G under S -> a sigma(S) b,
/// as sorted element lists in lexicographic order. |G| <= 30.
std::vector<std::vector<Element>> subset_representatives(const FiniteGroup& g, std::size_t k,
                                                         bool use_automorphisms);

}  // namespace haarforge
