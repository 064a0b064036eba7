#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blocklab/pipeline.hpp"

namespace blocklab {

// text format: first line "degree n", then one generator per line in cycle notation
PermGroup load_group_file(const std::string& path);

// one expected invariant value, frozen in a catalog manifest
struct ExpectedInvariant {
  std::string invariant;  // group_order, exponent, sylow_order, num_blocks,
                          // defect_order, source_dim, focal_order,
                          // hyperfocal_order, nilpotent
  unsigned p = 0;         // 0 when not prime-specific
  int block = -1;         // -1 when not block-specific
  long long value = 0;    // booleans stored as 0/1
  std::string tag;        // "trivial" (by definition) or "derived" (via oracle)
  std::string oracle;     // evidence source, required for derived values
};

struct CatalogEntry {
  std::string name;
  std::string group_path;  // resolved relative to the manifest file
  std::vector<ExpectedInvariant> expected;
};

CatalogEntry load_catalog_entry(const std::string& json_path);
// loads every *.json manifest in the directory, sorted by name
std::vector<CatalogEntry> load_catalog_dir(const std::string& dir);

struct RegressionResult {
  bool pass = true;
  size_t checked = 0;
  std::vector<std::string> failures;  // one line per mismatch or parse error
};

// recompute every expected invariant and diff against the frozen values
RegressionResult run_regression(const std::vector<CatalogEntry>& entries, uint64_t seed = 1);

// --- canonical reports (verdicts and invariants only, never witnesses) ---

// blocks of kG at p: dims, defect orders; text + canonical JSON
struct BlockSummary {
  size_t index = 0;
  size_t dim = 0;
  size_t defect_order = 0;
  bool principal = false;
};

std::vector<BlockSummary> summarize_blocks(const GroupAlgebra& kG, uint64_t seed = 1);

// canonical block ordering used everywhere an index is exposed: the list from
// the block decomposition sorted by coordinate vector
std::vector<Vec> sorted_blocks(const GroupAlgebra& kG, uint64_t seed = 1);

std::string blocks_report_json(const std::string& group_name, unsigned p, const GroupAlgebra& kG,
                               const std::vector<BlockSummary>& rows);
// single-block variant used for the per-block golden files
std::string block_report_json(const std::string& group_name, unsigned p, const BlockSummary& r);
std::string blocks_report_text(const std::string& group_name, unsigned p,
                               const std::vector<BlockSummary>& rows);

struct FusionSummary {
  size_t defect_order = 0;
  size_t focal_order = 0;
  size_t hyperfocal_order = 0;
  bool nilpotent = false;
  size_t num_objects = 0;      // subgroups of D
  size_t num_aut_d = 0;        // |Aut_F(D)|
};

FusionSummary summarize_fusion(const FusionSystem& F);
std::string fusion_report_json(const std::string& group_name, unsigned p, size_t block,
                               const FusionSummary& s);
std::string fusion_report_text(const std::string& group_name, unsigned p, size_t block,
                               const FusionSummary& s);

std::string hyperfocal_report_json(const std::string& group_name, unsigned p, size_t block,
                                   size_t dtilde_order, bool found, size_t dim,
                                   const std::string& note);
std::string hyperfocal_report_text(const std::string& group_name, unsigned p, size_t block,
                                   size_t dtilde_order, bool found, size_t dim,
                                   const std::string& note);

// transcript only: stage names, outcomes, verdicts; basis witnesses are omitted
std::string conjecture_report_json(const std::string& group_name, unsigned p, size_t block,
                                   const ConjectureReport& r);
std::string conjecture_report_text(const std::string& group_name, unsigned p, size_t block,
                                   const ConjectureReport& r);

std::string morita_report_json(const std::string& name_a, const std::string& name_b, unsigned p,
                               const MoritaReport& r);
std::string morita_report_text(const std::string& name_a, const std::string& name_b, unsigned p,
                               const MoritaReport& r);

const char* verdict_name(CriterionVerdict v);

}  // namespace blocklab
