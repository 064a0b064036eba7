#include "blocklab/catalog.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace blocklab {

namespace fs = std::filesystem;
using nlohmann::json;

PermGroup load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open group file: " + path);
  std::string word;
  int degree = 0;
  if (!(in >> word) || word != "degree" || !(in >> degree) || degree < 1)
    throw std::runtime_error("group file must start with 'degree n': " + path);
  std::string line;
  std::getline(in, line);
  std::vector<Perm> gens;
  while (std::getline(in, line)) {
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    size_t b = line.find_last_not_of(" \t\r");
    gens.push_back(Perm::from_cycles(line.substr(a, b - a + 1), degree));
  }
  if (gens.empty()) gens.push_back(Perm::identity(degree));
  return PermGroup::enumerate(degree, gens);
}

CatalogEntry load_catalog_entry(const std::string& json_path) {
  std::ifstream in(json_path);
  if (!in) throw std::runtime_error("cannot open manifest: " + json_path);
  json j = json::parse(in);
  CatalogEntry e;
  e.name = j.at("name").get<std::string>();
  e.group_path = (fs::path(json_path).parent_path() / j.at("group_file").get<std::string>()).string();
  for (const json& row : j.at("expected")) {
    ExpectedInvariant x;
    x.invariant = row.at("invariant").get<std::string>();
    x.p = row.value("p", 0u);
    x.block = row.value("block", -1);
    x.value = row.at("value").is_boolean() ? (row.at("value").get<bool>() ? 1 : 0)
                                           : row.at("value").get<long long>();
    x.tag = row.at("tag").get<std::string>();
    x.oracle = row.value("oracle", std::string());
    if (x.tag != "trivial" && x.tag != "derived")
      throw std::runtime_error(e.name + ": bad tag '" + x.tag + "'");
    if (x.tag == "derived" && x.oracle.empty())
      throw std::runtime_error(e.name + ": derived value without an oracle name");
    e.expected.push_back(std::move(x));
  }
  return e;
}

std::vector<CatalogEntry> load_catalog_dir(const std::string& dir) {
  std::vector<std::string> paths;
  for (const auto& f : fs::directory_iterator(dir))
    if (f.path().extension() == ".json") paths.push_back(f.path().string());
  std::sort(paths.begin(), paths.end());
  std::vector<CatalogEntry> out;
  for (const std::string& p : paths) out.push_back(load_catalog_entry(p));
  return out;
}

std::vector<Vec> sorted_blocks(const GroupAlgebra& kG, uint64_t seed) {
  std::vector<Vec> blocks = block_idempotents(kG, seed);
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

std::vector<BlockSummary> summarize_blocks(const GroupAlgebra& kG, uint64_t seed) {
  Vec b0 = principal_block(kG, seed);
  std::vector<BlockSummary> rows;
  size_t idx = 0;
  for (const Vec& b : sorted_blocks(kG, seed)) {
    BlockData bd = analyze_block(kG, b, /*with_source=*/false, seed);
    rows.push_back({idx++, bd.block_dim, bd.D.order(), b == b0});
  }
  return rows;
}

namespace {

struct BlockCache {
  const CatalogEntry& entry;
  uint64_t seed;
  std::optional<PermGroup> G;
  std::map<unsigned, GroupAlgebra> algebras;
  std::map<std::pair<unsigned, int>, BlockData> analyzed;

  const PermGroup& group() {
    if (!G) G = load_group_file(entry.group_path);
    return *G;
  }
  const GroupAlgebra& algebra(unsigned p) {
    auto it = algebras.find(p);
    if (it == algebras.end())
      it = algebras.emplace(p, GroupAlgebra::over_splitting_field(group(), p)).first;
    return it->second;
  }
  const BlockData& block(unsigned p, int i) {
    auto key = std::make_pair(p, i);
    auto it = analyzed.find(key);
    if (it == analyzed.end()) {
      std::vector<Vec> blocks = sorted_blocks(algebra(p), seed);
      if (i < 0 || static_cast<size_t>(i) >= blocks.size())
        throw std::runtime_error("block index out of range");
      it = analyzed.emplace(key, analyze_block(algebra(p), blocks[i], true, seed)).first;
    }
    return it->second;
  }
};

long long compute_invariant(BlockCache& c, const ExpectedInvariant& x, uint64_t seed) {
  if (x.invariant == "group_order") return static_cast<long long>(c.group().order());
  if (x.invariant == "exponent") return c.group().exponent();
  if (x.invariant == "sylow_order") return static_cast<long long>(sylow(c.group(), x.p).order());
  if (x.invariant == "num_blocks")
    return static_cast<long long>(sorted_blocks(c.algebra(x.p), seed).size());
  if (x.invariant == "defect_order")
    return static_cast<long long>(c.block(x.p, x.block).D.order());
  if (x.invariant == "source_dim")
    return static_cast<long long>(c.block(x.p, x.block).A.sub.alg.dim);
  if (x.invariant == "focal_order" || x.invariant == "hyperfocal_order" ||
      x.invariant == "nilpotent") {
    const BlockData& bd = c.block(x.p, x.block);
    FusionSystem F = FusionSystem::block_fusion(c.algebra(x.p), bd);
    if (x.invariant == "focal_order") return static_cast<long long>(focal(F).order());
    if (x.invariant == "hyperfocal_order") return static_cast<long long>(hyperfocal(F).order());
    return is_nilpotent_fusion(F) ? 1 : 0;
  }
  throw std::runtime_error("unknown invariant '" + x.invariant + "'");
}

std::string describe(const ExpectedInvariant& x) {
  std::string s = x.invariant;
  if (x.p) s += " p=" + std::to_string(x.p);
  if (x.block >= 0) s += " block=" + std::to_string(x.block);
  return s;
}

json stage_json(const StageRecord& s) {
  return json{{"name", s.name}, {"ok", s.ok}, {"detail", s.detail}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

RegressionResult run_regression(const std::vector<CatalogEntry>& entries, uint64_t seed) {
  RegressionResult res;
  for (const CatalogEntry& e : entries) {
    BlockCache cache{e, seed};
    for (const ExpectedInvariant& x : e.expected) {
      ++res.checked;
      try {
        long long got = compute_invariant(cache, x, seed);
        if (got != x.value) {
          res.pass = false;
          res.failures.push_back(e.name + ": " + describe(x) + ": expected " +
                                 std::to_string(x.value) + ", got " + std::to_string(got));
        }
      } catch (const std::exception& err) {
        res.pass = false;
        res.failures.push_back(e.name + ": " + describe(x) + ": error: " + err.what());
      }
    }
  }
  return res;
}

const char* verdict_name(CriterionVerdict v) {
  switch (v) {
    case CriterionVerdict::holds: return "holds";
    case CriterionVerdict::fails: return "fails";
    default: return "undetermined";
  }
}

std::string blocks_report_json(const std::string& group_name, unsigned p, const GroupAlgebra& kG,
                               const std::vector<BlockSummary>& rows) {
  json out{{"report", "blocks"},
           {"group", group_name},
           {"p", p},
           {"field", {{"p", kG.F.p()}, {"degree", kG.F.m()}}},
           {"group_order", kG.G.order()},
           {"num_blocks", rows.size()}};
  json list = json::array();
  for (const BlockSummary& r : rows)
    list.push_back(json{{"index", r.index},
                        {"dim", r.dim},
                        {"defect_order", r.defect_order},
                        {"principal", r.principal}});
  out["blocks"] = list;
  return dump(out);
}

std::string block_report_json(const std::string& group_name, unsigned p, const BlockSummary& r) {
  return dump(json{{"report", "block"},
                   {"group", group_name},
                   {"p", p},
                   {"index", r.index},
                   {"dim", r.dim},
                   {"defect_order", r.defect_order},
                   {"principal", r.principal}});
}

std::string blocks_report_text(const std::string& group_name, unsigned p,
                               const std::vector<BlockSummary>& rows) {
  std::ostringstream os;
  os << "blocks of k[" << group_name << "] at p = " << p << ": " << rows.size() << "\n";
  for (const BlockSummary& r : rows)
    os << "  block " << r.index << ": dim " << r.dim << ", defect group of order "
       << r.defect_order << (r.principal ? "  (principal)" : "") << "\n";
  return os.str();
}

FusionSummary summarize_fusion(const FusionSystem& F) {
  FusionSummary s;
  s.defect_order = F.D.order();
  s.focal_order = focal(F).order();
  s.hyperfocal_order = hyperfocal(F).order();
  s.nilpotent = is_nilpotent_fusion(F);
  s.num_objects = F.objects().size();
  s.num_aut_d = F.aut(F.D).order();
  return s;
}

std::string fusion_report_json(const std::string& group_name, unsigned p, size_t block,
                               const FusionSummary& s) {
  return dump(json{{"report", "fusion"},
                   {"group", group_name},
                   {"p", p},
                   {"block", block},
                   {"defect_order", s.defect_order},
                   {"focal_order", s.focal_order},
                   {"hyperfocal_order", s.hyperfocal_order},
                   {"nilpotent", s.nilpotent},
                   {"num_objects", s.num_objects},
                   {"aut_d_order", s.num_aut_d}});
}

std::string fusion_report_text(const std::string& group_name, unsigned p, size_t block,
                               const FusionSummary& s) {
  std::ostringstream os;
  os << "fusion system of block " << block << " of k[" << group_name << "] at p = " << p << "\n"
     << "  defect group order:     " << s.defect_order << "\n"
     << "  focal subgroup order:   " << s.focal_order << "\n"
     << "  hyperfocal order:       " << s.hyperfocal_order << "\n"
     << "  nilpotent:              " << (s.nilpotent ? "yes" : "no") << "\n"
     << "  objects (subgroups):    " << s.num_objects << "\n"
     << "  |Aut(D)| in the system: " << s.num_aut_d << "\n";
  return os.str();
}

std::string hyperfocal_report_json(const std::string& group_name, unsigned p, size_t block,
                                   size_t dtilde_order, bool found, size_t dim,
                                   const std::string& note) {
  json out{{"report", "hyperfocal"}, {"group", group_name},     {"p", p},
           {"block", block},         {"dtilde_order", dtilde_order}, {"found", found},
           {"note", note}};
  if (found) out["dim"] = dim;
  return dump(out);
}

std::string hyperfocal_report_text(const std::string& group_name, unsigned p, size_t block,
                                   size_t dtilde_order, bool found, size_t dim,
                                   const std::string& note) {
  std::ostringstream os;
  os << "hyperfocal subalgebra search, block " << block << " of k[" << group_name
     << "] at p = " << p << ", Dtilde of order " << dtilde_order << "\n";
  if (found)
    os << "  verified candidate of dim " << dim << "\n";
  else
    os << "  no verified candidate (search failure, not a nonexistence proof)\n";
  if (!note.empty()) os << "  " << note << "\n";
  return os.str();
}

std::string conjecture_report_json(const std::string& group_name, unsigned p, size_t block,
                                   const ConjectureReport& r) {
  json stages = json::array();
  for (const StageRecord& s : r.stages) stages.push_back(stage_json(s));
  return dump(json{{"report", "conjecture"},
                   {"group", group_name},
                   {"p", p},
                   {"block", block},
                   {"defect_order", r.D.order()},
                   {"dtilde_order", r.Dtilde.order()},
                   {"seed", r.seed},
                   {"stages", stages},
                   {"hypothesis_holds", r.hypothesis_holds},
                   {"criterion_verdict", verdict_name(r.tilde_verdict)},
                   {"lifted_basis_ok", r.lifted_basis_ok},
                   {"completed", r.completed}});
}

std::string conjecture_report_text(const std::string& group_name, unsigned p, size_t block,
                                   const ConjectureReport& r) {
  std::ostringstream os;
  os << "pipeline transcript, block " << block << " of k[" << group_name << "] at p = " << p
     << ", Dtilde of order " << r.Dtilde.order() << " in D of order " << r.D.order()
     << " (seed " << r.seed << ")\n";
  for (const StageRecord& s : r.stages)
    os << "  [" << (s.ok ? "ok" : "FAIL") << "] " << s.name
       << (s.detail.empty() ? "" : ": " + s.detail) << "\n";
  os << "  criterion verdict: " << verdict_name(r.tilde_verdict) << "\n"
     << "  completed: " << (r.completed ? "yes" : "no") << "\n";
  return os.str();
}

std::string morita_report_json(const std::string& name_a, const std::string& name_b, unsigned p,
                               const MoritaReport& r) {
  return dump(json{{"report", "morita-compare"},
                   {"a", name_a},
                   {"b", name_b},
                   {"p", p},
                   {"fusion_ok", r.fusion_ok},
                   {"counts_ok", r.counts_ok},
                   {"mult_ok", r.mult_ok},
                   {"passed", r.passed()},
                   {"notes", r.mismatches}});
}

std::string morita_report_text(const std::string& name_a, const std::string& name_b, unsigned p,
                               const MoritaReport& r) {
  std::ostringstream os;
  os << "necessary-condition comparison of " << name_a << " and " << name_b << " at p = " << p
     << "\n"
     << "  fusion transport:        " << (r.fusion_ok ? "ok" : "MISMATCH") << "\n"
     << "  local point counts:      " << (r.counts_ok ? "ok" : "MISMATCH") << "\n"
     << "  point multiplicities:    " << (r.mult_ok ? "ok" : "MISMATCH") << "\n"
     << "  verdict: " << (r.passed() ? "consistent with an equivalence" : "equivalence excluded")
     << "\n";
  for (const std::string& m : r.mismatches) os << "  - " << m << "\n";
  return os.str();
}

}  // namespace blocklab
