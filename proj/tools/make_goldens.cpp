// Regenerates the golden reports under goldens/ from the shipped catalog.
// Goldens hold verdicts and invariant values only, never basis witnesses.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "blocklab/catalog.hpp"

using namespace blocklab;
namespace fs = std::filesystem;

namespace {

struct Plan {
  const char* name;
  std::vector<unsigned> primes;
  bool fusion;  // A5 stays at block-level invariants
};

const std::vector<Plan> kPlans = {
    {"c2", {2}, true},      {"c3", {3}, true},   {"c4", {2}, true},  {"c5", {5}, true},
    {"c6", {2, 3}, true},   {"c7", {7}, true},   {"c8", {2}, true},  {"c9", {3}, true},
    {"s3", {2, 3}, true},   {"s4", {2, 3}, true},{"a4", {2, 3}, true},
    {"a5", {2}, false},     {"d8", {2}, true},   {"q8", {2}, true},
    {"sl23", {2, 3}, true}, {"c3c4", {2, 3}, true},
    {"e4", {2}, true},      {"e8", {2}, true},   {"e9", {3}, true}};

void write_file(const fs::path& p, const std::string& text) {
  fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  fs::path root = argc > 1 ? argv[1] : ".";
  fs::path catalog = root / "data" / "catalog";
  fs::path goldens = root / "goldens";
  const uint64_t seed = 1;

  for (const Plan& plan : kPlans) {
    PermGroup G = load_group_file((catalog / (std::string(plan.name) + ".grp")).string());
    for (unsigned p : plan.primes) {
      GroupAlgebra kG = GroupAlgebra::over_splitting_field(G, p);
      std::vector<Vec> blocks = sorted_blocks(kG, seed);
      std::vector<BlockSummary> rows = summarize_blocks(kG, seed);
      for (size_t i = 0; i < blocks.size(); ++i) {
        fs::path dir = goldens / plan.name / std::to_string(p) / std::to_string(i);
        write_file(dir / "block.json", block_report_json(plan.name, p, rows[i]));
        if (!plan.fusion) continue;
        BlockData bd = analyze_block(kG, blocks[i], true, seed);
        FusionSystem F = FusionSystem::block_fusion(kG, bd);
        write_file(dir / "fusion.json",
                   fusion_report_json(plan.name, p, i, summarize_fusion(F)));
        if (is_nilpotent_fusion(F)) {
          ConjectureReport r = run_thm14(bd, PermGroup::trivial(G.degree), seed);
          write_file(dir / "conjecture.json", conjecture_report_json(plan.name, p, i, r));
        }
      }
      std::cout << plan.name << " p=" << p << ": " << blocks.size() << " block(s)\n";
    }
  }
  return 0;
}
