#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "blocklab/catalog.hpp"

using namespace blocklab;

namespace {

std::string stem_of(const std::string& path) {
  size_t slash = path.find_last_of('/');
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  size_t dot = base.find_last_of('.');
  return dot == std::string::npos ? base : base.substr(0, dot);
}

GroupAlgebra make_algebra(const PermGroup& G, unsigned p, unsigned field_degree) {
  if (field_degree > 0) return GroupAlgebra::build(G, GF(p, field_degree));
  return GroupAlgebra::over_splitting_field(G, p);
}

BlockData load_block(const GroupAlgebra& kG, size_t idx, bool with_source, uint64_t seed) {
  std::vector<Vec> blocks = sorted_blocks(kG, seed);
  if (idx >= blocks.size())
    throw std::runtime_error("block index " + std::to_string(idx) + " out of range (" +
                             std::to_string(blocks.size()) + " blocks)");
  return analyze_block(kG, blocks[idx], with_source, seed);
}

// "1" or "trivial" -> trivial subgroup; "D" -> the defect group;
// otherwise semicolon-separated generators in cycle notation
PermGroup parse_subgroup_spec(const std::string& spec, const PermGroup& D) {
  if (spec == "1" || spec == "trivial") return PermGroup::trivial(D.degree);
  if (spec == "D") return D;
  std::vector<Perm> gens;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ';'))
    if (part.find('(') != std::string::npos) gens.push_back(Perm::from_cycles(part, D.degree));
  if (gens.empty()) throw std::runtime_error("empty subgroup spec: " + spec);
  PermGroup H = PermGroup::enumerate(D.degree, gens);
  if (!H.is_subgroup_of(D)) throw std::runtime_error("spec does not generate a subgroup of D");
  return H;
}

// map file: one line per generator, "cycles -> cycles"
GroupHom parse_iso_file(const std::string& path, const PermGroup& Da, const PermGroup& Db) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open iso map file: " + path);
  std::vector<Perm> gens, images;
  std::string line;
  while (std::getline(in, line)) {
    size_t arrow = line.find("->");
    if (arrow == std::string::npos) continue;
    gens.push_back(Perm::from_cycles(line.substr(0, arrow), Da.degree));
    images.push_back(Perm::from_cycles(line.substr(arrow + 2), Db.degree));
  }
  if (gens.empty()) throw std::runtime_error("iso map file has no 'g -> h' lines");
  PermGroup dom = PermGroup::enumerate(Da.degree, gens);
  if (!dom.same_group(Da))
    throw std::runtime_error("left-hand sides do not generate the first defect group");
  GroupHom lambda = GroupHom::from_generator_images(dom, Db, images);
  if (!lambda.injective || !lambda.image().same_group(Db))
    throw std::runtime_error("map is not an isomorphism onto the second defect group");
  return lambda;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"block invariants, fusion systems, and stable-basis verification"};
  app.require_subcommand(1);

  std::string gfile, gfile2, dtilde_spec = "1", iso_file, blocks_pair;
  unsigned p = 2, field_degree = 0;
  size_t block_idx = 0;
  uint64_t seed = 1;
  bool as_json = false;

  auto add_common = [&](CLI::App* c, bool needs_block) {
    c->add_option("group-file", gfile, "group catalog file")->required();
    c->add_option("-p,--prime", p, "characteristic")->required();
    if (needs_block) c->add_option("--block", block_idx, "block index")->required();
    c->add_flag("--json", as_json, "machine-readable output");
    return c;
  };

  CLI::App* cblocks = add_common(app.add_subcommand("blocks", "block table"), false);
  cblocks->add_option("--field-degree", field_degree, "coefficient field degree over F_p");
  add_common(app.add_subcommand("fusion", "fusion report incl. focal/hyperfocal"), true);
  CLI::App* chyp =
      add_common(app.add_subcommand("hyperfocal", "subalgebra candidate search"), true);
  chyp->add_option("--dtilde", dtilde_spec, "subgroup spec: 1, D, or generators")->required();
  CLI::App* cconj = add_common(app.add_subcommand("conjecture", "full pipeline transcript"), true);
  cconj->add_option("--dtilde", dtilde_spec, "subgroup spec (default 1)");
  cconj->add_option("--seed", seed, "search seed");
  CLI::App* cmor = app.add_subcommand("morita-compare", "necessary-condition comparison");
  cmor->add_option("group-file", gfile, "first group file")->required();
  cmor->add_option("group-file2", gfile2, "second group file")->required();
  cmor->add_option("-p,--prime", p, "characteristic")->required();
  cmor->add_option("--blocks", blocks_pair, "pair of block indices i,j")->required();
  cmor->add_option("--iso", iso_file, "defect-group isomorphism map file")->required();
  cmor->add_flag("--json", as_json, "machine-readable output");

  CLI11_PARSE(app, argc, argv);

  try {
    std::string name = stem_of(gfile);
    if (app.got_subcommand("blocks")) {
      PermGroup G = load_group_file(gfile);
      GroupAlgebra kG = make_algebra(G, p, field_degree);
      std::vector<BlockSummary> rows = summarize_blocks(kG, seed);
      std::cout << (as_json ? blocks_report_json(name, p, kG, rows)
                            : blocks_report_text(name, p, rows));
    } else if (app.got_subcommand("fusion")) {
      GroupAlgebra kG = make_algebra(load_group_file(gfile), p, 0);
      BlockData bd = load_block(kG, block_idx, true, seed);
      FusionSummary s = summarize_fusion(FusionSystem::block_fusion(kG, bd));
      std::cout << (as_json ? fusion_report_json(name, p, block_idx, s)
                            : fusion_report_text(name, p, block_idx, s));
    } else if (app.got_subcommand("hyperfocal")) {
      GroupAlgebra kG = make_algebra(load_group_file(gfile), p, 0);
      BlockData bd = load_block(kG, block_idx, true, seed);
      PermGroup Dt = parse_subgroup_spec(dtilde_spec, bd.D);
      bool found = false;
      size_t dim = 0;
      std::string note;
      try {
        auto cand = search_hyperfocal(bd, Dt);
        found = cand.has_value();
        if (found) dim = cand->sub.alg.dim;
      } catch (const std::invalid_argument& e) {
        note = e.what();
      }
      std::cout << (as_json
                        ? hyperfocal_report_json(name, p, block_idx, Dt.order(), found, dim, note)
                        : hyperfocal_report_text(name, p, block_idx, Dt.order(), found, dim, note));
    } else if (app.got_subcommand("conjecture")) {
      GroupAlgebra kG = make_algebra(load_group_file(gfile), p, 0);
      BlockData bd = load_block(kG, block_idx, true, seed);
      ConjectureReport r = run_thm14(bd, parse_subgroup_spec(dtilde_spec, bd.D), seed);
      std::cout << (as_json ? conjecture_report_json(name, p, block_idx, r)
                            : conjecture_report_text(name, p, block_idx, r));
    } else if (app.got_subcommand("morita-compare")) {
      size_t comma = blocks_pair.find(',');
      if (comma == std::string::npos) throw std::runtime_error("--blocks expects i,j");
      size_t ia = std::stoul(blocks_pair.substr(0, comma));
      size_t ib = std::stoul(blocks_pair.substr(comma + 1));
      GroupAlgebra kA = make_algebra(load_group_file(gfile), p, 0);
      GroupAlgebra kB = make_algebra(load_group_file(gfile2), p, 0);
      BlockData a = load_block(kA, ia, true, seed);
      BlockData b = load_block(kB, ib, true, seed);
      GroupHom lambda = parse_iso_file(iso_file, a.D, b.D);
      MoritaReport r = morita_necessary_check(a, b, lambda, seed);
      std::string nb = stem_of(gfile2);
      std::cout << (as_json ? morita_report_json(name, nb, p, r)
                            : morita_report_text(name, nb, p, r));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
