#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "blocklab/fusion.hpp"
#include "blocklab/stable_basis.hpp"

namespace blocklab {

// restriction of an interior algebra structure to a unitary subalgebra that is
// stable under the group action; Ntilde <= N with sigma(Ntilde) inside the space
InteriorAlgebra interior_subalgebra(const InteriorAlgebra& A, const Subspace& space,
                                    const PermGroup& Ntilde);

// A verified hyperfocal-subalgebra candidate: a unitary, D-stable subalgebra
// Atilde of the source algebra with Atilde cap D.l = Dtilde.l and
// A = (+)_u Atilde.u over a transversal of Dtilde in D.
struct HyperfocalCandidate {
  PermGroup Dtilde;
  Subspace space;         // inside the source algebra A
  SubAlgebra sub;         // Atilde with its own basis
  InteriorAlgebra tilde;  // Atilde as a Dtilde-interior D-algebra
};

struct HyperfocalDiagnostics {
  bool ok = false;
  std::string first_failure;  // empty when ok
};

// checks the four acceptance invariants exactly; assumes hyp(F) <= Dtilde
// was established by the caller
HyperfocalDiagnostics verify_hyperfocal(const InteriorAlgebra& A, const PermGroup& Dtilde,
                                        const Subspace& space);

// best-effort search: Dtilde = D gives A itself; otherwise candidates come from
// spans of block components over normal subgroups H with H cap D = Dtilde, and
// from k.l when Dtilde = 1. Every returned candidate passed verify_hyperfocal;
// none means search failure, not nonexistence.
std::optional<HyperfocalCandidate> search_hyperfocal(const BlockData& block,
                                                     const PermGroup& Dtilde);

struct StageRecord {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct ConjectureReport {
  PermGroup D, Dtilde;
  uint64_t seed = 1;
  std::vector<StageRecord> stages;
  bool hypothesis_holds = false;
  CriterionVerdict tilde_verdict = CriterionVerdict::undetermined;
  std::optional<ActionBasis> tilde_basis;   // unital stable basis of Atilde
  std::optional<ActionBasis> lifted_basis;  // of Atilde (x)_Dtilde D
  bool lifted_basis_ok = false;
  bool completed = false;  // every stage ran and succeeded
};

// the staged verification: hyperfocal containment, category-equality
// hypothesis, stable basis on Atilde, unit criterion, unitalization, lift.
// Stage failures are recorded in the transcript, never thrown.
ConjectureReport run_thm14(const BlockData& block, const PermGroup& Dtilde,
                           uint64_t seed = 1);

// local points of R on the source algebra, with multiplicities
std::vector<Point> local_points(const InteriorAlgebra& A, const PermGroup& R,
                                uint64_t seed = 1);

struct MoritaReport {
  bool fusion_ok = false;  // lambda transports the block fusion systems
  bool counts_ok = false;  // local point counts agree per subgroup
  bool mult_ok = false;    // multiplicity multisets agree per subgroup
  std::vector<std::string> mismatches;
  bool passed() const { return fusion_ok && counts_ok && mult_ok; }
};

// necessary conditions for a basic Morita equivalence carrying defect-group
// isomorphism lambda: D -> D'; any mismatch certifies non-equivalence via
// lambda, agreement proves nothing
MoritaReport morita_necessary_check(const BlockData& a, const BlockData& b,
                                    const GroupHom& lambda, uint64_t seed = 1);

struct Corollary15Report {
  bool nilpotent = false;
  std::string branch;
  std::optional<ConjectureReport> pipeline;  // run with Dtilde = 1 when nilpotent
};

Corollary15Report corollary15_suite(const BlockData& block, uint64_t seed = 1);

}  // namespace blocklab
