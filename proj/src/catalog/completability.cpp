#include "qfl/catalog/catalog.hpp"
#include "qfl/cohomology/cohomology.hpp"
#include "qfl/exactlin/matrix.hpp"
#include "qfl/liecore/invariants.hpp"

namespace qfl::catalog {

namespace {

struct LowCohomology {
  std::size_t h0, h1;
};

// H^0 and H^1 with coefficients in the adjoint module; d_2 is not needed.
LowCohomology low_cohomology(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  const std::size_t r0 = exactlin::rank(cohomology::differential_matrix(g, 0).d);
  const std::size_t r1 = exactlin::rank(cohomology::differential_matrix(g, 1).d);
  return {n - r0, n * n - r1 - r0};
}

}  // namespace

CompletabilityReport completability_report(const FamilySpec& spec) {
  CompletabilityReport rep;
  rep.spec = spec.to_string();
  rep.printed = printed_invariants(spec.family);

  FamilyBuild built = build_family_detailed(spec);
  rep.notes = built.notes;
  const LieAlgebra& g = built.algebra;
  rep.defects = liecore::jacobi_defect(g).size();
  rep.jacobi_ok = rep.defects == 0;
  if (!rep.jacobi_ok) {
    if (auto why = known_unrealizable(spec)) rep.notes.push_back(*why);
    return rep;
  }

  rep.nilindex = liecore::lower_central_series(g).nilindex;
  rep.type = liecore::type_of(g);
  const auto diag = derivations::diagonal_derivation_space(g);
  rep.rank = diag.rank();

  DiagonalDerivationSpec torus = torus_spec(spec);
  rep.printed_torus_ok = derivations::spec_is_derivation(g, torus);
  if (!rep.printed_torus_ok) {
    rep.notes.push_back("printed weights are not derivations; using the full diagonal space");
    torus = diag;
  }

  LieAlgebra sum = semidirect_sum(g, torus);
  rep.torus_rank = torus.rank();
  auto h = low_cohomology(sum);
  if (h.h0 != 0 || h.h1 != 0) {
    if (auto refined = derivations::refine_torus(g, torus)) {
      if (refined->steps > 0) {
        rep.refinement_steps = refined->steps;
        rep.torus_rank = refined->torus.rank();
        sum = semidirect_sum(refined->algebra, refined->torus);
        h = low_cohomology(sum);
        rep.notes.push_back("printed torus is not maximal; refined to rank " + std::to_string(rep.torus_rank));
      }
    }
  }
  rep.completion_dim = sum.dim();
  rep.h0 = h.h0;
  rep.h1 = h.h1;
  rep.complete = h.h0 == 0 && h.h1 == 0;
  return rep;
}

nlohmann::json to_json(const CompletabilityReport& r) {
  nlohmann::json j{{"spec", r.spec},
                   {"jacobi", r.jacobi_ok},
                   {"jacobi_defects", r.defects},
                   {"type", r.type},
                   {"rank", r.rank},
                   {"printed", {{"type", r.printed.type}, {"rank", r.printed.rank}}},
                   {"printed_torus_ok", r.printed_torus_ok},
                   {"torus_rank", r.torus_rank},
                   {"refinement_steps", r.refinement_steps},
                   {"completion_dim", r.completion_dim},
                   {"H0", r.h0},
                   {"H1", r.h1},
                   {"complete", r.complete},
                   {"notes", r.notes}};
  j["nilindex"] = r.nilindex ? nlohmann::json(*r.nilindex) : nlohmann::json(nullptr);
  return j;
}

}  // namespace qfl::catalog
