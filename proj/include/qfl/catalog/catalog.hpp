#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qfl/derivations/derivations.hpp"
#include "qfl/liecore/lie_algebra.hpp"

namespace qfl::catalog {

using derivations::DiagonalDerivationSpec;
using exactlin::Scalar;
using exactlin::Vector;
using liecore::LieAlgebra;

// Families of quasi-filiform algebras with a nonzero diagonal derivation.
// Identifiers (family_id) are stable and used verbatim by the CLI.
enum class Family {
  LC,      // L+C      L_{n-1} + C
  AC,      // A+C      A^k_{n-1}(alpha) + C
  L_sd_l,  // L_sd_l   L_{n-1} semidirect_l C
  A_sd_l,  // A_sd_l
  QC,      // Q+C      Q_{n-1} + C
  BC,      // B+C      B^k_{n-1}(alpha) + C
  Q_sd_a,
  B_sd_a,
  Q_sd_b,
  Q_sd_c,
  B_sd_c,
  Lnr,
  Cnr_k,
  Dnr_k,
  Qnr,
  Enr_k,
  Fnr_k,
  Tn_n4,
  Gn_k,
  Tn_n3,
  Hn_k,
  E951,
  E952,
  E953,
  E73,
};

const std::vector<Family>& all_families();
std::string family_id(Family f);
std::optional<Family> family_from_id(std::string_view id);

bool uses_r(Family f);
bool uses_k(Family f);
bool uses_l(Family f);
bool uses_alpha(Family f);

struct FamilySpec {
  Family family = Family::LC;
  std::size_t n = 0;
  std::optional<std::size_t> r, k, l;
  std::vector<Scalar> alphas;  // alpha_1..alpha_{t-1}; empty means "shipped seed"

  /// Canonical "FAMILY:n=..,r=..,k=..,l=..,alpha=.." form.
  std::string to_string() const;
  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Parses "FAMILY:key=value,..." (keys n, r, k, l, alpha; bare values after
/// alpha= extend the alpha list). Validates ranges. Throws InputError.
FamilySpec parse_spec(std::string_view text);

/// Throws InputError when a parameter is missing, spurious, or outside the
/// printed range of its family.
void validate(const FamilySpec& spec);

/// t for alpha families (t - 1 alphas), nullopt otherwise.
std::optional<std::size_t> t_parameter(const FamilySpec& spec);

/// alphas if given, else the shipped seed: (1, 0, ..., 0) unless a
/// Jacobi-consistent override is recorded for the instance.
std::vector<Scalar> effective_alphas(const FamilySpec& spec);

struct PrintedInvariants {
  std::size_t type;
  std::size_t rank;
};
PrintedInvariants printed_invariants(Family f);

/// Families listed as having rank equal to type.
bool in_rank_maximal_list(Family f);

/// a_{i,j} for 1 <= i < j <= bound from a_{i,i+1} = alpha_i (alpha_i = 0
/// past the list) and a_{i,j+1} = a_{i,j} - a_{i+1,j}.
class StructureConstantTable {
 public:
  StructureConstantTable(const std::vector<Scalar>& alphas, std::size_t bound);
  std::size_t bound() const { return bound_; }
  Scalar a(std::size_t i, std::size_t j) const;  // 0 outside the table, -a(j,i) for i > j

 private:
  std::size_t bound_;
  std::map<std::pair<std::size_t, std::size_t>, Scalar> a_;
};

StructureConstantTable structure_table(const std::vector<Scalar>& alphas, std::size_t bound);

// Two transcriptions exist for a few tables (an index, a target, a
// coefficient or a missing bracket). The printed reading is tried first.
enum class Reading { Printed, Alternate };
bool has_alternate_reading(Family f);

LieAlgebra build_family_reading(const FamilySpec& spec, Reading reading);

struct FamilyBuild {
  LieAlgebra algebra;
  Reading reading = Reading::Printed;
  std::vector<std::string> notes;
};

/// Printed table if it is a Lie algebra carrying the printed torus,
/// otherwise the alternate reading when that one is; otherwise the printed
/// table (and the caller's Jacobi check will report it).
FamilyBuild build_family_detailed(const FamilySpec& spec);
LieAlgebra build_family(const FamilySpec& spec);

/// The printed diag(...) weight pattern, one parameter per printed rank.
DiagonalDerivationSpec torus_spec(const FamilySpec& spec);

/// t + n with [T_a, Y_i] = w_i(a) Y_i; torus generators first (labels
/// t0, t1, ...), torus abelian. PreconditionError if a generator is not a
/// derivation of n.
LieAlgebra semidirect_sum(const LieAlgebra& n, const DiagonalDerivationSpec& torus);

/// Reason why the printed table can never satisfy Jacobi, for the instances
/// where this is known; nullopt otherwise.
std::optional<std::string> known_unrealizable(const FamilySpec& spec);

/// Every valid instance of the parameterized families with nmin <= n <= nmax,
/// plus the exceptional algebras when their dimension is in range.
std::vector<FamilySpec> catalog_instances(std::size_t nmin, std::size_t nmax);

// --- naturally graded list (basis X_0..X_{n-1}) --------------------------

bool is_naturally_graded_family(Family f);
/// Valid (n, r) instances with nmin <= n <= nmax.
std::vector<FamilySpec> graded_instances(std::size_t nmin, std::size_t nmax);
LieAlgebra build_naturally_graded(const FamilySpec& spec);
/// (3,1,...,1) or (2,1,...,2 at position r,...,1), length n - 2.
std::vector<std::size_t> printed_psequence(const FamilySpec& spec);

// --- completability -------------------------------------------------------

struct CompletabilityReport {
  std::string spec;
  bool jacobi_ok = false;
  std::size_t defects = 0;
  std::optional<std::size_t> nilindex;
  std::size_t type = 0;
  std::size_t rank = 0;  // diagonal rank in the catalog basis
  PrintedInvariants printed{0, 0};
  bool printed_torus_ok = false;  // printed pattern is a torus of derivations
  std::size_t torus_rank = 0;     // rank of the torus used for the sum
  std::size_t refinement_steps = 0;
  std::size_t completion_dim = 0;
  std::size_t h0 = 0;
  std::size_t h1 = 0;
  bool complete = false;
  std::vector<std::string> notes;
};

/// Builds n, checks Jacobi, nilindex, type and rank, then forms t + n with
/// the printed torus and computes H^0, H^1 of the sum. If the sum is not
/// complete, the torus is tested for maximality and refined when a witness
/// is found; the report then describes the refined torus.
CompletabilityReport completability_report(const FamilySpec& spec);
nlohmann::json to_json(const CompletabilityReport& r);

}  // namespace qfl::catalog
