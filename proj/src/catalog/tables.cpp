#include "qfl/catalog/catalog.hpp"
#include "qfl/errors.hpp"
#include "qfl/liecore/invariants.hpp"

namespace qfl::catalog {

StructureConstantTable::StructureConstantTable(const std::vector<Scalar>& alphas, std::size_t bound) : bound_(bound) {
  for (std::size_t i = 1; i < bound; ++i) a_[{i, i + 1}] = i <= alphas.size() ? alphas[i - 1] : Scalar(0);
  // Fill by increasing gap: a_{i,j+1} = a_{i,j} - a_{i+1,j}.
  for (std::size_t gap = 2; gap < bound; ++gap) {
    for (std::size_t i = 1; i + gap <= bound; ++i) {
      const std::size_t j = i + gap - 1;
      const Scalar inner = (i + 1 == j) ? Scalar(0) : a_.at({i + 1, j});
      a_[{i, j + 1}] = a_.at({i, j}) - inner;
    }
  }
}

Scalar StructureConstantTable::a(std::size_t i, std::size_t j) const {
  if (i == j) return 0;
  if (i > j) return -a(j, i);
  auto it = a_.find({i, j});
  return it == a_.end() ? Scalar(0) : it->second;
}

StructureConstantTable structure_table(const std::vector<Scalar>& alphas, std::size_t bound) {
  return StructureConstantTable(alphas, bound);
}

namespace {

Scalar sgn(std::size_t i) { return i % 2 == 1 ? 1 : -1; }  // (-1)^{i-1}

void chain(LieAlgebra& g, std::size_t hi) {
  for (std::size_t i = 1; i <= hi; ++i) g.add_term(0, i, i + 1, 1);
}

struct ALines {
  std::size_t k;
  std::size_t bound;                 // i + j <= bound
  std::optional<std::size_t> skip;   // i + j != skip
  std::optional<std::size_t> jmax;   // j < jmax
  bool alpha_target_minus_one = false;  // [Y_i, Y_{i+1}] lands on Y_{2i+k-1}
};

void a_lines(LieAlgebra& g, const StructureConstantTable& a, const ALines& o) {
  const std::size_t n = g.dim();
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (o.jmax && j >= *o.jmax) continue;
      if (i + j > o.bound) continue;
      if (o.skip && i + j == *o.skip) continue;
      std::size_t target = i + j + o.k - 1;
      if (o.alpha_target_minus_one && j == i + 1) target = 2 * i + o.k - 1;
      const Scalar c = a.a(i, j);
      if (c != 0 && target < n) g.add_term(i, j, target, c);
    }
  }
}

void shift_line(LieAlgebra& g, std::size_t count, std::size_t offset) {
  // [Y_i, Y_{n-1}] = Y_{i + offset}, i = 1..count.
  const std::size_t n = g.dim();
  for (std::size_t i = 1; i <= count; ++i) g.add_term(i, n - 1, i + offset, 1);
}

// Pairs [Y_i, Y_{n-p-i}] = (-1)^{i-1} Y_target for i = 1..last.
void q_pairing(LieAlgebra& g, std::size_t p, std::size_t target, std::size_t last) {
  const std::size_t n = g.dim();
  for (std::size_t i = 1; i <= last; ++i) g.add_term(i, n - p - i, target, sgn(i));
}

Scalar half(long x) {
  Scalar h(x, 2);
  h.canonicalize();
  return h;
}

std::size_t count(long x) { return x > 0 ? static_cast<std::size_t>(x) : 0; }

// Tn_n4 core, shared with Gn_k. `shift` is 3 in one printing of the last
// coefficient and 2 in the other.
void t_n4_core(LieAlgebra& g, std::size_t first_last_line, long shift) {
  const std::size_t n = g.dim();
  chain(g, n - 5);
  g.add_term(0, n - 3, n - 2, 1);
  g.add_term(0, n - 1, n - 3, 1);
  for (std::size_t i = 1; i <= (n - 5) / 2; ++i) {
    g.add_term(i, n - 4 - i, n - 1, sgn(i));
    g.add_term(i, n - 3 - i, n - 3, sgn(i) * half(static_cast<long>(n) - 3 - 2 * static_cast<long>(i)));
  }
  for (std::size_t i = first_last_line; i <= (n - 3) / 2; ++i) {
    const long il = static_cast<long>(i);
    const Scalar c = (i % 2 ? -1 : 1) * half((il - 1) * (static_cast<long>(n) - shift - il));
    if (c != 0) g.add_term(i, n - 2 - i, n - 2, c);
  }
}

void t_n3_core(LieAlgebra& g) {
  const std::size_t n = g.dim();
  chain(g, n - 4);
  g.add_term(0, n - 1, n - 2, 1);
  for (std::size_t i = 1; i <= (n - 4) / 2; ++i) {
    g.add_term(i, n - 3 - i, n - 1, sgn(i));
    g.add_term(i, n - 2 - i, n - 2, sgn(i) * half(static_cast<long>(n) - 2 - 2 * static_cast<long>(i)));
  }
}

void e951(LieAlgebra& g, bool graded) {
  chain(g, graded ? 6 : 4);
  g.add_term(0, 8, 6, 1);
  g.add_term(1, 4, 8, 1);
  g.add_term(1, 5, 6, 2);
  g.add_term(1, 6, 7, 3);
  g.add_term(2, 3, 8, -1);
  g.add_term(2, 4, 6, -1);
  g.add_term(2, 8, 7, -3);
  if (graded) g.add_term(2, 5, 7, -1);
}

void e952(LieAlgebra& g) {
  chain(g, 6);
  g.add_term(0, 8, 6, 1);
  g.add_term(1, 4, 8, 1);
  g.add_term(1, 5, 6, 2);
  g.add_term(1, 6, 7, 1);
  g.add_term(2, 3, 8, -1);
  g.add_term(2, 4, 6, -1);
  g.add_term(2, 5, 7, 1);
  g.add_term(2, 8, 7, -1);
  g.add_term(3, 4, 7, -2);
}

void e953_common(LieAlgebra& g) {
  g.add_term(0, 8, 6, 1);
  g.add_term(1, 4, 8, 1);
  g.add_term(2, 3, 8, -1);
  g.add_term(2, 4, 6, -1);
  g.add_term(2, 5, 7, 2);
  g.add_term(3, 4, 7, -3);
}

void e73(LieAlgebra& g) {
  chain(g, 4);
  g.add_term(0, 6, 4, 1);
  g.add_term(1, 2, 6, 1);
  g.add_term(1, 3, 4, 1);
  g.add_term(1, 4, 5, 1);
  g.add_term(2, 6, 5, -1);
}

}  // namespace

bool has_alternate_reading(Family f) {
  return f == Family::QC || f == Family::BC || f == Family::Gn_k || f == Family::E953;
}

LieAlgebra build_family_reading(const FamilySpec& s, Reading reading) {
  validate(s);
  const bool alt = reading == Reading::Alternate;
  if (alt && !has_alternate_reading(s.family)) {
    throw InputError(family_id(s.family) + " has a single reading");
  }
  const std::size_t n = s.n;
  const std::size_t r = s.r.value_or(0), k = s.k.value_or(0), l = s.l.value_or(0);
  const long nl = static_cast<long>(n), rl = static_cast<long>(r), kl = static_cast<long>(k), ll = static_cast<long>(l);
  const StructureConstantTable a(effective_alphas(s), n + 2);
  LieAlgebra g(n);

  switch (s.family) {
    case Family::LC:
      chain(g, n - 3);
      break;
    case Family::AC:
      chain(g, n - 3);
      a_lines(g, a, {k, n - k - 1, {}, {}});
      break;
    case Family::L_sd_l:
      chain(g, n - 3);
      shift_line(g, count(nl - ll - 2), l);
      break;
    case Family::A_sd_l:
      chain(g, n - 3);
      shift_line(g, count(nl - ll - 2), l);
      a_lines(g, a, {k, n - k - 1, {}, {}});
      break;
    case Family::QC:
    case Family::BC:
    case Family::Q_sd_a:
    case Family::B_sd_a:
    case Family::Q_sd_b:
    case Family::Q_sd_c:
    case Family::B_sd_c: {
      chain(g, n - 4);
      // Q+C is printed with the pairing [Y_i, Y_{n-i-1}]; every other
      // Q-based table pairs Y_i with Y_{n-i-2}.
      const std::size_t p = (s.family == Family::QC && !alt) ? 1 : 2;
      q_pairing(g, p, n - 2, (n - 3) / 2);
      if (s.family == Family::BC || s.family == Family::B_sd_a || s.family == Family::B_sd_c) {
        ALines o{k, n - k - 2, {}, {}};
        o.alpha_target_minus_one = s.family == Family::BC && !alt;
        a_lines(g, a, o);
      }
      if (s.family == Family::Q_sd_a || s.family == Family::B_sd_a || s.family == Family::Q_sd_b) {
        shift_line(g, count(nl - ll - 3), l);
      }
      if (s.family == Family::Q_sd_b || s.family == Family::Q_sd_c || s.family == Family::B_sd_c) {
        g.add_term(0, n - 1, n - 2, 1);
      }
      break;
    }
    case Family::Lnr:
    case Family::Cnr_k:
    case Family::Dnr_k:
      chain(g, n - 3);
      for (std::size_t i = 1; i <= (r - 1) / 2; ++i) {
        g.add_term(i, r - i, n - 1, sgn(i));
        if (s.family == Family::Cnr_k && k + r + 1 <= n) g.add_term(i, r - i, r + k - 1, a.a(i, r - i));
      }
      if (s.family == Family::Cnr_k) {
        a_lines(g, a, {k, n - k - 1, r, n - 1});
        shift_line(g, count(nl - rl - 2 * kl), 2 * k + r - 2);
      }
      if (s.family == Family::Dnr_k) shift_line(g, count(nl - rl - 2 * kl - 1), 2 * k + r - 1);
      break;
    case Family::Qnr:
    case Family::Enr_k:
    case Family::Fnr_k:
      chain(g, n - 4);
      for (std::size_t i = 1; i <= (r - 1) / 2; ++i) {
        g.add_term(i, r - i, n - 1, sgn(i));
        if (s.family == Family::Enr_k && k + r + 2 <= n) g.add_term(i, r - i, r + k - 1, a.a(i, r - i));
      }
      q_pairing(g, 2, n - 2, (n - 3) / 2);
      if (s.family == Family::Enr_k) {
        a_lines(g, a, {k, n - k - 2, r, n - 1});
        shift_line(g, count(nl - rl - 2 * kl - 1), 2 * k + r - 2);
      }
      if (s.family == Family::Fnr_k) shift_line(g, count(nl - rl - 2 * kl - 2), 2 * k + r - 1);
      break;
    case Family::Tn_n4:
      t_n4_core(g, 2, 3);
      break;
    case Family::Gn_k:
      // Printed with (i-1)(n-2-i)/2 from i = 1; the Tn_n4 table uses (n-3-i).
      t_n4_core(g, 1, alt ? 3 : 2);
      if (k == 2) g.add_term(1, n - 1, n - 2, 1);
      a_lines(g, a, {k, n - k - 3, {}, n - 2});
      break;
    case Family::Tn_n3:
      t_n3_core(g);
      break;
    case Family::Hn_k:
      t_n3_core(g);
      a_lines(g, a, {k, n - k - 2, {}, n - 2});
      break;
    case Family::E951:
      e951(g, false);
      break;
    case Family::E952:
      e952(g);
      break;
    case Family::E953:
      chain(g, 4);
      g.add_term(0, 6, 7, 1);
      e953_common(g);
      if (alt) g.add_term(1, 5, 6, 2);
      break;
    case Family::E73:
      e73(g);
      break;
  }
  return g;
}

FamilyBuild build_family_detailed(const FamilySpec& s) {
  FamilyBuild out;
  out.algebra = build_family_reading(s, Reading::Printed);
  const auto accepted = [&](const LieAlgebra& g) {
    return liecore::is_lie_algebra(g) && derivations::spec_is_derivation(g, torus_spec(s));
  };
  if (s.family == Family::E951) {
    out.notes.push_back("E951 uses the chain [Y0,Yi]=Y(i+1), i=1..4; the naturally graded table with i=1..6 and [Y2,Y5]=-Y7 is a different algebra of rank 1");
  }
  if (accepted(out.algebra) || !has_alternate_reading(s.family)) return out;

  LieAlgebra alt = build_family_reading(s, Reading::Alternate);
  if (!accepted(alt)) return out;
  out.algebra = std::move(alt);
  out.reading = Reading::Alternate;
  switch (s.family) {
    case Family::QC:
      out.notes.push_back("pairing [Yi,Y(n-i-1)] fails Jacobi; used [Yi,Y(n-i-2)]");
      break;
    case Family::BC:
      out.notes.push_back("alpha line onto Y(2i+k-1) fails Jacobi or weights; used Y(2i+k)");
      break;
    case Family::Gn_k:
      out.notes.push_back("coefficient (i-1)(n-2-i)/2 fails Jacobi; used (i-1)(n-3-i)/2");
      break;
    case Family::E953:
      out.notes.push_back("table without [Y1,Y5]=2Y6 fails Jacobi; added it");
      break;
    default:
      break;
  }
  return out;
}

LieAlgebra build_family(const FamilySpec& spec) { return build_family_detailed(spec).algebra; }

// --- printed tori -----------------------------------------------------------

DiagonalDerivationSpec torus_spec(const FamilySpec& s) {
  validate(s);
  const std::size_t n = s.n;
  const Scalar N(static_cast<long>(n));
  const Scalar r(static_cast<long>(s.r.value_or(0)));
  const Scalar k(static_cast<long>(s.k.value_or(0)));
  const Scalar l(static_cast<long>(s.l.value_or(0)));
  DiagonalDerivationSpec t;
  auto init = [&](std::vector<std::string> names) {
    t.params = names.size();
    t.param_names = std::move(names);
    t.weights.assign(n, exactlin::zero_vector(t.params));
  };
  auto set = [&](std::size_t i, std::vector<Scalar> w) {
    for (std::size_t a = 0; a < w.size(); ++a) t.weights[i][a] = w[a];
  };
  const std::string last = "lambda" + std::to_string(n - 1);
  auto I = [](std::size_t i) { return Scalar(static_cast<long>(i)); };

  switch (s.family) {
    case Family::LC:
      init({"lambda0", "lambda1", last});
      set(0, {1, 0, 0});
      for (std::size_t i = 1; i + 1 < n; ++i) set(i, {I(i) - 1, 1, 0});
      set(n - 1, {0, 0, 1});
      break;
    case Family::AC:
      init({"lambda0", last});
      set(0, {1, 0});
      for (std::size_t i = 1; i + 1 < n; ++i) set(i, {k + I(i) - 1, 0});
      set(n - 1, {0, 1});
      break;
    case Family::L_sd_l:
      init({"lambda0", "lambda1"});
      set(0, {1, 0});
      for (std::size_t i = 1; i + 1 < n; ++i) set(i, {I(i) - 1, 1});
      set(n - 1, {l, 0});
      break;
    case Family::A_sd_l:
      init({"lambda0"});
      set(0, {1});
      for (std::size_t i = 1; i + 1 < n; ++i) set(i, {k + I(i) - 1});
      set(n - 1, {l});
      break;
    case Family::QC:
    case Family::Q_sd_a:
    case Family::Q_sd_c:
    case Family::Qnr:
    case Family::Tn_n3:
      if (s.family == Family::QC) {
        init({"lambda0", "lambda1", last});
      } else {
        init({"lambda0", "lambda1"});
      }
      set(0, {1, 0});
      for (std::size_t i = 1; i + 2 < n; ++i) set(i, {I(i) - 1, 1});
      set(n - 2, {N - 4, 2});
      if (s.family == Family::QC) set(n - 1, {0, 0, 1});
      if (s.family == Family::Q_sd_a) set(n - 1, {l, 0});
      if (s.family == Family::Q_sd_c || s.family == Family::Tn_n3) set(n - 1, {N - 5, 2});
      if (s.family == Family::Qnr) set(n - 1, {r - 2, 2});
      break;
    case Family::BC:
    case Family::B_sd_a:
    case Family::B_sd_c:
    case Family::Enr_k:
    case Family::Hn_k:
      if (s.family == Family::BC) {
        init({"lambda0", last});
      } else {
        init({"lambda0"});
      }
      set(0, {1});
      for (std::size_t i = 1; i + 2 < n; ++i) set(i, {k + I(i) - 1});
      set(n - 2, {N - 4 + 2 * k});
      if (s.family == Family::BC) set(n - 1, {0, 1});
      if (s.family == Family::B_sd_a) set(n - 1, {l});
      if (s.family == Family::B_sd_c || s.family == Family::Hn_k) set(n - 1, {N - 5 + 2 * k});
      if (s.family == Family::Enr_k) set(n - 1, {r - 2 + 2 * k});
      break;
    case Family::Q_sd_b: {
      init({"lambda0"});
      const Scalar beta = (l - N + 5) / 2;
      set(0, {1});
      for (std::size_t i = 1; i + 2 < n; ++i) set(i, {beta + I(i) - 1});
      set(n - 2, {N - 4 + 2 * beta});
      set(n - 1, {N - 5 + 2 * beta});
      break;
    }
    case Family::Lnr:
      init({"lambda0", "lambda1"});
      set(0, {1, 0});
      for (std::size_t i = 1; i + 1 < n; ++i) set(i, {I(i) - 1, 1});
      set(n - 1, {r - 2, 2});
      break;
    case Family::Cnr_k:
      init({"lambda0"});
      set(0, {1});
      for (std::size_t i = 1; i + 1 < n; ++i) set(i, {k + I(i) - 1});
      set(n - 1, {r - 2 + 2 * k});
      break;
    case Family::Dnr_k:
      init({"lambda0"});
      set(0, {1});
      for (std::size_t i = 1; i + 1 < n; ++i) set(i, {k + I(i) - Scalar(1, 2)});
      set(n - 1, {r - 1 + 2 * k});
      break;
    case Family::Fnr_k:
      init({"lambda0"});
      set(0, {1});
      for (std::size_t i = 1; i + 2 < n; ++i) set(i, {k + I(i) - Scalar(1, 2)});
      set(n - 2, {N + 2 * k - 3});
      set(n - 1, {r + 2 * k - 1});
      break;
    case Family::Tn_n4:
      init({"lambda0", "lambda1"});
      set(0, {1, 0});
      for (std::size_t i = 1; i + 3 < n; ++i) set(i, {I(i) - 1, 1});
      set(n - 3, {N - 5, 2});
      set(n - 2, {N - 4, 2});
      set(n - 1, {N - 6, 2});
      break;
    case Family::Gn_k:
      init({"lambda0"});
      set(0, {1});
      for (std::size_t i = 1; i + 3 < n; ++i) set(i, {k + I(i) - 1});
      set(n - 3, {N - 5 + 2 * k});
      set(n - 2, {N - 4 + 2 * k});
      set(n - 1, {N - 6 + 2 * k});
      break;
    case Family::E951:
    case Family::E953: {
      init({"lambda0", "lambda1"});
      const long e7 = s.family == Family::E951 ? 4 : 5;
      const long e7b = s.family == Family::E951 ? 3 : 2;
      const std::vector<std::array<long, 2>> w{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}, {4, 2}, {e7, e7b}, {3, 2}};
      for (std::size_t i = 0; i < 9; ++i) set(i, {w[i][0], w[i][1]});
      break;
    }
    case Family::E952: {
      init({"lambda0"});
      const long w[] = {1, 1, 2, 3, 4, 5, 6, 7, 5};
      for (std::size_t i = 0; i < 9; ++i) set(i, {w[i]});
      break;
    }
    case Family::E73: {
      init({"lambda0"});
      const long w[] = {1, 1, 2, 3, 4, 5, 3};
      for (std::size_t i = 0; i < 7; ++i) set(i, {w[i]});
      break;
    }
  }
  return t;
}

LieAlgebra semidirect_sum(const LieAlgebra& n, const DiagonalDerivationSpec& torus) {
  if (torus.weights.size() != n.dim()) throw InputError("semidirect_sum: torus weights do not match the algebra");
  if (!derivations::spec_is_derivation(n, torus)) {
    throw PreconditionError("semidirect_sum: a torus generator is not a derivation");
  }
  const std::size_t p = torus.params;
  if (p == 0) return n;
  std::vector<std::string> labels = liecore::default_labels(p, "t");
  labels.insert(labels.end(), n.labels().begin(), n.labels().end());
  LieAlgebra g(p + n.dim(), labels);
  for (std::size_t a = 0; a < p; ++a) {
    for (std::size_t i = 0; i < n.dim(); ++i) {
      const Scalar& w = torus.weights[i][a];
      if (w != 0) g.add_term(a, p + i, p + i, w);
    }
  }
  for (const auto& [ij, terms] : n.brackets()) {
    for (const auto& [k, c] : terms) g.add_term(p + ij.first, p + ij.second, p + k, c);
  }
  return g;
}

// --- naturally graded list ---------------------------------------------------

bool is_naturally_graded_family(Family f) {
  switch (f) {
    case Family::LC:
    case Family::QC:
    case Family::Lnr:
    case Family::Qnr:
    case Family::Tn_n4:
    case Family::Tn_n3:
    case Family::E951:
    case Family::E952:
    case Family::E953:
    case Family::E73:
      return true;
    default:
      return false;
  }
}

std::vector<FamilySpec> graded_instances(std::size_t nmin, std::size_t nmax) {
  std::vector<FamilySpec> out;
  for (const auto& s : catalog_instances(nmin, nmax)) {
    if (is_naturally_graded_family(s.family)) out.push_back(s);
  }
  return out;
}

LieAlgebra build_naturally_graded(const FamilySpec& s) {
  validate(s);
  if (!is_naturally_graded_family(s.family)) throw InputError(family_id(s.family) + " is not in the naturally graded list");
  const std::size_t n = s.n;
  LieAlgebra g(n, liecore::default_labels(n, "X"));
  switch (s.family) {
    case Family::QC:
      chain(g, n - 4);
      q_pairing(g, 2, n - 2, (n - 3) / 2);
      break;
    case Family::E951:
      e951(g, true);
      break;
    case Family::E953:
      chain(g, 6);
      e953_common(g);
      g.add_term(1, 5, 6, 2);
      break;
    default: {
      LieAlgebra y = build_family_reading(s, Reading::Printed);
      y.set_labels(g.labels());
      g = std::move(y);
      break;
    }
  }
  return g;
}

std::vector<std::size_t> printed_psequence(const FamilySpec& s) {
  const std::size_t n = s.n;
  std::vector<std::size_t> p(n - 2, 1);
  if (s.family == Family::LC || s.family == Family::QC) {
    p[0] = 3;
    return p;
  }
  std::size_t r = 0;
  switch (s.family) {
    case Family::Lnr:
    case Family::Qnr:
      r = *s.r;
      break;
    case Family::Tn_n4:
      r = n - 4;
      break;
    case Family::Tn_n3:
      r = n - 3;
      break;
    case Family::E951:
    case Family::E952:
    case Family::E953:
      r = 5;
      break;
    case Family::E73:
      r = 3;
      break;
    default:
      throw InputError(family_id(s.family) + " is not in the naturally graded list");
  }
  p[0] = 2;
  p[r - 1] = 2;
  return p;
}

}  // namespace qfl::catalog
