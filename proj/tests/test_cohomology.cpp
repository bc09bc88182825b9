#include <memory>
#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "qfl/catalog/catalog.hpp"
#include "qfl/cohomology/cohomology.hpp"
#include "qfl/derivations/derivations.hpp"
#include "qfl/errors.hpp"
#include "qfl/liecore/invariants.hpp"

using namespace qfl::cohomology;
using qfl::catalog::build_family;
using qfl::catalog::parse_spec;

namespace {

LieAlgebra nonabelian2() {
  LieAlgebra g(2);
  g.add_term(1, 0, 0, 1);
  return g;
}

LieAlgebra heisenberg() {
  LieAlgebra h(3);
  h.add_term(0, 1, 2, 1);
  return h;
}

// sl2 over Q: [h,e]=2e, [h,f]=-2f, [e,f]=h.
LieAlgebra sl2() {
  LieAlgebra g(3, {"h", "e", "f"});
  g.add_term(0, 1, 1, 2);
  g.add_term(0, 2, 2, -2);
  g.add_term(1, 2, 0, 1);
  return g;
}

LieAlgebra r3() {
  // Solvable 3-dim: [x, y] = y, [x, z] = 2z.
  LieAlgebra g(3);
  g.add_term(0, 1, 1, 1);
  g.add_term(0, 2, 2, 2);
  return g;
}

LieAlgebra filiform4() {
  LieAlgebra g(4);
  g.add_term(0, 1, 2, 1);
  g.add_term(0, 2, 3, 1);
  return g;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows(), b.cols());
  const Matrix bt = b.transpose();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < bt.rows(); ++j) {
      Scalar s = 0;
      auto p = a.row(i).begin(), q = bt.row(j).begin();
      while (p != a.row(i).end() && q != bt.row(j).end()) {
        if (p->first < q->first) {
          ++p;
        } else if (q->first < p->first) {
          ++q;
        } else {
          s += p->second * q->second;
          ++p, ++q;
        }
      }
      if (s != 0) c.set(i, j, s);
    }
  }
  return c;
}

}  // namespace

TEST_CASE("cochain dimensions") {
  CHECK(cochain_dim(6, 0) == 6);
  CHECK(cochain_dim(6, 2) == 90);
  CHECK(cochain_dim(13, 3) == 3718);
  CHECK_THROWS_AS(cochain_dim(2, 3), qfl::InputError);
  CHECK_THROWS_AS(differential_matrix(heisenberg(), 3), qfl::InputError);
}

TEST_CASE("small cohomology") {
  LieAlgebra ab(2);
  CHECK(cohomology_dim(ab, 1) == 4);
  CHECK(cohomology_dim(nonabelian2(), 0) == 0);
  CHECK(cohomology_dim(nonabelian2(), 1) == 0);
  CHECK(cohomology_dim(nonabelian2(), 2) == 0);
  // Semisimple: Whitehead's lemmas.
  CHECK(cohomology_dim(sl2(), 1) == 0);
  CHECK(cohomology_dim(sl2(), 2) == 0);
}

TEST_CASE("cohomology agrees with the full-tensor oracle") {
  for (const auto& g : {nonabelian2(), heisenberg(), sl2(), r3(), filiform4(), LieAlgebra(3)}) {
    const auto t = oracle::tensor(g);
    for (std::size_t k = 0; k <= 2; ++k) {
      CAPTURE(k);
      CHECK(cohomology_dim(g, k) == oracle::cohomology_dim(t, k));
      CHECK(qfl::exactlin::rank(differential_matrix(g, k).d) == oracle::differential_rank(t, k));
    }
  }
}

TEST_CASE("d o d = 0 and kernel anchors") {
  for (const char* s : {"L+C:n=6", "Lnr:n=7,r=5", "E73", "Tn_n4:n=7", "B+C:n=9,k=2"}) {
    CAPTURE(s);
    const auto g = build_family(parse_spec(s));
    const auto d0 = differential_matrix(g, 0), d1 = differential_matrix(g, 1), d2 = differential_matrix(g, 2);
    CHECK(multiply(d1.d, d0.d).nonzeros() == 0);
    CHECK(multiply(d2.d, d1.d).nonzeros() == 0);
    const std::size_t n = g.dim();
    const std::size_t r0 = qfl::exactlin::rank(d0.d), r1 = qfl::exactlin::rank(d1.d);
    CHECK(n - r0 == qfl::liecore::center(g).dim());
    CHECK(n * n - r1 == qfl::derivations::derivation_space(g).dim());
    CHECK(r0 == qfl::derivations::inner_derivations(g).dim());
  }
}

TEST_CASE("kernel of d1 is exactly the derivation space") {
  // Not just equal dimensions: every derivation, flattened in C^1 order
  // (column b, target m at b*n + m), is a 1-cocycle.
  const auto g = build_family(parse_spec("Lnr:n=7,r=3"));
  const std::size_t n = g.dim();
  const auto d1 = differential_matrix(g, 1);
  for (const auto& d : qfl::derivations::derivation_space(g).basis) {
    Vector x = qfl::exactlin::zero_vector(n * n);
    for (std::size_t m = 0; m < n; ++m)
      for (const auto& [b, v] : d.row(m)) x[b * n + m] = v;
    CHECK(qfl::exactlin::is_zero(d1.d.apply(x)));
  }
}

TEST_CASE("cocycles and classes") {
  auto g = std::make_shared<const LieAlgebra>(build_family(parse_spec("E73")));
  Cochain2 zero(g);
  CHECK(is_cocycle(zero));
  CHECK(classes_rank(*g, {zero}) == 0);

  // A coboundary lies in B^2.
  Matrix phi(7, 7);
  phi.set(3, 1, 1);
  phi.set(0, 6, Scalar(2, 3));
  const auto b = coboundary(g, phi);
  CHECK(is_cocycle(b));
  CHECK(classes_rank(*g, {b}) == 0);

  // phi(Y1, Y2) = Y3 alone: (d phi)(Y0, Y1, Y2) = [Y0, phi(Y1, Y2)] = Y4,
  // every other term vanishes since Y0, Y1, Y2 are not brackets of the
  // pairs involved.
  Cochain2 bad(g);
  bad.set(1, 2, qfl::exactlin::unit_vector(7, 3));
  CHECK_FALSE(is_cocycle(bad));
  CHECK_THROWS_AS(classes_rank(*g, {bad}), qfl::PreconditionError);

  auto other = std::make_shared<const LieAlgebra>(build_family(parse_spec("L+C:n=7")));
  CHECK_THROWS_AS(classes_rank(*g, {Cochain2(other)}), qfl::PreconditionError);
}

TEST_CASE("cochain storage") {
  auto g = std::make_shared<const LieAlgebra>(heisenberg());
  Cochain2 c(g);
  c.set(2, 0, Vector{1, 0, 0});
  CHECK(c.value(0, 2) == Vector{-1, 0, 0});
  CHECK(c.value(1, 1) == Vector{0, 0, 0});
  CHECK_THROWS_AS(c.set(1, 1, Vector{1, 0, 0}), qfl::InputError);
  CHECK_THROWS_AS(c.set(0, 1, Vector{1, 0}), qfl::InputError);
  const auto back = Cochain2::from_coordinates(g, c.coordinates());
  CHECK(back.values() == c.values());
  // Pair order (0,1),(0,2),(1,2): (0,2) is block 1.
  CHECK(c.coordinates()[3] == -1);
}

TEST_CASE("report") {
  const auto r = cohomology_report(nonabelian2(), "r2");
  CHECK(r.h[0] == 0);
  CHECK(r.h[1] == 0);
  CHECK(r.h[2] == 0);
  const auto j = to_json(r);
  CHECK(j["algebra"] == "r2");
  CHECK(j["dims"]["C1"] == 4);
  CHECK(j["dims"]["C2"] == 2);
  CHECK(j["dims"]["C3"] == 0);
  CHECK(j["H"]["H2"] == 0);
}
