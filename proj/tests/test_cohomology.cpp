#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <vector>

#include "multicoh/cohomology.hpp"
#include "multicoh/sheaf.hpp"
#include "multicoh/space.hpp"
#include "oracle.hpp"

using namespace multicoh;

namespace {

CohTable table_of(const Space& space, const Atom& atom) { return atom_cohomology(space, atom); }

std::vector<BigInt> dims(std::initializer_list<long long> vals) {
  std::vector<BigInt> out;
  for (long long v : vals) out.emplace_back(v);
  return out;
}

}  // namespace

TEST_CASE("h_line matches monomial counting in degree zero") {
  oracle::Rng rng(20240901);
  for (int n = 1; n <= 4; ++n)
    for (long long a = -2; a <= 6; ++a)
      REQUIRE(h_line(n, a, 0) == oracle::h0_monomial(n, a));

  // frozen values computed from the enumeration oracle
  REQUIRE(oracle::h0_monomial(2, 3) == 10);
  REQUIRE(h_line(2, 3, 0) == 10);
  REQUIRE(oracle::h0_monomial(3, 2) == 10);
  REQUIRE(h_line(3, 2, 0) == 10);
}

TEST_CASE("h_line vanishing range and top cohomology") {
  REQUIRE(h_line(2, -1, 1) == 0);
  REQUIRE(h_line(1, -2, 1) == 1);
  // Serre-dual brute check: h^3(P^3, O(-5)) = h^0(P^3, O(1))
  REQUIRE(oracle::h0_monomial(3, 1) == 4);
  REQUIRE(h_line(3, -5, 3) == 4);
  for (int q = 1; q <= 2; ++q)
    for (long long a = -3; a <= 3; ++a) REQUIRE(h_line(3, a, q) == 0);
  REQUIRE_THROWS_AS(h_line(2, 0, 3), std::domain_error);
  REQUIRE_THROWS_AS(h_line(2, 0, -1), std::domain_error);
}

TEST_CASE("h_line obeys Serre duality factor-wise") {
  for (int n = 1; n <= 4; ++n)
    for (long long a = -8; a <= 8; ++a)
      for (int q = 0; q <= n; ++q) REQUIRE(h_line(n, a, q) == h_line(n, -a - n - 1, n - q));
}

TEST_CASE("h_bott pinned values") {
  // Euler-sequence oracle: dim ker(H^0(O(1))^3 -> H^0(O(2))) = 9 - 6
  REQUIRE(oracle::h0_omega1_euler(2, 2) == 3);
  REQUIRE(h_bott(2, 1, 2, 0) == 3);
  REQUIRE(oracle::h0_omega1_euler(3, 2) == 6);
  REQUIRE(h_bott(3, 1, 2, 0) == 6);

  REQUIRE(h_bott(2, 1, 0, 1) == 1);
  // Serre duality against the q=0 value above
  REQUIRE(h_bott(2, 1, -2, 2) == h_bott(2, 1, 2, 0));

  REQUIRE_THROWS_AS(h_bott(2, 3, 0, 0), std::domain_error);
  REQUIRE_THROWS_AS(h_bott(2, 1, 0, 3), std::domain_error);
}

TEST_CASE("h_bott h^0 agrees with the Euler-sequence kernel for p = 1") {
  for (int n = 2; n <= 4; ++n)
    for (long long t = 1; t <= 6; ++t) REQUIRE(h_bott(n, 1, t, 0) == oracle::h0_omega1_euler(n, t));
}

TEST_CASE("h_bott alternating sum equals the Koszul-resolution chi") {
  for (int n = 1; n <= 4; ++n)
    for (int p = 0; p <= n; ++p)
      for (long long t = -6; t <= 6; ++t) {
        BigInt alt = 0;
        for (int q = 0; q <= n; ++q) {
          const BigInt h = h_bott(n, p, t, q);
          if (q % 2 == 0)
            alt += h;
          else
            alt -= h;
        }
        REQUIRE(alt == oracle::bott_chi_koszul(n, p, t));
      }
}

TEST_CASE("h_bott at p = 0 and p = n reduces to line bundles") {
  for (int n = 1; n <= 4; ++n)
    for (long long t = -7; t <= 7; ++t)
      for (int q = 0; q <= n; ++q) {
        REQUIRE(h_bott(n, 0, t, q) == h_line(n, t, q));
        REQUIRE(h_bott(n, n, t, q) == h_line(n, t - n - 1, q));
      }
}

TEST_CASE("atom cohomology via Kunneth") {
  const Space p1p1({1, 1});
  REQUIRE(table_of(p1p1, Atom::line(p1p1, {-2, 0})).h == dims({0, 1, 0}));

  const Space p1p2({1, 2});
  const CohTable canonical = table_of(p1p2, Atom::line(p1p2, {-2, -3}));
  REQUIRE(canonical.at(3) == 1);
  REQUIRE(canonical.h == dims({0, 0, 0, 1}));

  const Atom mixed(p1p2, {FactorSheaf::line(0), FactorSheaf::diff(1, 2)});
  REQUIRE(table_of(p1p2, mixed).h == dims({3, 0, 0, 0}));

  REQUIRE_THROWS_AS(atom_cohomology(p1p2, Atom::line(Space({1}), {0})), std::invalid_argument);
}

TEST_CASE("bundle cohomology sums atom tables with multiplicities") {
  const Space p1p1({1, 1});
  Bundle doubled = Bundle::of_atom(p1p1, Atom::line(p1p1, {0, 0}), 2);
  REQUIRE(bundle_cohomology(doubled).h == dims({2, 0, 0}));

  Bundle sum(p1p1);
  sum.add(Atom::line(p1p1, {-2, 0}));
  sum.add(Atom::line(p1p1, {0, -2}));
  REQUIRE(bundle_cohomology(sum).h == dims({0, 2, 0}));

  REQUIRE(bundle_cohomology(Bundle(p1p1)).h == dims({0, 0, 0}));
}

TEST_CASE("twisting shifts every factor") {
  const Space p1p2({1, 2});
  const Bundle b = Bundle::line(p1p2, {1, -2});
  REQUIRE(twist_bundle(b, {2, 2}) == Bundle::line(p1p2, {3, 0}));

  const Bundle mixed = Bundle::of_atom(p1p2, Atom(p1p2, {FactorSheaf::line(0), FactorSheaf::diff(1, 2)}));
  const Bundle shifted = twist_bundle(mixed, {0, -1});
  REQUIRE(shifted.summands()[0].atom.factor(1) == FactorSheaf::diff(1, 1));

  oracle::Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Space space = oracle::random_space(rng);
    const Bundle rb = oracle::random_bundle(rng, space);
    REQUIRE(twist_bundle(rb, balanced(space, 0)) == rb);
  }
}

TEST_CASE("duals") {
  const Space p1p1({1, 1});
  REQUIRE(dual_bundle(Bundle::line(p1p1, {3, -1})) == Bundle::line(p1p1, {-3, 1}));

  // (Omega^1_{P^2}(2))^dual = Omega^1_{P^2}(1)
  const Space p2({2});
  const Atom omega(p2, {FactorSheaf::diff(1, 2)});
  REQUIRE(omega.dual(p2).factor(0) == FactorSheaf::diff(1, 1));

  oracle::Rng rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const Space space = oracle::random_space(rng);
    const Bundle b = oracle::random_bundle(rng, space);
    REQUIRE(dual_bundle(dual_bundle(b)) == b);
  }
}

TEST_CASE("Serre duality on random atoms") {
  oracle::Rng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const Space space = oracle::random_space(rng);
    const int d = space.total_dim();
    const Atom a = oracle::random_atom(rng, space);
    const Atom serre = a.dual(space).twisted(space, canonical_multidegree(space));
    const CohTable lhs = atom_cohomology(space, a);
    const CohTable rhs = atom_cohomology(space, serre);
    for (int q = 0; q <= d; ++q) REQUIRE(lhs.at(q) == rhs.at(d - q));
  }
}

TEST_CASE("Kunneth tables are invariant under factor permutation") {
  oracle::Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const Space space = oracle::random_space(rng);
    const Atom a = oracle::random_atom(rng, space);
    std::vector<int> perm(static_cast<size_t>(space.factors()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng.gen);
    std::vector<int> pdims;
    std::vector<FactorSheaf> pfs;
    for (int j : perm) {
      pdims.push_back(space.dim(j));
      pfs.push_back(a.factor(j));
    }
    const Space pspace(pdims);
    REQUIRE(atom_cohomology(space, a).h == atom_cohomology(pspace, Atom(pspace, pfs)).h);
  }
}

TEST_CASE("tables are nonnegative with d+1 entries") {
  oracle::Rng rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const Space space = oracle::random_space(rng);
    const CohTable t = atom_cohomology(space, oracle::random_atom(rng, space));
    REQUIRE(static_cast<int>(t.h.size()) == space.total_dim() + 1);
    for (const auto& v : t.h) REQUIRE(v >= 0);
  }
}

TEST_CASE("bundle cohomology is additive over concatenation") {
  oracle::Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const Space space = oracle::random_space(rng);
    const Bundle x = oracle::random_bundle(rng, space);
    const Bundle y = oracle::random_bundle(rng, space);
    Bundle both = x;
    for (const auto& s : y.summands()) both.add(s.atom, s.multiplicity);
    const CohTable tx = bundle_cohomology(x);
    const CohTable ty = bundle_cohomology(y);
    const CohTable tb = bundle_cohomology(both);
    for (size_t q = 0; q < tb.h.size(); ++q) REQUIRE(tb.h[q] == tx.h[q] + ty.h[q]);
  }
}

TEST_CASE("ranks") {
  const Space p1p1({1, 1});
  REQUIRE(rank(Bundle::line(p1p1, {1, 1})) == 1);

  const Space p1p2({1, 2});
  const Bundle mixed = Bundle::of_atom(p1p2, Atom(p1p2, {FactorSheaf::line(0), FactorSheaf::diff(1, 2)}));
  REQUIRE(rank(mixed) == 2);

  const Space p3p3({3, 3});
  const Bundle omegas =
      Bundle::of_atom(p3p3, Atom(p3p3, {FactorSheaf::diff(1, 1), FactorSheaf::diff(2, 1)}));
  REQUIRE(rank(omegas) == 9);
}

TEST_CASE("Euler characteristics") {
  const Space p1p2({1, 2});
  REQUIRE(euler_char(Bundle::line(p1p2, {1, 1})) == 6);
  REQUIRE(euler_char(Bundle::line(p1p2, {-1, 0})) == 0);
  REQUIRE(euler_char(Bundle::line(p1p2, {-2, -3})) == -1);

  // alternating table sum vs the signed polynomial product, all-line atoms
  oracle::Rng rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    const Space space = oracle::random_space(rng);
    Multidegree a;
    for (int j = 0; j < space.factors(); ++j) a.push_back(rng.uniform(-6, 6));
    const Atom atom = Atom::line(space, a);
    REQUIRE(euler_char(Bundle::of_atom(space, atom)) == chi_line_atom_product(space, atom));
    BigInt prod = 1;
    for (int j = 0; j < space.factors(); ++j)
      prod *= oracle::chi_line(space.dim(j), a[static_cast<size_t>(j)]);
    REQUIRE(chi_line_atom_product(space, atom) == prod);
  }
}

TEST_CASE("factor normalization collapses Omega^0 and Omega^n") {
  const Space p1p2({1, 2});
  const Atom a(p1p2, {FactorSheaf::line(0), FactorSheaf::diff(2, 3)});
  REQUIRE(a.factor(1) == FactorSheaf::line(0));  // Omega^2_{P^2}(3) = O(3-3)

  const Atom b(p1p2, {FactorSheaf::line(1), FactorSheaf::diff(0, 5)});
  REQUIRE(b.factor(1) == FactorSheaf::line(5));

  REQUIRE_THROWS_AS(Atom(p1p2, {FactorSheaf::line(0), FactorSheaf::diff(3, 0)}),
                    std::domain_error);

  // normalized pair has identical cohomology to the differential it replaced
  for (long long t = -6; t <= 6; ++t) {
    const Atom direct(p1p2, {FactorSheaf::line(0), FactorSheaf::diff(2, t)});
    const Atom asline = Atom::line(p1p2, {0, t - 3});
    REQUIRE(atom_cohomology(p1p2, direct).h == atom_cohomology(p1p2, asline).h);
  }
}
