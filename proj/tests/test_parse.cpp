#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "multicoh/parse.hpp"
#include "multicoh/cohomology.hpp"
#include "oracle.hpp"

using namespace multicoh;

namespace {

ParseDiagnostic diag_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e.diagnostic();
  }
  FAIL("expected a ParseError");
  return {};
}

}  // namespace

TEST_CASE("parse_space") {
  CHECK(parse_space("1,2") == Space({1, 2}));
  CHECK(parse_space("3,3,3") == Space({3, 3, 3}));
  CHECK(parse_space(" 2 , 1 ") == Space({2, 1}));

  const ParseDiagnostic zero = diag_of([] { parse_space("1,0"); });
  CHECK(zero.offset == 2);
  CHECK(zero.semantic);

  const ParseDiagnostic neg = diag_of([] { parse_space("-1"); });
  CHECK(neg.semantic);

  const ParseDiagnostic empty = diag_of([] { parse_space(""); });
  CHECK(empty.offset == 0);
  CHECK_FALSE(empty.semantic);

  const ParseDiagnostic trailing = diag_of([] { parse_space("1,2)"); });
  CHECK(trailing.offset == 3);
  CHECK_FALSE(trailing.semantic);
}

TEST_CASE("parse_bundle accepts the documented grammar") {
  const Space space({1, 2});
  const Bundle b = parse_bundle("O(1,-5) + 2*box(O(0), Om(1,2))", space);
  REQUIRE(b.summands().size() == 2);
  CHECK(b.summands()[0].atom == Atom::line(space, {1, -5}));
  CHECK(b.summands()[0].multiplicity == 1);
  CHECK(b.summands()[1].atom ==
        Atom(space, {FactorSheaf::line(0), FactorSheaf::diff(1, 2)}));
  CHECK(b.summands()[1].multiplicity == 2);
}

TEST_CASE("top exterior powers collapse while parsing") {
  const Space space({1, 2});
  const Bundle b = parse_bundle("box(O(0), Om(2,3))", space);
  REQUIRE(b.summands().size() == 1);
  CHECK(b.summands()[0].atom == Atom::line(space, {0, 0}));
  // the collapsed form computes the same cohomology as the differential
  CHECK(bundle_cohomology(b).h == bundle_cohomology(parse_bundle("O(0,0)", space)).h);
}

TEST_CASE("arity errors point at the closing parenthesis") {
  const Space space({1, 2});
  const ParseDiagnostic d = diag_of([&] { parse_bundle("O(1)", space); });
  CHECK(d.offset == 3);
  CHECK(d.semantic);

  const ParseDiagnostic too_many = diag_of([&] { parse_bundle("O(1,2,3)", space); });
  CHECK(too_many.offset == 7);
  CHECK(too_many.semantic);

  const ParseDiagnostic box_arity = diag_of([&] { parse_bundle("box(O(1))", space); });
  CHECK(box_arity.offset == 8);
  CHECK(box_arity.semantic);
}

TEST_CASE("range and multiplicity diagnostics") {
  const Space space({1, 2});
  const ParseDiagnostic p_too_big = diag_of([&] { parse_bundle("box(O(0), Om(3,1))", space); });
  CHECK(p_too_big.semantic);
  CHECK(p_too_big.offset == 13);

  const ParseDiagnostic zero_mult = diag_of([&] { parse_bundle("0*O(1,1)", space); });
  CHECK(zero_mult.semantic);
  CHECK(zero_mult.offset == 0);

  const ParseDiagnostic neg_power = diag_of([&] { parse_bundle("box(O(0), Om(-1,1))", space); });
  CHECK_FALSE(neg_power.semantic);

  const ParseDiagnostic empty = diag_of([&] { parse_bundle("", space); });
  CHECK(empty.offset == 0);
  CHECK_FALSE(empty.semantic);
  CHECK_FALSE(empty.expected.empty());

  const ParseDiagnostic unknown = diag_of([&] { parse_bundle("Q(1,1)", space); });
  CHECK(unknown.offset == 0);

  const ParseDiagnostic garbage = diag_of([&] { parse_bundle("O(1,1) O(0,0)", space); });
  CHECK(garbage.offset == 7);
}

TEST_CASE("diagnostic offsets stay inside the input") {
  const Space space({1, 2});
  for (const char* bad : {"", "O", "O(", "O(1", "O(1,", "O(1,2", "box(", "box(O(0),", "1*",
                          "O(1,2)+", "2 O(1,1)", "O(1,2) +"}) {
    const std::string input = bad;
    const ParseDiagnostic d = diag_of([&] { parse_bundle(input, space); });
    CHECK(d.offset <= input.size());
  }
}

TEST_CASE("canonical printing round-trips and merges") {
  const Space space({1, 2});
  const Bundle merged = parse_bundle("O(0,0) + O(0,0)", space);
  REQUIRE(merged.summands().size() == 1);
  CHECK(merged.summands()[0].multiplicity == 2);
  CHECK(bundle_to_string(merged) == "2*O(0,0)");

  // summands come back sorted by atom encoding
  const Bundle sorted = parse_bundle("box(O(0),Om(1,2)) + O(1,-5)", space);
  CHECK(bundle_to_string(sorted) == "O(1,-5) + box(O(0),Om(1,2))");

  oracle::Rng rng(313);
  for (int trial = 0; trial < 300; ++trial) {
    const Space s = oracle::random_space(rng);
    const Bundle b = canonical_bundle(oracle::random_bundle(rng, s, 4, 5));
    const std::string text = bundle_to_string(b);
    const Bundle reparsed = parse_bundle(text, s);
    REQUIRE(reparsed == b);
    REQUIRE(bundle_to_string(reparsed) == text);
  }
}

TEST_CASE("whitespace is insignificant") {
  const Space space({1, 2});
  CHECK(parse_bundle("  O( 1 , -5 )+2 * box( O(0),Om( 1, 2) )  ", space) ==
        parse_bundle("O(1,-5)+2*box(O(0),Om(1,2))", space));
}
