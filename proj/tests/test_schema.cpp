#include "plitho/schema.hpp"

#include <stdexcept>

#include "doctest.h"

using namespace plitho;

namespace {

AttributeSchema color() {
  return {"color",
          {"green", "yellow", "red"},
          0,
          {0.0, 1.0 / 3.0, 2.0 / 3.0}};
}

AttributeSchema size_five() {
  return {"size",
          {"small", "medium", "big", "bigger", "very big"},
          0,
          {0.0, 0.5, 0.75, 0.86, 1.0}};
}

// The seven-value refinement of the size attribute.
AttributeSchema size_seven() {
  return {"size",
          {"small", "above small", "less medium", "medium", "big", "bigger",
           "very big"},
          0,
          {0.0, 0.14, 0.25, 0.5, 0.75, 0.86, 1.0}};
}

}  // namespace

TEST_CASE("well formed attribute passes validation") {
  CHECK(validate(color()).empty());
  CHECK(validate(size_five()).empty());
}

TEST_CASE("attribute violations are reported, not thrown") {
  AttributeSchema a = color();
  a.contradictions[0] = 0.2;
  auto msgs = validate(a);
  REQUIRE(msgs.size() == 1);
  CHECK(msgs[0].find("dominant") != std::string::npos);

  a = color();
  a.contradictions[2] = 1.5;
  CHECK(validate(a).size() == 1);

  a = color();
  a.values[2] = "green";
  CHECK(!validate(a).empty());

  a = color();
  a.dominant_index = 9;
  CHECK(!validate(a).empty());

  a = color();
  a.contradictions.pop_back();
  CHECK(!validate(a).empty());

  CHECK(!validate(AttributeSchema{"empty", {}, 0, {}}).empty());
}

TEST_CASE("contradiction matrix validation") {
  ContradictionMatrix m{3, {0.0, 0.5, 1.0,  //
                            0.5, 0.0, 0.5,  //
                            1.0, 0.5, 0.0}};
  CHECK(validate(m).empty());

  m.at(1, 1) = 0.1;  // self-contradiction
  CHECK(validate(m).size() == 1);
  m.at(1, 1) = 0.0;

  m.at(0, 2) = 0.9;  // breaks symmetry
  CHECK(validate(m).size() == 1);

  ContradictionMatrix wrong{2, {0.0}};
  CHECK(!validate(wrong).empty());
}

TEST_CASE("sortedness is computed from the data") {
  CHECK(color().sorted_by_contradiction());
  AttributeSchema a = color();
  std::swap(a.contradictions[1], a.contradictions[2]);
  CHECK(!a.sorted_by_contradiction());
}

TEST_CASE("joint schema flat positions") {
  MultiAttributeSchema joint{
      "appearance", {color(), {"height", {"tall", "medium"}, 0, {0.0, 0.5}}}};
  CHECK(validate(joint).empty());
  CHECK(joint.value_count() == 5);
  CHECK(joint.tuple_cardinality() == 6);
  CHECK(joint.locate(0) == std::pair<std::size_t, std::size_t>{0, 0});
  CHECK(joint.locate(3) == std::pair<std::size_t, std::size_t>{1, 0});
  CHECK(joint.contradiction_at(4) == 0.5);
  CHECK(joint.value_label(2) == "red");
  CHECK(joint.attribute_name(4) == "height");
  CHECK_THROWS_AS(joint.locate(5), std::out_of_range);
  CHECK(split(joint).size() == 2);
  CHECK(split(joint)[1].name == "height");
}

TEST_CASE("joint schema violations") {
  CHECK(!validate(MultiAttributeSchema{"empty", {}}).empty());
  MultiAttributeSchema dup{"d", {color(), color()}};
  CHECK(!validate(dup).empty());
  MultiAttributeSchema bad{"b", {color()}};
  bad.components[0].contradictions[0] = 0.7;
  CHECK(!validate(bad).empty());
}

TEST_CASE("evenly spread contradictions") {
  CHECK(default_contradictions(1) == std::vector<double>{0.0});
  CHECK(default_contradictions(2) == std::vector<double>{0.0, 1.0});
  const auto c4 = default_contradictions(4);
  REQUIRE(c4.size() == 4);
  CHECK(c4[0] == 0.0);
  CHECK(c4[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(c4[2] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(c4[3] == 1.0);
  CHECK_THROWS_AS(default_contradictions(0), std::invalid_argument);
}

TEST_CASE("canonical schemas") {
  const auto crisp = canonical_schema(CanonicalKind::Crisp);
  CHECK(crisp.values ==
        std::vector<std::string>{"membership", "nonmembership"});
  CHECK(crisp.contradictions == std::vector<double>{0.0, 1.0});
  CHECK(crisp.dominant_index == 0);

  const auto fz = canonical_schema(CanonicalKind::Fuzzy);
  CHECK(fz.values == std::vector<std::string>{"membership"});
  CHECK(fz.contradictions == std::vector<double>{0.0});

  const auto paired = canonical_schema(CanonicalKind::IntuitionisticFuzzy);
  CHECK(paired.contradictions == std::vector<double>{0.0, 1.0});

  const auto ns = canonical_schema(CanonicalKind::Neutrosophic);
  CHECK(ns.values == std::vector<std::string>{"membership", "indeterminacy",
                                              "nonmembership"});
  CHECK(ns.contradictions == std::vector<double>{0.0, 0.5, 1.0});

  for (auto k : {CanonicalKind::Crisp, CanonicalKind::Fuzzy,
                 CanonicalKind::IntuitionisticFuzzy,
                 CanonicalKind::Neutrosophic})
    CHECK(validate(canonical_schema(k)).empty());
}

TEST_CASE("split index counts the conjunctive range") {
  AttributeSchema weight{"weight",
                         {"w1", "w2", "w3", "w4"},
                         0,
                         {0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0}};
  CHECK(split_index(weight) == 2);
  CHECK(split_index(canonical_schema(CanonicalKind::Fuzzy)) == 1);
  CHECK(split_index(canonical_schema(CanonicalKind::Neutrosophic)) == 1);

  AttributeSchema unsorted = weight;
  std::swap(unsorted.contradictions[1], unsorted.contradictions[2]);
  CHECK_THROWS_AS(split_index(unsorted), std::invalid_argument);
}

TEST_CASE("negating a value flips its contradiction") {
  const auto s = size_five();

  SUBCASE("lands on an existing value") {
    const RefinedValue rv = negate_value(s, 0);  // small -> 1
    CHECK(rv.placement == RefinedValue::Placement::Coincides);
    CHECK(rv.label == "very big");
    CHECK(rv.contradiction == 1.0);
    CHECK(rv.index == 4);

    const RefinedValue self = negate_value(s, 1);  // medium -> 0.5
    CHECK(self.placement == RefinedValue::Placement::Coincides);
    CHECK(self.label == "medium");
    CHECK(self.index == 1);
  }

  SUBCASE("falls between two values") {
    const RefinedValue rv = negate_value(s, 2);  // big -> 0.25
    CHECK(rv.placement == RefinedValue::Placement::Between);
    CHECK(rv.label == "anti(big)");
    CHECK(rv.contradiction == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(rv.index == 0);  // between small (0) and medium (0.5)

    const RefinedValue rb = negate_value(s, 3);  // bigger -> 0.14
    CHECK(rb.placement == RefinedValue::Placement::Between);
    CHECK(rb.label == "anti(bigger)");
    CHECK(rb.index == 0);
  }

  SUBCASE("on the refined attribute every opposite coincides") {
    const auto s7 = size_seven();
    const RefinedValue rv = negate_value(s7, 4);  // big (0.75) -> 0.25
    CHECK(rv.placement == RefinedValue::Placement::Coincides);
    CHECK(rv.label == "less medium");
    CHECK(rv.index == 2);
  }

  SUBCASE("opposite outside the attribute span is an error") {
    AttributeSchema narrow{"n", {"v1", "v2"}, 0, {0.0, 1.0 / 3.0}};
    CHECK_THROWS_AS(negate_value(narrow, 0), std::invalid_argument);
    // 1 - 1/3 = 2/3 is past the last contradiction as well
    CHECK_THROWS_AS(negate_value(narrow, 1), std::invalid_argument);

    AttributeSchema wide{"w", {"v1", "v2", "v3"}, 0, {0.0, 0.4, 0.7}};
    const RefinedValue ok = negate_value(wide, 2);  // 0.3 fits inside
    CHECK(ok.placement == RefinedValue::Placement::Between);
    CHECK(ok.index == 0);
    // 1 - 0 = 1 is past the last contradiction 0.7
    CHECK_THROWS_AS(negate_value(wide, 0), std::invalid_argument);
  }

  SUBCASE("demands a valid sorted attribute and a real index") {
    AttributeSchema bad = s;
    std::swap(bad.contradictions[1], bad.contradictions[3]);
    CHECK_THROWS_AS(negate_value(bad, 0), std::invalid_argument);
    AttributeSchema invalid = s;
    invalid.contradictions[0] = 0.3;
    CHECK_THROWS_AS(negate_value(invalid, 0), std::invalid_argument);
    CHECK_THROWS_AS(negate_value(s, 5), std::out_of_range);
  }
}
