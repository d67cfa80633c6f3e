#include <gtest/gtest.h>

#include "psct/json_io.hpp"

namespace psct {
namespace {

TEST(JsonIoTest, KFormEncoding) {
  const KForm f = KForm::monomial(4, {1, 2, 3}) + KForm::monomial(4, {2, 3, 4}, Scalar::fraction(-3, 2));
  const Json j = to_json(f);
  EXPECT_EQ(j.dump(), R"({"degree":3,"dim":4,"terms":[{"coeff":"1","idx":[1,2,3]},{"coeff":"-3/2","idx":[2,3,4]}]})");
  EXPECT_EQ(kform_from_json(j), f);
}

TEST(JsonIoTest, KFormRejectsMalformedInput) {
  EXPECT_THROW(kform_from_json(Json::parse(R"({"dim":3,"degree":2,"terms":[{"idx":[2,1],"coeff":"1"}]})")),
               DomainError);
  EXPECT_THROW(kform_from_json(Json::parse(R"({"dim":3,"degree":2,"terms":[{"idx":[1,4],"coeff":"1"}]})")),
               DimensionError);
  EXPECT_THROW(kform_from_json(Json::parse(R"({"dim":3,"degree":2,"terms":[{"idx":[1],"coeff":"1"}]})")),
               DomainError);
  EXPECT_THROW(kform_from_json(Json::parse(R"({"dim":3,"terms":[]})")), DomainError);
  EXPECT_THROW(kform_from_json(Json::parse(R"({"dim":3,"degree":1,"terms":[{"idx":[1],"coeff":1.5}]})")),
               DomainError);
  EXPECT_THROW(kform_from_json(Json::parse(
                   R"({"dim":3,"degree":1,"terms":[{"idx":[1],"coeff":"1"},{"idx":[1],"coeff":"2"}]})")),
               DomainError);
}

TEST(JsonIoTest, SurdValuesRoundTrip) {
  const Scalar s = Scalar::fraction(1, 2) + Scalar::sqrt(Scalar(2)) * Scalar::fraction(-3, 4);
  EXPECT_EQ(scalar_from_json(to_json(s)), s);
  EXPECT_EQ(scalar_from_json(Json(5)), Scalar(5));
}

TEST(JsonIoTest, LieAlgebraRoundTrip) {
  for (const char* name : {"su(2)", "so(5)", "su(3) + R"}) {
    const MetricLieAlgebra L = matrix_model(name);
    const MetricLieAlgebra back = lie_algebra_from_json(Json::parse(to_json(L).dump()));
    EXPECT_EQ(back.dim(), L.dim());
    EXPECT_EQ(canonical_three_form(back), canonical_three_form(L)) << name;
  }
  EXPECT_EQ(lie_algebra_from_json(Json("su(2)")).dim(), 3);
}

TEST(JsonIoTest, AlmostHermitianRoundTrip) {
  const AlmostHermitian J = AlmostHermitian::standard(4);
  const Json j = to_json(J);
  EXPECT_EQ(almost_hermitian_from_json(j).J(), J.J());
  EXPECT_EQ(kform_from_json(j.at("omega")), fundamental_form(J));
  EXPECT_THROW(almost_hermitian_from_json(Json::parse(R"([["0","1"],["1","0"]])")), DomainError);
}

TEST(JsonIoTest, SubalgebraInput) {
  const Json j = Json::parse(R"({"dim":3,"generators":[
      {"dim":3,"degree":2,"terms":[{"idx":[1,2],"coeff":"1"}]},
      [["0","0","-1"],["0","0","0"],["1","0","0"]]]})");
  SubalgebraBasis h = subalgebra_from_json(j);
  EXPECT_EQ(h.size(), 2u);
  EXPECT_FALSE(h.closed);
}

TEST(JsonIoTest, ReportsReparse) {
  const MetricLieAlgebra L = matrix_model("su(3)");
  const TorsionDatum t(canonical_three_form(L));
  for (const Json& j : {to_json(psct_certificate(t)), to_json(psct_factorization(t)),
                        to_json(root_space_decomposition(L, default_cartan(L))), to_json(positive_roots('B', 2)),
                        to_json(fixture("vol3"))}) {
    EXPECT_EQ(Json::parse(j.dump()), j);
  }
  const Json c = to_json(psct_certificate(t));
  EXPECT_TRUE(c.at("passes").get<bool>());
  EXPECT_EQ(c.at("dims").at("stab").get<int>(), 8);
}

}  // namespace
}  // namespace psct
