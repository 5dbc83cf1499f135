// Copyright 2026 The schemewalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include "schemewalk/errors.hpp"
#include "schemewalk/scheme_spec.hpp"

using namespace schemewalk;

namespace {

ErrorCode code_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return ErrorCode::UsageError;
}

}  // namespace

TEST_CASE("tokens") {
  const auto s4 = parse_graph_spec(R"({"kind":"group","group":"symmetric","n":4})");
  const auto* g = std::get_if<FromGroup>(&s4);
  REQUIRE(g);
  CHECK(g->group.family == GroupFamily::Symmetric);
  CHECK(g->group.n == 4);
  CHECK(g->generatingClass == 1);
  CHECK(intersection_array_of(parse_graph_spec("catalog:cycle:9")) == cycle_array(9));
  CHECK(intersection_array_of(parse_graph_spec("catalog:hamming:2,3")) == hamming_array(3, 2));
  CHECK(intersection_array_of(parse_graph_spec("srg:10,3,0,1")) == IntersectionArray{2, {3, 2}, {1, 1}});
  const auto d = parse_graph_spec("group:dihedral:7:2");
  CHECK(std::get<FromGroup>(d).generatingClass == 2);
}

TEST_CASE("json kinds") {
  CHECK(std::holds_alternative<FromIntersectionArray>(
      parse_graph_spec(R"({"kind":"intersection_array","d":1,"c_forward":[4],"b_backward":[1]})")));
  CHECK(std::holds_alternative<FromSrg>(parse_graph_spec(R"({"kind":"srg","n":16,"kappa":5,"lambda":0,"eta":2})")));
  const auto p = parse_graph_spec(R"({"kind":"product","base":{"kind":"catalog","name":"complete","params":[3]},"copies":4})");
  CHECK(std::get<Product>(p).baseOrder == 3);
  CHECK(std::get<Product>(p).copies == 4);
  CHECK(std::get<FromCatalog>(parse_graph_spec(R"({"kind":"catalog","name":"wells"})")).name == "wells");
}

TEST_CASE("schema errors carry a pointer") {
  auto message = [](const std::string& text) {
    try {
      parse_graph_spec(text);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::SchemaError);
      return std::string(e.what());
    }
    FAIL("expected SchemaError");
    return std::string();
  };
  CHECK(message(R"({"kind":"srg","n":16,"kappa":5,"lambda":0})").find("/eta") != std::string::npos);
  CHECK(message(R"({"kind":"group","group":"cyclic","n":5,"colour":1})").find("/colour") != std::string::npos);
  CHECK(message(R"({"kind":"product","base":{"kind":"catalog","name":"cycle","params":[5]},"copies":2})").find("/base") !=
        std::string::npos);
  CHECK(message(R"({"kind":"intersection_array","d":"2","c_forward":[3,2],"b_backward":[1,1]})").find("/d") !=
        std::string::npos);
  CHECK(message(R"({"kind":"pentagon"})").find("/kind") != std::string::npos);
  CHECK(message("[1,2]").find("/") != std::string::npos);
  CHECK(code_of([] { parse_graph_spec("{oops"); }) == ErrorCode::SchemaError);
  CHECK(code_of([] { parse_graph_spec("catalog:nothing"); }) == ErrorCode::UnknownCatalogName);
  CHECK(code_of([] { parse_graph_spec("/no/such/file.json"); }) == ErrorCode::SchemaError);
}

TEST_CASE("validators") {
  CHECK(code_of([] { validate_spec(FromSrg{{10, 3, 0, 2}}); }) == ErrorCode::InfeasibleParameters);
  CHECK(code_of([] { validate_spec(FromGroup{{GroupFamily::Cyclic, 2}, 1}); }) == ErrorCode::InvalidOrder);
  CHECK(code_of([] { validate_spec(FromIntersectionArray{{2, {5, 4}, {1, 3}}}); }) == ErrorCode::NonIntegerValency);
  CHECK(code_of([] { validate_spec(FromGroup{{GroupFamily::Symmetric, 4}, 9}); }) != ErrorCode::UsageError);
  CHECK(code_of([] { intersection_array_of(FromGroup{{GroupFamily::Symmetric, 4}}); }) == ErrorCode::EngineSpecMismatch);
}

TEST_CASE("group realizations") {
  const auto k5 = group_realization(FromCatalog{"complete", {5}});
  REQUIRE(k5);
  CHECK(k5->blocks.size() == 2);
  const auto h = group_realization(Product{3, 2});
  REQUIRE(h);
  CHECK(h->blocks.size() == 3);
  CHECK_FALSE(group_realization(FromCatalog{"petersen", {}}));
  CHECK(describe(FromCatalog{"cycle", {9}}).find("cycle") != std::string::npos);
}
