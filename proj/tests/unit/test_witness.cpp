#include <doctest.h>

#include "growthlab/witness.hpp"

using namespace growthlab;

TEST_CASE("finite linear group bounds") {
  CHECK(finite_linear_group_bound(1) == 2);
  CHECK(finite_linear_group_bound(3) == 48);
  CHECK(finite_linear_group_bound(5) == 3840);
  CHECK(finite_linear_group_bound(2) == 24);
  CHECK(finite_linear_group_bound(4) == 40320);
}

TEST_CASE("the Z x Z/64 witness passes") {
  const auto r = verify_witness(example_witness("zxz64"));
  CHECK(r.ok());
  CHECK(r.failing().empty());
  CHECK(r.at("i").status == CheckStatus::Pass);
  CHECK(r.at("ix").status == CheckStatus::Pass);
  CHECK_FALSE(r.samples.empty());
}

TEST_CASE("single-field corruptions break one conclusion each") {
  const auto base = example_witness("zxz64");
  CHECK(verify_witness(corrupt_witness(base, "eta")).failing() == std::vector<std::string>{"i"});
  CHECK(verify_witness(corrupt_witness(base, "scale")).failing() == std::vector<std::string>{"scales"});
  CHECK(verify_witness(corrupt_witness(base, "dim-constant")).failing() == std::vector<std::string>{"xii"});
  CHECK_THROWS(corrupt_witness(base, "nonsense"));
  CHECK_THROWS(example_witness("nonsense"));
}

TEST_CASE("witness structure is validated") {
  auto w = example_witness("zxz64");
  w.scales.pop_back();
  CHECK(verify_witness(w).failing() == std::vector<std::string>{"structure"});
  w.group = nullptr;
  CHECK_THROWS_AS(verify_witness(w), PreconditionError);
}
