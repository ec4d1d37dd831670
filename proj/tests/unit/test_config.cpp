#include <gtest/gtest.h>

#include "cdyn/config.hpp"
#include "cdyn/error.hpp"

using namespace cdyn;

namespace {

std::string swap_with(const std::string& extra) {
  return R"({"group": {"factors": [2]}, "dim": 2, "action": {"kind": "cyclic-shift"},
             "algebra": {"kind": "full"})" +
         extra + "}";
}

}  // namespace

TEST(Config, Kinds) {
  const SystemConfig t = parse_config(
      R"({"group": {"factors": [3]}, "dim": 2, "action": {"kind": "trivial"}, "algebra": {"kind": "full"}})");
  EXPECT_EQ(t.system.order(), 3u);
  EXPECT_EQ(t.system.algebra().dim(), 4u);
  EXPECT_DOUBLE_EQ(t.system.tol(), 1e-9);

  const SystemConfig s = parse_config(swap_with(R"(, "tol": 1e-8)"));
  EXPECT_EQ(s.system.unitary(1)(1, 0), cplx(1.0));
  EXPECT_DOUBLE_EQ(s.system.tol(), 1e-8);

  const SystemConfig c = parse_config(R"({"group": {"factors": [2, 3]}, "dim": 2,
      "action": {"kind": "diagonal-characters", "data": [[0, 0], [1, 2]]}, "algebra": {"kind": "diagonal"}})");
  EXPECT_EQ(c.system.algebra().dim(), 2u);
  const std::size_t t1 = c.system.group().index_of(GroupElement{{1, 1}});
  EXPECT_NEAR(std::abs(c.system.unitary(t1)(1, 1) - c.system.group().pairing(DualElement{{1, 2}}, GroupElement{{1, 1}})),
              0.0, 1e-15);

  // Explicit generator of order 4: u_t = g^t.
  const SystemConfig e = parse_config(R"({"group": {"factors": [4]}, "dim": 2,
      "action": {"kind": "explicit", "data": [[[[0, 0], [1, 0]], [[-1, 0], [0, 0]]]]},
      "algebra": {"kind": "diagonal"}})");
  EXPECT_EQ(e.system.unitary(2)(0, 0), cplx(-1.0));
}

TEST(Config, ExplicitAlgebraAndElements) {
  const SystemConfig c = parse_config(R"({"group": {"factors": [2]}, "dim": 2, "action": {"kind": "trivial"},
      "algebra": {"kind": "explicit", "basis": [[[[1, 0], [0, 0]], [[0, 0], [0, 0]]], [[[0, 0], [0, 0]], [[0, 0], [1, 0]]]]},
      "elements": {"p": [[[0, 0], [0, 0]], [[0, 0], [0, 0]]]}})");
  EXPECT_EQ(c.system.algebra().dim(), 2u);
  ASSERT_EQ(c.elements.count("p"), 1u);

  const SystemConfig s = parse_config(swap_with(R"(, "elements": {"a": [[[1, 0], [0, 2]], [[0, -1], [3, 0]]]})"));
  EXPECT_EQ(s.elements.at("a")(0, 1), cplx(0.0, 2.0));
  EXPECT_EQ(s.elements.at("a")(1, 0), cplx(0.0, -1.0));
}

TEST(Config, StrictErrors) {
  const char* bad[] = {
      "{",
      "[]",
      R"({"group": {"factors": [2]}, "dim": 2, "action": {"kind": "cyclic-shift"}, "algebra": {"kind": "full"}, "extra": 1})",
      R"({"group": {"factors": [2], "name": "x"}, "dim": 2, "action": {"kind": "cyclic-shift"}, "algebra": {"kind": "full"}})",
      R"({"group": {"factors": [2]}, "action": {"kind": "cyclic-shift"}, "algebra": {"kind": "full"}})",
      R"({"group": {"factors": [2]}, "dim": 2, "action": {"kind": "rotation"}, "algebra": {"kind": "full"}})",
      R"({"group": {"factors": [2]}, "dim": 2, "action": {"kind": "cyclic-shift"}, "algebra": {"kind": "sparse"}})",
      R"({"group": {"factors": [3]}, "dim": 2, "action": {"kind": "cyclic-shift"}, "algebra": {"kind": "full"}})",
      R"({"group": {"factors": [2]}, "dim": 2, "action": {"kind": "trivial", "data": [1]}, "algebra": {"kind": "full"}})",
      R"({"group": {"factors": [2]}, "dim": 2, "action": {"kind": "explicit"}, "algebra": {"kind": "full"}})",
      R"({"group": {"factors": [2]}, "dim": 2, "action": {"kind": "trivial"}, "algebra": {"kind": "explicit"}})",
      R"({"group": {"factors": [2]}, "dim": 2, "action": {"kind": "trivial"}, "algebra": {"kind": "full", "basis": []}})",
      R"({"group": {"factors": [0]}, "dim": 2, "action": {"kind": "trivial"}, "algebra": {"kind": "full"}})",
      R"({"group": {"factors": [2]}, "dim": 2.5, "action": {"kind": "trivial"}, "algebra": {"kind": "full"}})",
      R"({"group": {"factors": [2]}, "dim": 2, "action": {"kind": "diagonal-characters", "data": [[0], [2]]}, "algebra": {"kind": "full"}})",
      R"({"group": {"factors": [2]}, "dim": 2, "action": {"kind": "explicit", "data": [[[[2, 0], [0, 0]], [[0, 0], [1, 0]]]]}, "algebra": {"kind": "full"}})",
  };
  // E11 alone acts degenerately on C^2.
  EXPECT_THROW(parse_config(R"({"group": {"factors": [2]}, "dim": 2, "action": {"kind": "trivial"},
      "algebra": {"kind": "explicit", "basis": [[[[1, 0], [0, 0]], [[0, 0], [0, 0]]]]}})"),
               ConfigError);
  for (const char* text : bad) EXPECT_THROW(parse_config(text), ConfigError) << text;

  EXPECT_THROW(parse_config(swap_with(R"(, "elements": {"a": [[[1, 0]], [[0, 0]]]})")), ConfigError);
  EXPECT_THROW(parse_config(swap_with(R"(, "elements": {"a": [[[1, 0], [0]], [[0, 0], [0, 0]]]})")), ConfigError);
  EXPECT_THROW(parse_config(swap_with(R"(, "tol": "small")")), ConfigError);
  // E12 is not in the diagonal algebra.
  EXPECT_THROW(parse_config(R"({"group": {"factors": [2]}, "dim": 2, "action": {"kind": "trivial"},
      "algebra": {"kind": "diagonal"}, "elements": {"a": [[[0, 0], [1, 0]], [[0, 0], [0, 0]]]}})"),
               ConfigError);
  EXPECT_THROW(load_config("/nonexistent/config.json"), ConfigError);
}
