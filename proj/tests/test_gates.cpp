#include <cmath>

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "qls/gates.hpp"

using namespace qls;
using qls::testing::max_entrywise_diff;
using Catch::Matchers::WithinAbs;

namespace {

const double kC = std::sqrt(0.5);

}  // namespace

TEST_CASE("Split puts the Off state into an equal superposition") {
  const RegisterLayout layout = make_layout(1, 2);
  SparseState state = initial_state(layout);
  apply_switch(state, 0, SwitchKind::Split);
  REQUIRE(state.size() == 2);
  CHECK_THAT(state.amplitude({0, 0, 0}).real(), WithinAbs(kC, 1e-15));
  CHECK_THAT(state.amplitude({0, 0, 1}).real(), WithinAbs(kC, 1e-15));
}

TEST_CASE("Split is an involution") {
  const RegisterLayout layout = make_layout(1, 2);
  SparseState state = initial_state(layout);
  apply_switch(state, 0, SwitchKind::Split);
  apply_switch(state, 0, SwitchKind::Split);
  REQUIRE(state.size() == 1);  // the On component cancels to exact zero
  // The survivor is 2c^2 for c the double nearest 1/sqrt(2): unit only to
  // within an ulp or two.
  CHECK_THAT(state.amplitude({0, 0, 0}).real(), WithinAbs(1.0, 1e-15));
  CHECK(state.amplitude({0, 0, 0}).imag() == 0.0);
}

TEST_CASE("MergeMinus reproduces the sign-split state") {
  // Input: the post-writer state c|1,a1,Off> + c|0,a0,On>; output carries
  // the minus sign on (1, a1, On) only.
  const RegisterLayout layout = make_layout(1, 4);
  const std::uint64_t a0 = 5, a1 = 9;
  SparseState state(layout);
  state.set_amplitude({1, a1, 0}, kC);
  state.set_amplitude({0, a0, 1}, kC);
  apply_switch(state, 0, SwitchKind::MergeMinus);
  REQUIRE(state.size() == 4);
  CHECK_THAT(state.amplitude({0, a0, 0}).real(), WithinAbs(0.5, 1e-15));
  CHECK_THAT(state.amplitude({1, a1, 0}).real(), WithinAbs(0.5, 1e-15));
  CHECK_THAT(state.amplitude({0, a0, 1}).real(), WithinAbs(0.5, 1e-15));
  CHECK_THAT(state.amplitude({1, a1, 1}).real(), WithinAbs(-0.5, 1e-15));
}

TEST_CASE("MergeMinus squared is not the identity, but its adjoint undoes it") {
  const RegisterLayout layout = make_layout(1, 1);
  std::mt19937_64 rng(3);
  const SparseState start = qls::testing::random_state(rng, layout, 5);

  SparseState twice = start;
  apply_switch(twice, 0, SwitchKind::MergeMinus);
  apply_switch(twice, 0, SwitchKind::MergeMinus);
  CHECK(max_entrywise_diff(twice, start) > 0.1);

  SparseState round_trip = start;
  apply_switch(round_trip, 0, SwitchKind::MergeMinus);
  apply_switch(round_trip, 0, SwitchKind::MergeMinusDagger);
  CHECK(max_entrywise_diff(round_trip, start) < 1e-15);
}

TEST_CASE("every gate preserves the norm") {
  const RegisterLayout layout = make_layout(2, 2);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    SparseState state = qls::testing::random_state(rng, layout, 8);
    switch (trial % 4) {
      case 0:
        apply_switch(state, trial % 2, SwitchKind::MergeMinus);
        break;
      case 1:
        apply_xor_write(state, WriteTarget::Value, 3, Condition{1, true});
        break;
      case 2:
        apply_phase_flip(state, PairSet{{{0, 1}, {3, 2}}}, Condition{0, false});
        break;
      default:
        apply_index_hadamard(state, trial % 2);
        break;
    }
    CHECK_THAT(norm(state), WithinAbs(1.0, 1e-12));
  }
}

TEST_CASE("xor writes flip the addressed field on matching entries only") {
  const RegisterLayout layout = make_layout(1, 4);
  SparseState state(layout);
  state.set_amplitude({0, 0, 0}, kC);
  state.set_amplitude({0, 0, 1}, kC);

  apply_xor_write(state, WriteTarget::Index, 1, Condition{0, false});
  apply_xor_write(state, WriteTarget::Value, 9, Condition{0, false});
  CHECK_THAT(state.amplitude({1, 9, 0}).real(), WithinAbs(kC, 1e-15));
  CHECK_THAT(state.amplitude({0, 0, 1}).real(), WithinAbs(kC, 1e-15));

  // Unconditioned: everything moves.
  apply_xor_write(state, WriteTarget::Value, 2);
  CHECK_THAT(state.amplitude({1, 11, 0}).real(), WithinAbs(kC, 1e-15));
  CHECK_THAT(state.amplitude({0, 2, 1}).real(), WithinAbs(kC, 1e-15));
}

TEST_CASE("xor write with pattern zero is the identity") {
  const RegisterLayout layout = make_layout(2, 3);
  std::mt19937_64 rng(23);
  const SparseState start = qls::testing::random_state(rng, layout, 10);
  SparseState state = start;
  apply_xor_write(state, WriteTarget::Index, 0);
  CHECK(max_entrywise_diff(state, start) == 0.0);
}

TEST_CASE("xor write applied twice is the identity") {
  const RegisterLayout layout = make_layout(2, 3);
  std::mt19937_64 rng(29);
  const SparseState start = qls::testing::random_state(rng, layout, 10);
  SparseState state = start;
  apply_xor_write(state, WriteTarget::Value, 5, Condition{1, true});
  apply_xor_write(state, WriteTarget::Value, 5, Condition{1, true});
  CHECK(max_entrywise_diff(state, start) == 0.0);
}

TEST_CASE("xor write rejects out-of-range patterns and conditions") {
  const RegisterLayout layout = make_layout(1, 2);
  SparseState state = initial_state(layout);
  CHECK_THROWS_AS(apply_xor_write(state, WriteTarget::Index, 2), std::out_of_range);
  CHECK_THROWS_AS(apply_xor_write(state, WriteTarget::Value, 4), std::out_of_range);
  CHECK_THROWS_AS((apply_xor_write(state, WriteTarget::Value, 1, Condition{1, true})),
                  std::out_of_range);
}

TEST_CASE("phase flips negate exactly the listed pairs on the matching branch") {
  const RegisterLayout layout = make_layout(1, 4);
  const std::uint64_t a0 = 5, a1 = 9;
  SparseState state(layout);  // the sign-split state
  state.set_amplitude({0, a0, 0}, 0.5);
  state.set_amplitude({1, a1, 0}, 0.5);
  state.set_amplitude({0, a0, 1}, 0.5);
  state.set_amplitude({1, a1, 1}, -0.5);

  apply_phase_flip(state, PairSet{{{1, a1}}}, Condition{0, true});
  for (const auto& [key, amp] : state.entries()) {
    CHECK_THAT(amp.real(), WithinAbs(0.5, 1e-15));  // product form: all plus
  }
}

TEST_CASE("an empty pair set is the identity") {
  const RegisterLayout layout = make_layout(2, 2);
  std::mt19937_64 rng(31);
  const SparseState start = qls::testing::random_state(rng, layout, 10);
  SparseState state = start;
  apply_phase_flip(state, PairSet{});
  CHECK(max_entrywise_diff(state, start) == 0.0);
}

TEST_CASE("the diagonal flip acts as the rank-2 operator on its support") {
  // With flip pairs {(2, a2), (3, a3)}: |alpha> = (|2,a2> + |3,a3>)/sqrt2
  // is negated entirely, and any state orthogonal to the pairs is fixed.
  const RegisterLayout layout = make_layout(2, 3);
  const std::uint64_t a2 = 6, a3 = 1;
  const PairSet flip{{{2, a2}, {3, a3}}};

  SparseState beta(layout);
  beta.set_amplitude({2, a2, 0}, kC);
  beta.set_amplitude({3, a3, 0}, kC);
  SparseState flipped = beta;
  apply_phase_flip(flipped, flip);
  for (const auto& [key, amp] : flipped.entries()) {
    CHECK_THAT(std::abs(amp + beta.amplitude_at(key)), WithinAbs(0.0, 1e-15));
  }

  SparseState alpha(layout);
  alpha.set_amplitude({0, 3, 0}, kC);
  alpha.set_amplitude({1, 5, 0}, kC);
  SparseState fixed = alpha;
  apply_phase_flip(fixed, flip);
  CHECK(max_entrywise_diff(fixed, alpha) == 0.0);
}

TEST_CASE("phase flips are self-inverse and reject bad pairs") {
  const RegisterLayout layout = make_layout(1, 2);
  std::mt19937_64 rng(37);
  const SparseState start = qls::testing::random_state(rng, layout, 6);
  SparseState state = start;
  apply_phase_flip(state, PairSet{{{0, 1}}});
  apply_phase_flip(state, PairSet{{{0, 1}}});
  CHECK(max_entrywise_diff(state, start) == 0.0);

  CHECK_THROWS_AS((apply_phase_flip(state, PairSet{{{2, 0}}})), std::out_of_range);
  CHECK_THROWS_AS((apply_phase_flip(state, PairSet{{{0, 4}}})), std::out_of_range);
  CHECK_THROWS_AS((PairSet{{{0, 1}, {0, 1}}}), std::invalid_argument);
}

TEST_CASE("index rotations build the uniform index state") {
  const RegisterLayout layout = make_layout(2, 2);
  SparseState state = initial_state(layout);
  apply_index_hadamard(state, 0);
  apply_index_hadamard(state, 1);
  CHECK(max_entrywise_diff(state, uniform_index_state(layout)) < 1e-15);
}

TEST_CASE("index rotations are involutions") {
  const RegisterLayout layout = make_layout(2, 2);
  std::mt19937_64 rng(41);
  const SparseState start = qls::testing::random_state(rng, layout, 12);
  SparseState state = start;
  apply_index_hadamard(state, 1);
  apply_index_hadamard(state, 1);
  CHECK(max_entrywise_diff(state, start) < 1e-15);
  CHECK_THROWS_AS(apply_index_hadamard(state, 2), std::out_of_range);
}

TEST_CASE("switch levels are range checked") {
  const RegisterLayout layout = make_layout(1, 1);
  SparseState state = initial_state(layout);
  CHECK_THROWS_AS(apply_switch(state, 1, SwitchKind::Split), std::out_of_range);
  CHECK_THROWS_AS(apply_switch(state, -1, SwitchKind::Split), std::out_of_range);
}

TEST_CASE("PairSet lookups are exact") {
  const PairSet pairs{{{1, 9}, {3, 0}}};
  CHECK(pairs.contains(1, 9));
  CHECK(pairs.contains(3, 0));
  CHECK_FALSE(pairs.contains(9, 1));
  CHECK_FALSE(pairs.contains(0, 0));
  CHECK(pairs.size() == 2);
}
