#include <gtest/gtest.h>

#include <map>

#include "fanobott/ops.hpp"
#include "support/fixtures.hpp"

using namespace fanobott;

namespace {

std::vector<int> code_partition(int d, Mode mode) {
  std::map<CanonicalCode, int> ids;
  std::vector<int> out;
  for (const auto& a : enumerate(d)) {
    const auto code = canonical_code(from_matrix(a), mode);
    out.push_back(ids.emplace(code, static_cast<int>(ids.size())).first->second);
  }
  return out;
}

}  // namespace

TEST(Op2, SixVertexFixtures) {
  EXPECT_EQ(op2(fixtures::six(), 3).entries(), fixtures::six_op2_3());
  EXPECT_EQ(op2(fixtures::six(), 5).entries(), fixtures::six_op2_5());
}

TEST(Op2, LeafWithZeroColumnIsFixed) {
  const auto a = fixtures::six();
  ASSERT_TRUE(a.column_is_zero(1));
  EXPECT_EQ(op2(a, 1), a);
  EXPECT_THROW(op2(a, 7), std::out_of_range);
}

TEST(Op3, SixVertexFixtures) {
  EXPECT_EQ(op3(fixtures::six(), 3, 6).entries(), fixtures::six_op3_3_6());
  EXPECT_EQ(op3(fixtures::six(), 5, 6).entries(), fixtures::six_op3_5_6());
}

TEST(Op3, TwoByTwoInvolution) {
  const auto a = fixtures::fb(2, {{1, 2, 1}});
  const auto b = op3(a, 1, 2);
  EXPECT_EQ(b(1, 2), -1);
  EXPECT_EQ(op3(b, 1, 2), a);
}

TEST(Op3, PreconditionFailures) {
  const auto a = fixtures::six();
  try {
    op3(a, 1, 3);
    FAIL();
  } catch (const Op3PreconditionFailed& e) {
    EXPECT_EQ(e.k(), 1);
    EXPECT_EQ(e.l(), 3);
    EXPECT_NE(std::string(e.what()).find("row 3 is not zero"), std::string::npos);
  }
  try {
    op3(a, 2, 6);
    FAIL();
  } catch (const Op3PreconditionFailed& e) {
    EXPECT_NE(std::string(e.what()).find("row 2 is not"), std::string::npos);
  }
  EXPECT_FALSE(op3_applicable(a, 6, 6));
  EXPECT_TRUE(op3_applicable(a, 5, 6));
}

TEST(Op1, IdentityAndOrderBreaking) {
  const auto a = fixtures::six();
  EXPECT_EQ(op1(a.entries(), identity_permutation(6)), a.entries());
  const IntMatrix flipped = op1(fixtures::fb(2, {{1, 2, 1}}).entries(), {2, 1});
  EXPECT_EQ(flipped(2, 1), 1);
  EXPECT_THROW(validate(flipped), InvalidMatrix);
  EXPECT_THROW(op1(a.entries(), {1, 1, 2, 3, 4, 5}), std::invalid_argument);
}

TEST(Replay, EmptySequence) {
  EXPECT_EQ(replay(fixtures::six(), {}), fixtures::six());
}

TEST(Replay, SevenVertexPrefix) {
  const std::vector<OpStep> steps{Op1{{2, 1, 3, 4, 5, 6, 7}}, Op2{6}};
  EXPECT_EQ(replay(fixtures::seven_m(), steps), fixtures::seven_m2());
}

TEST(Replay, ReportsFailingStep) {
  const std::vector<OpStep> steps{Op2{3}, Op3{1, 3}};
  try {
    replay(fixtures::six(), steps);
    FAIL();
  } catch (const StepFailed& e) {
    EXPECT_EQ(e.index(), 1u);
  }
  try {
    replay(fixtures::fb(2, {{1, 2, 1}}), {Op1{{2, 1}}});
    FAIL();
  } catch (const StepFailed& e) {
    EXPECT_EQ(e.index(), 0u);
  }
}

TEST(Ops, ClosureInvolutionAndForestEffect) {
  for (int d = 1; d <= 4; ++d)
    for_each_matrix(d, [&](const FanoBottMatrix& a) {
      const SignedRootedForest t = from_matrix(a);
      for (int k = 1; k <= d; ++k) {
        const FanoBottMatrix b = op2(a, k);  // validates or throws
        EXPECT_EQ(op2(b, k), a);
        EXPECT_EQ(from_matrix(b), flip_child_signs(t, k));
        for (int l = 1; l <= d; ++l) {
          const bool root_child = t.is_root(l) && t.parent(k) == l;
          EXPECT_EQ(op3_applicable(a, k, l), root_child);
          if (!root_child) continue;
          const FanoBottMatrix c = op3(a, k, l);
          EXPECT_EQ(op3(c, k, l), a);
          EXPECT_EQ(from_matrix(c), flip_edge_sign(t, k));
        }
      }
    });
}

TEST(Ops, InverseStepUndoes) {
  for_each_matrix(4, [](const FanoBottMatrix& a) {
    for (int k = 1; k <= 4; ++k) EXPECT_EQ(apply_step(apply_step(a, Op2{k}), inverse(OpStep{Op2{k}})), a);
  });
  const Permutation p{3, 1, 2};
  EXPECT_EQ(std::get<Op1>(inverse(OpStep{Op1{p}})).perm, (Permutation{2, 3, 1}));
}

TEST(Ops, DiffeoCodesInvariantUnderSingleOperations) {
  for (int d = 1; d <= 4; ++d) {
    std::vector<Permutation> perms;
    Permutation p = identity_permutation(d);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    for_each_matrix(d, [&](const FanoBottMatrix& a) {
      const auto t = from_matrix(a);
      const auto diffeo = canonical_code(t, Mode::Diffeo);
      const auto variety = canonical_code(t, Mode::Variety);
      for (const auto& perm : perms) {
        const IntMatrix m = op1(a.entries(), perm);
        if (check(m)) continue;
        EXPECT_EQ(canonical_code(from_matrix(validate(m)), Mode::Diffeo), diffeo);
        EXPECT_EQ(canonical_code(from_matrix(validate(m)), Mode::Variety), variety);
      }
      for (int k = 1; k <= d; ++k) {
        EXPECT_EQ(canonical_code(from_matrix(op2(a, k)), Mode::Diffeo), diffeo);
        EXPECT_EQ(canonical_code(from_matrix(op2(a, k)), Mode::Variety), variety);
        for (int l = 1; l <= d; ++l)
          if (op3_applicable(a, k, l))
            EXPECT_EQ(canonical_code(from_matrix(op3(a, k, l)), Mode::Diffeo), diffeo);
      }
    });
  }
}

TEST(Closure, SmallDimensions) {
  EXPECT_EQ(bfs_closure_classes(1).class_count, 1);
  const auto two = bfs_closure_classes(2);
  EXPECT_EQ(two.class_count, 2);
  EXPECT_EQ(two.class_of, (std::vector<int>{0, 1, 1}));
  EXPECT_THROW(bfs_closure_classes(6), std::invalid_argument);
}

TEST(Closure, MatchesDiffeoCodes) {
  for (int d = 1; d <= 4; ++d) {
    const auto part = bfs_closure_classes(d);
    EXPECT_TRUE(same_partition(part.class_of, code_partition(d, Mode::Diffeo))) << "d=" << d;
  }
}

TEST(Closure, WithoutRootFlipsMatchesVarietyCodes) {
  for (int d = 1; d <= 4; ++d) {
    const auto part = bfs_closure_classes(d, {true, true, false});
    EXPECT_TRUE(same_partition(part.class_of, code_partition(d, Mode::Variety))) << "d=" << d;
  }
}

TEST(SamePartition, DetectsRelabeling) {
  EXPECT_TRUE(same_partition({0, 0, 1}, {5, 5, 2}));
  EXPECT_FALSE(same_partition({0, 0, 1}, {5, 2, 2}));
  EXPECT_FALSE(same_partition({0, 1}, {0, 0}));
  EXPECT_FALSE(same_partition({0}, {0, 1}));
}

TEST(Witness, SevenVertexPair) {
  const auto w = find_witness(fixtures::seven_m(), fixtures::seven_m1());
  ASSERT_TRUE(w);
  const std::vector<OpStep> expected{Op1{{2, 1, 3, 4, 5, 6, 7}}, Op2{6}, Op3{6, 7}};
  EXPECT_EQ(w->steps, expected);
  EXPECT_EQ(replay(fixtures::seven_m(), w->steps), fixtures::seven_m1());
  EXPECT_EQ(w->source_sha.size(), 64u);
  EXPECT_FALSE(find_witness(fixtures::seven_m(), fixtures::seven_m1(), Mode::Variety));
}

TEST(Witness, SameMatrixNeedsNoSteps) {
  const auto w = find_witness(fixtures::six(), fixtures::six());
  ASSERT_TRUE(w);
  EXPECT_TRUE(w->steps.empty());
  EXPECT_EQ(w->source_sha, w->target_sha);
}

TEST(Witness, Errors) {
  EXPECT_THROW(find_witness(fixtures::six(), fixtures::tree5()), DimensionMismatch);
  EXPECT_THROW(find_witness(fixtures::six(), fixtures::six(), Mode::RootedIso), std::invalid_argument);
}

TEST(Witness, ExistsExactlyForClosurePairs) {
  for (int d = 1; d <= 4; ++d) {
    const auto part = bfs_closure_classes(d);
    const auto variety = bfs_closure_classes(d, {true, true, false});
    const auto& s = part.states;
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = 0; j < s.size(); ++j) {
        const auto w = find_witness(s[i], s[j]);
        ASSERT_EQ(w.has_value(), part.class_of[i] == part.class_of[j]);
        if (w) EXPECT_EQ(replay(s[i], w->steps), s[j]);
        const auto wv = find_witness(s[i], s[j], Mode::Variety);
        ASSERT_EQ(wv.has_value(), variety.class_of[i] == variety.class_of[j]);
        if (wv) {
          EXPECT_EQ(replay(s[i], wv->steps), s[j]);
          for (const auto& step : wv->steps) EXPECT_FALSE(std::holds_alternative<Op3>(step));
        }
      }
  }
}
