#include <hilbkx/property_suite.hpp>

#include <gtest/gtest.h>

using namespace hilbkx;

namespace {

// Stores the mirrored slot with the same sign, i.e. negates the completed
// a_{ikj} of the first stored entry.
CupTensor negate_one_completion(const CupTensor& t) {
    auto entries = t.stored();
    if (entries.empty()) return t;
    const auto [slot, value] = *entries.begin();
    entries[{slot.i, slot.k, slot.j}] = value;
    return CupTensor::raw(t.p(), t.q(), entries);
}

}  // namespace

TEST(RandomCheck, PassesOnSmallRun) {
    RandomCheckConfig cfg;
    cfg.instances = 15;
    cfg.samples = 20;
    auto r = run_random_check(cfg);
    EXPECT_TRUE(r.passed()) << r.failure->invariant << ": " << r.failure->detail;
    EXPECT_EQ(r.instances_run, 15u);
    EXPECT_GT(r.checks, 15u * 20u);
}

TEST(RandomCheck, ZeroInstances) {
    RandomCheckConfig cfg;
    cfg.instances = 0;
    auto r = run_random_check(cfg);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.checks, 0u);
}

TEST(RandomCheck, InstancesAreReproducible) {
    RandomCheckConfig cfg;
    cfg.seed = 5;
    for (std::size_t n = 0; n < 10; ++n) {
        auto a = random_instance(cfg, n), b = random_instance(cfg, n);
        EXPECT_EQ(a.tensor, b.tensor);
        EXPECT_GE(a.tensor.p(), 1u);
        EXPECT_LE(a.tensor.p(), cfg.p_max);
        EXPECT_LE(a.tensor.q(), cfg.q_max);
    }
}

TEST(RandomCheck, CorruptedCompletionIsCaught) {
    RandomCheckConfig cfg;
    cfg.instances = 20;
    cfg.samples = 5;
    cfg.corrupt = negate_one_completion;
    auto r = run_random_check(cfg);
    ASSERT_FALSE(r.passed());
    EXPECT_EQ(r.failure->invariant, "antisymmetry");
    // Smallest index whose tensor has at least one stored entry.
    std::size_t first = 0;
    while (random_instance(cfg, first).tensor.stored().empty()) ++first;
    EXPECT_EQ(r.failure->instance, first);
    EXPECT_EQ(r.instances_run, first + 1);
}
