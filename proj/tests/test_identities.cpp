#include <gtest/gtest.h>

#include "biharm/identities.hpp"

using namespace biharm;

TEST(Identities, AllPass) {
  for (auto [m, ell] : {std::pair{2, 2}, {3, 2}, {3, 3}, {4, 2}, {5, 2}, {6, 3}}) {
    const auto rep = verify_identities(m, ell, 3);
    EXPECT_EQ(rep.checks.size(), 8u);
    for (const auto& c : rep.checks) EXPECT_TRUE(c.passed) << m << "," << ell << " " << c.name;
  }
}

TEST(Identities, RejectsBadInput) {
  EXPECT_THROW(verify_identities(2, 3), std::invalid_argument);
}
