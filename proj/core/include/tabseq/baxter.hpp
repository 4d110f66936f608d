#pragma once

#include <vector>

#include "tabseq/numeric.hpp"

namespace tabseq {

// n-th Baxter number by the closed-form binomial sum (n >= 1).
BigInt baxter_number(int n);

// B_1..B_N from the order-2 recurrence with seeds B_1=1, B_2=2; every
// division step is asserted exact.
std::vector<BigInt> baxter_by_recurrence(int N);

}  // namespace tabseq
