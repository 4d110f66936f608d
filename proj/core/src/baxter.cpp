#include "tabseq/baxter.hpp"

#include "tabseq/error.hpp"

namespace tabseq {

BigInt baxter_number(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "Baxter numbers are indexed from 1");
  const BigInt den = binomial(n + 1, 1) * binomial(n + 1, 2);
  BigInt num = 0;
  for (int k = 1; k <= n; ++k) {
    num += binomial(n + 1, k - 1) * binomial(n + 1, k) * binomial(n + 1, k + 1);
  }
  if (num % den != 0) throw Error(ErrorCode::NonIntegerStep, "closed form did not divide");
  return num / den;
}

std::vector<BigInt> baxter_by_recurrence(int N) {
  if (N < 2) throw Error(ErrorCode::InvalidArgument, "need N >= 2");
  std::vector<BigInt> b(static_cast<size_t>(N) + 1);
  b[1] = 1;
  b[2] = 2;
  // the order-2 recurrence applies to the shifted sequence w_n = B_{n+1}:
  // 8(n+2)(n+1) w_n + (7n^2+49n+82) w_{n+1} = (n+6)(n+5) w_{n+2}
  for (int m = 3; m <= N; ++m) {
    const int n = m - 3;
    const BigInt num = 8 * BigInt(n + 2) * (n + 1) * b[static_cast<size_t>(m) - 2] +
                       BigInt(7 * n * n + 49 * n + 82) * b[static_cast<size_t>(m) - 1];
    const BigInt den = BigInt(n + 6) * (n + 5);
    if (num % den != 0) {
      throw Error(ErrorCode::NonIntegerStep, "recurrence step " + std::to_string(m) +
                                                 " is not integral");
    }
    b[static_cast<size_t>(m)] = num / den;
  }
  return std::vector<BigInt>(b.begin() + 1, b.end());
}

}  // namespace tabseq
