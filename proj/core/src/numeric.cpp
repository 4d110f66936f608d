#include "tabseq/numeric.hpp"

#include "tabseq/error.hpp"

namespace tabseq {

BigInt factorial(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "factorial of negative value");
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (int i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

BigInt catalan_number(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative Catalan index");
  return binomial(2 * n, n) / (n + 1);
}

}  // namespace tabseq
