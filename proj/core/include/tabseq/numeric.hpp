#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace tabseq {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(int n);
BigInt binomial(int n, int k);
BigInt catalan_number(int n);

}  // namespace tabseq
