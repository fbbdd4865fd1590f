#include "leafine/fib_trees.hpp"

namespace leafine {

TopTree leaf_fibonacci(unsigned n) {
  TopTree prev2 = TopTree::leaf();
  if (n == 0) return prev2;
  TopTree prev1 = TopTree::branch({TopTree::leaf(), TopTree::leaf()});
  for (unsigned k = 2; k <= n; ++k) {
    TopTree cur = TopTree::branch({prev1, prev2});
    prev2 = std::move(prev1);
    prev1 = std::move(cur);
  }
  return prev1;
}

TopTree knuth_fibonacci(unsigned order) {
  TopTree prev2 = TopTree::leaf();  // order 0
  if (order == 0) return prev2;
  TopTree prev1 = TopTree::leaf();  // order 1
  for (unsigned k = 2; k <= order; ++k) {
    TopTree cur = TopTree::branch({prev1, prev2});
    prev2 = std::move(prev1);
    prev1 = std::move(cur);
  }
  return prev1;
}

BigCount fibonacci(unsigned long n) {
  // Fast doubling: F(2k) = F(k) (2 F(k+1) - F(k)),
  //                F(2k+1) = F(k)^2 + F(k+1)^2.
  BigCount a = 0, b = 1;  // F(0), F(1)
  if (n == 0) return a;
  int bit = 63;
  while (((n >> bit) & 1) == 0) --bit;
  for (; bit >= 0; --bit) {
    BigCount c = a * (2 * b - a);
    BigCount d = a * a + b * b;
    if ((n >> bit) & 1) {
      b = c + d;
      a = std::move(d);
    } else {
      a = std::move(c);
      b = std::move(d);
    }
  }
  return a;
}

}  // namespace leafine
