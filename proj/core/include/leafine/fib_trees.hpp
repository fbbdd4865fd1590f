#pragma once

#include "leafine/bigcount.hpp"
#include "leafine/tree.hpp"

namespace leafine {

// f_0 = single vertex, f_1 = cherry, f_n = new root over f_{n-1}, f_{n-2}
// (stored in that order). Subtrees are shared, so memory is linear in n
// while the unfolded tree has F_{n+2} leaves and height n.
TopTree leaf_fibonacci(unsigned n);

// Binary Fibonacci tree: orders 0 and 1 are the single vertex; order n
// branches into orders n-1 and n-2. F_{n+1} leaves, 2 F_{n+1} - 1
// vertices for n >= 1.
TopTree knuth_fibonacci(unsigned order);

// F_0 = 0, F_1 = 1, F_n = F_{n-1} + F_{n-2}, exact.
BigCount fibonacci(unsigned long n);

}  // namespace leafine
