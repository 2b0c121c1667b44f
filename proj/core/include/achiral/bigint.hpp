#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace achiral {

using BigInt = boost::multiprecision::cpp_int;

// Exact determinant by fraction-free (Bareiss) elimination. The matrix is
// taken by value and destroyed. An empty matrix has determinant 1.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m);

}  // namespace achiral
