#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace cycdes {

// All counting and all quasisymmetric/Schur coefficients are exact.
// Multiplicities can reach factorial scale, so overflow must be impossible
// rather than detected.
using Int = boost::multiprecision::cpp_int;

}  // namespace cycdes
