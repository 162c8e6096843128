// Umbrella header.

#ifndef LGORB_LGORB_HPP_
#define LGORB_LGORB_HPP_

#include "lgorb/catalog.hpp"
#include "lgorb/cycnum.hpp"
#include "lgorb/groebner.hpp"
#include "lgorb/jacobian.hpp"
#include "lgorb/linalg.hpp"
#include "lgorb/matgroup.hpp"
#include "lgorb/orbifold.hpp"
#include "lgorb/poly.hpp"
#include "lgorb/serialize.hpp"
#include "lgorb/word.hpp"

#endif  // LGORB_LGORB_HPP_
