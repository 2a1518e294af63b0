#pragma once

#include "galois_diff/intmath.hpp"
#include "galois_diff/exactnum.hpp"
#include "galois_diff/poly.hpp"
#include "galois_diff/params.hpp"
#include "galois_diff/boseck.hpp"
#include "galois_diff/family.hpp"
#include "galois_diff/rep.hpp"
#include "galois_diff/structure.hpp"
#include "galois_diff/json_io.hpp"
