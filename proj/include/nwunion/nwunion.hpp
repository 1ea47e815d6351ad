#pragma once

#include "cell.hpp"
#include "determinant.hpp"
#include "groebner.hpp"
#include "monomial.hpp"
#include "nw_ideal.hpp"
#include "permutation.hpp"
#include "poly_io.hpp"
#include "polynomial.hpp"
#include "union_synth.hpp"
#include "verify.hpp"
