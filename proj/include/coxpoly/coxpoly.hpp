#pragma once

// Umbrella header: exact Coxeter polynomial computations for path algebras
// of acyclic quivers and canonical algebras, their classification by trace
// and coefficient conditions, and the homological trace identities.

#include "coxpoly/algebra_spec.hpp"
#include "coxpoly/classifier.hpp"
#include "coxpoly/closed_forms.hpp"
#include "coxpoly/coxeter.hpp"
#include "coxpoly/errors.hpp"
#include "coxpoly/exact_linalg.hpp"
#include "coxpoly/homological.hpp"
#include "coxpoly/int_matrix.hpp"
#include "coxpoly/json_io.hpp"
#include "coxpoly/numeric.hpp"
#include "coxpoly/poly.hpp"
#include "coxpoly/quiver.hpp"
#include "coxpoly/tree_enum.hpp"
#include "coxpoly/verify.hpp"
