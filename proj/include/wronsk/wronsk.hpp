#ifndef WRONSK_WRONSK_HPP
#define WRONSK_WRONSK_HPP

// Bound states of one-dimensional potentials from Wronskians of a
// numerically integrated canonical solution pair against the closed-form
// asymptotic tails. Convenience header pulling in the whole library.

#include "wronsk/csv.hpp"
#include "wronsk/errors.hpp"
#include "wronsk/expression.hpp"
#include "wronsk/integrator.hpp"
#include "wronsk/potential.hpp"
#include "wronsk/solver.hpp"
#include "wronsk/wronskian.hpp"

#endif
