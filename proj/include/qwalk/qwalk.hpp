#ifndef QWALK_QWALK_HPP
#define QWALK_QWALK_HPP

#include "qwalk/arc_space.hpp"
#include "qwalk/char_poly.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/generators.hpp"
#include "qwalk/gi_invariants.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/graph6.hpp"
#include "qwalk/int_matrix.hpp"
#include "qwalk/numeric.hpp"
#include "qwalk/polynomial.hpp"
#include "qwalk/support_spectra.hpp"
#include "qwalk/verification.hpp"

#endif // QWALK_QWALK_HPP
