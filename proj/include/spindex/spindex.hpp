#ifndef SPINDEX_SPINDEX_HPP
#define SPINDEX_SPINDEX_HPP

// Umbrella header.

#include "spindex/clifford.hpp"
#include "spindex/config.hpp"
#include "spindex/fixed_point_io.hpp"
#include "spindex/gaussian_rational.hpp"
#include "spindex/laurent.hpp"
#include "spindex/localization.hpp"
#include "spindex/rational.hpp"
#include "spindex/rep_descriptor.hpp"
#include "spindex/report.hpp"
#include "spindex/series.hpp"
#include "spindex/sign_vectors.hpp"
#include "spindex/spin_matrix.hpp"
#include "spindex/trig_scalar.hpp"
#include "spindex/twist_conditions.hpp"
#include "spindex/verify.hpp"
#include "spindex/weight_calculus.hpp"
#include "spindex/weights.hpp"

#endif
