#pragma once

// Umbrella header.

#include "dualadd/addition_classical.hpp"
#include "dualadd/bigfloat.hpp"
#include "dualadd/classical.hpp"
#include "dualadd/config.hpp"
#include "dualadd/continuous.hpp"
#include "dualadd/dual_addition.hpp"
#include "dualadd/errors.hpp"
#include "dualadd/gamma.hpp"
#include "dualadd/hermite_limit.hpp"
#include "dualadd/hypergeometric.hpp"
#include "dualadd/quadrature.hpp"
#include "dualadd/racah.hpp"
#include "dualadd/rational.hpp"
#include "dualadd/report.hpp"
#include "dualadd/suites.hpp"
#include "dualadd/surd_poly.hpp"
#include "dualadd/unipoly.hpp"
