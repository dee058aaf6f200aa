#pragma once

#include "moblike/errors.hpp"
#include "moblike/factor.hpp"
#include "moblike/character.hpp"
#include "moblike/pointwise.hpp"
#include "moblike/sieve.hpp"
#include "moblike/summatory.hpp"
#include "moblike/hyperbola.hpp"
#include "moblike/growth.hpp"
#include "moblike/analytic/gamma.hpp"
#include "moblike/analytic/zeta.hpp"
#include "moblike/analytic/series.hpp"
#include "moblike/analytic/zeros.hpp"
#include "moblike/analytic/mellin.hpp"
