#pragma once

#include "ccgolog/rational.hpp"
#include "ccgolog/errors.hpp"
#include "ccgolog/time_function.hpp"
#include "ccgolog/tform.hpp"
#include "ccgolog/interval_set.hpp"
#include "ccgolog/temporal.hpp"
#include "ccgolog/program.hpp"
#include "ccgolog/sexpr.hpp"
#include "ccgolog/expression.hpp"
#include "ccgolog/situation.hpp"
#include "ccgolog/domain.hpp"
#include "ccgolog/parser.hpp"
#include "ccgolog/validate.hpp"
#include "ccgolog/macros.hpp"
#include "ccgolog/engine.hpp"
#include "ccgolog/trace.hpp"
