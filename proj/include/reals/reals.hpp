#pragma once

#include "reals/rational.hpp"
#include "reals/completion.hpp"
#include "reals/creal.hpp"
#include "reals/elementary.hpp"
#include "reals/expr.hpp"
#include "reals/eval.hpp"
#include "reals/bench.hpp"
