#pragma once

#include "dfsion/core/apply.hpp"
#include "dfsion/core/basis.hpp"
#include "dfsion/core/errors.hpp"
#include "dfsion/core/measure.hpp"
#include "dfsion/core/rng.hpp"
#include "dfsion/core/state.hpp"
#include "dfsion/core/tolerances.hpp"
#include "dfsion/core/unitary.hpp"
