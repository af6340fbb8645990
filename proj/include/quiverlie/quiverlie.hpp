#pragma once

#include "quiverlie/heisenberg.hpp"
#include "quiverlie/nilrep.hpp"
#include "quiverlie/report.hpp"
#include "quiverlie/strata.hpp"
