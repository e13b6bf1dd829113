#pragma once

#include "hodgeci/errors.hpp"
#include "hodgeci/numeric.hpp"
#include "hodgeci/bigraded.hpp"
#include "hodgeci/diamond.hpp"
#include "hodgeci/mhs.hpp"
#include "hodgeci/ambient.hpp"
#include "hodgeci/engine.hpp"
#include "hodgeci/diagnostics.hpp"
#include "hodgeci/series.hpp"
#include "hodgeci/oracles.hpp"
#include "hodgeci/verify.hpp"
#include "hodgeci/io.hpp"
