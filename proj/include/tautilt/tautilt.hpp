#pragma once

// Umbrella header.

#include "tautilt/algebra_spec.hpp"
#include "tautilt/cli.hpp"
#include "tautilt/cone_dd.hpp"
#include "tautilt/decompose.hpp"
#include "tautilt/exchange_graph.hpp"
#include "tautilt/fan.hpp"
#include "tautilt/green.hpp"
#include "tautilt/hom.hpp"
#include "tautilt/markoff.hpp"
#include "tautilt/matrix.hpp"
#include "tautilt/path_algebra.hpp"
#include "tautilt/presentation.hpp"
#include "tautilt/render.hpp"
#include "tautilt/representation.hpp"
#include "tautilt/serialize.hpp"
#include "tautilt/stability.hpp"
#include "tautilt/submodules.hpp"
#include "tautilt/tau_tilting.hpp"
