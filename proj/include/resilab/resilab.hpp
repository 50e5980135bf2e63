#pragma once

#include "resilab/adversary.hpp"
#include "resilab/cycles/fixed_length.hpp"
#include "resilab/cycles/long.hpp"
#include "resilab/cycles/medium.hpp"
#include "resilab/cycles/oracle.hpp"
#include "resilab/cycles/rotation.hpp"
#include "resilab/cycles/search.hpp"
#include "resilab/cycles/spectrum.hpp"
#include "resilab/errors.hpp"
#include "resilab/expansion.hpp"
#include "resilab/experiments.hpp"
#include "resilab/families.hpp"
#include "resilab/generators.hpp"
#include "resilab/graph.hpp"
#include "resilab/graph_io.hpp"
#include "resilab/rng.hpp"
#include "resilab/spectral.hpp"
