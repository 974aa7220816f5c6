#pragma once

#include "cavity.hpp"
#include "complex.hpp"
#include "decomposition.hpp"
#include "fixtures.hpp"
#include "gf2.hpp"
#include "graph.hpp"
#include "homology.hpp"
#include "neighborhood.hpp"
