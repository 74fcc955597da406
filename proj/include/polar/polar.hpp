#pragma once

#include "polar/ring.hpp"
#include "polar/monomial.hpp"
#include "polar/ideal.hpp"
#include "polar/decomposition.hpp"
#include "polar/polarization.hpp"
#include "polar/simplicial.hpp"
#include "polar/structure.hpp"
#include "polar/random.hpp"
#include "polar/text.hpp"
