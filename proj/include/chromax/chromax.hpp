#pragma once

#include "chromax/error.hpp"
#include "chromax/polyalg.hpp"
#include "chromax/graph.hpp"
#include "chromax/graph6.hpp"
#include "chromax/invariants.hpp"
#include "chromax/isomorphism.hpp"
#include "chromax/ears.hpp"
#include "chromax/chrompoly.hpp"
#include "chromax/families.hpp"
#include "chromax/verify.hpp"
