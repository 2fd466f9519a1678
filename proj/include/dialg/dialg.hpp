#pragma once

// Umbrella header.

#include "dialg/error.hpp"
#include "dialg/field.hpp"
#include "dialg/linalg.hpp"
#include "dialg/algebra.hpp"
#include "dialg/format.hpp"
#include "dialg/identities.hpp"
#include "dialg/ideals.hpp"
#include "dialg/constructions.hpp"
#include "dialg/structure.hpp"
#include "dialg/classify.hpp"
#include "dialg/census.hpp"
