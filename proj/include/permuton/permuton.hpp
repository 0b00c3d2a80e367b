#pragma once

/// Umbrella header for the permuton library.

#include "permuton/errors.hpp"
#include "permuton/rational.hpp"
#include "permuton/cyclotomic.hpp"
#include "permuton/matrix.hpp"
#include "permuton/permutation.hpp"
#include "permuton/perm_group.hpp"
#include "permuton/group_action.hpp"
#include "permuton/character_table.hpp"
#include "permuton/natural_vector.hpp"
#include "permuton/representation.hpp"
#include "permuton/quantum.hpp"
#include "permuton/invariants.hpp"
#include "permuton/models.hpp"
#include "permuton/checks.hpp"
#include "permuton/report.hpp"
