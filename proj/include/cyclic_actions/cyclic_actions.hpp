#pragma once

#include "cyclic_actions/big_count.hpp"
#include "cyclic_actions/counting.hpp"
#include "cyclic_actions/theorem_counts.hpp"
#include "cyclic_actions/tuples.hpp"
#include "cyclic_actions/verification/canonical.hpp"
#include "cyclic_actions/verification/compare.hpp"
#include "cyclic_actions/verification/moves.hpp"
#include "cyclic_actions/verification/orbits.hpp"
#include "cyclic_actions/verification/state.hpp"
