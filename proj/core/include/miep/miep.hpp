#pragma once

#include "miep/assignment.hpp"
#include "miep/error.hpp"
#include "miep/family.hpp"
#include "miep/matrix.hpp"
#include "miep/random.hpp"
#include "miep/solvability.hpp"
#include "miep/solver.hpp"
