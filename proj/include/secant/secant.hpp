#pragma once

#include "secant/errors.hpp"
#include "secant/numerics.hpp"
#include "secant/radial_solver.hpp"
#include "secant/momentum.hpp"
#include "secant/secant_bound.hpp"
#include "secant/reference.hpp"
#include "secant/output_record.hpp"
