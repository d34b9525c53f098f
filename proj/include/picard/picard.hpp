/**
 * @file picard.hpp
 * @brief Umbrella header for the boundary-weight library.
 */
#pragma once

#include "picard/avoidance.hpp"
#include "picard/boundary.hpp"
#include "picard/character.hpp"
#include "picard/degeneration.hpp"
#include "picard/error.hpp"
#include "picard/exterior.hpp"
#include "picard/json_io.hpp"
#include "picard/parallel.hpp"
#include "picard/verify.hpp"
#include "picard/weyl.hpp"
