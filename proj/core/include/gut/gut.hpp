#pragma once

#include "gut/classing.hpp"
#include "gut/decision.hpp"
#include "gut/envelope.hpp"
#include "gut/error.hpp"
#include "gut/interval.hpp"
#include "gut/measure_space.hpp"
#include "gut/random.hpp"
#include "gut/sequence.hpp"
#include "gut/variables.hpp"
