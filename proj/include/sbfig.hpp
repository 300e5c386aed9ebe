/**
 * sbfig - fixed-figure geometry on S_b-metric spaces
 *
 * Copyright (c) 2026
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 *
 */
#pragma once

#include "sbfig/axioms.hpp"
#include "sbfig/contractions.hpp"
#include "sbfig/core.hpp"
#include "sbfig/figures.hpp"
#include "sbfig/metric_space.hpp"
#include "sbfig/verifier.hpp"
