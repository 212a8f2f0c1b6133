// Copyright 2026 The bispinor Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "bispinor/dirac.hpp"
#include "bispinor/errors.hpp"
#include "bispinor/measures.hpp"
#include "bispinor/scenarios.hpp"
#include "bispinor/superposition.hpp"
#include "bispinor/tensor.hpp"
