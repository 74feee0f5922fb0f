// Copyright 2026 The Berezin Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "berezin/calculus.hpp"
#include "berezin/element.hpp"
#include "berezin/gaussian.hpp"
#include "berezin/matrix.hpp"
#include "berezin/monomial.hpp"
#include "berezin/oscillator.hpp"
#include "berezin/path_integral.hpp"
#include "berezin/registry.hpp"
#include "berezin/report.hpp"
#include "berezin/run.hpp"
#include "berezin/selftest.hpp"
