// SPDX-License-Identifier: Apache-2.0
//
// Everything: linear algebra, algebras and modules, decomposition, homological and relative tools, pipelines.
#pragma once

#include "fdim/harness.hpp"
#include "fdim/report.hpp"
