// Copyright 2026 The fixpt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FIXPT_FIXPT_HPP
#define FIXPT_FIXPT_HPP

#include "fixpt/errors.hpp"
#include "fixpt/gaussian_rational.hpp"
#include "fixpt/matrix.hpp"
#include "fixpt/linalg.hpp"
#include "fixpt/fixed_point.hpp"
#include "fixpt/rank_one.hpp"
#include "fixpt/random.hpp"
#include "fixpt/superop.hpp"
#include "fixpt/preserver.hpp"
#include "fixpt/io.hpp"
#include "fixpt/report.hpp"

#endif  // FIXPT_FIXPT_HPP
