/*
 * Copyright (c) 2026, The farhash Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "farhash/baselines.hpp"
#include "farhash/drusilla_index.hpp"
#include "farhash/error.hpp"
#include "farhash/eval.hpp"
#include "farhash/guaranteed_index.hpp"
#include "farhash/neighbor_list.hpp"
#include "farhash/parallel.hpp"
#include "farhash/point_set.hpp"
#include "farhash/projection.hpp"
