/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 The fdxsim Authors. All rights reserved.
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "fdxsim/assignment.hpp"
#include "fdxsim/channel.hpp"
#include "fdxsim/errors.hpp"
#include "fdxsim/geometry.hpp"
#include "fdxsim/link_budget.hpp"
#include "fdxsim/power_allocation.hpp"
#include "fdxsim/relay_selection.hpp"
#include "fdxsim/rng.hpp"
#include "fdxsim/simulation.hpp"
#include "fdxsim/units.hpp"
