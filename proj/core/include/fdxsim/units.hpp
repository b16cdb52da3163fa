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

namespace fdxsim {

/// dBm to watts. -inf dBm maps to exactly 0 W.
double dbm_to_watts(double dbm);

/// Watts to dBm. 0 W maps to -inf.
double watts_to_dbm(double watts);

/// Per-subcarrier noise power N0*W in watts from a density in dBm/Hz.
double noise_power_watts(double density_dbm_hz, double bandwidth_hz);

}  // namespace fdxsim
