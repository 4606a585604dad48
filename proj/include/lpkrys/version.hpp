// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace lpkrys {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kToolName = "lpkrys";

}  // namespace lpkrys
