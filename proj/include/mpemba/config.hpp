// Copyright 2026 The Mpemba Project Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MPEMBA_CONFIG_HPP
#define MPEMBA_CONFIG_HPP

#include <string>
#include <vector>

#include "mpemba/protocols.hpp"

namespace mpemba {

/// Parses the `key = value` config format: one pair per line, `#` comments,
/// comma-separated lists. Unknown keys are hard errors; omitted keys receive
/// the documented defaults. `overrides` entries ("key=value") are applied on
/// top of the file.
ExperimentConfig parse_config_text(const std::string& text,
                                   const std::vector<std::string>& overrides =
                                       {});
ExperimentConfig parse_config_file(const std::string& path,
                                   const std::vector<std::string>& overrides =
                                       {});

/// Fully resolved key = value listing of a config, echoing all defaults.
std::string config_echo(const ExperimentConfig& config);

}  // namespace mpemba

#endif
