// Copyright 2026 The kurdtk Authors.
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

#ifndef KURDTK_TOOLS_COMMANDS_H_
#define KURDTK_TOOLS_COMMANDS_H_

#include <functional>
#include <map>

#include <CLI11.hpp>

#include "kurdtk/config.h"

namespace kurdtk::cli {

struct Context {
  Config config;
  bool quiet = false;
  bool records = false;  // --format records
};

using Runner = std::function<void(const Context&)>;
using Registry = std::map<const CLI::App*, Runner>;

void add_text_commands(CLI::App& app, Registry& registry);
void add_stats_commands(CLI::App& app, Registry& registry);
void add_lid_commands(CLI::App& app, Registry& registry);

}  // namespace kurdtk::cli

#endif  // KURDTK_TOOLS_COMMANDS_H_
