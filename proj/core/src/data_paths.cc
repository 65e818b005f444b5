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

#include "kurdtk/data_paths.h"

#include <cstdlib>
#include <filesystem>

namespace kurdtk {

std::string data_dir() {
  if (const char* env = std::getenv("KURDTK_DATA_DIR"); env && *env) {
    return env;
  }
  std::error_code ec;
  if (std::filesystem::is_directory(KURDTK_DATA_SOURCE_DIR, ec)) {
    return KURDTK_DATA_SOURCE_DIR;
  }
  return KURDTK_DATA_INSTALL_DIR;
}

std::string data_file(std::string_view relative) {
  return (std::filesystem::path(data_dir()) / relative).string();
}

}  // namespace kurdtk
