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

#ifndef KURDTK_DATA_PATHS_H_
#define KURDTK_DATA_PATHS_H_

#include <string>
#include <string_view>

namespace kurdtk {

// Directory holding the shipped tables: $KURDTK_DATA_DIR when set, else the
// source tree's data/ when it exists, else the installed share/kurdtk.
std::string data_dir();

// data_dir() + "/" + relative.
std::string data_file(std::string_view relative);

}  // namespace kurdtk

#endif  // KURDTK_DATA_PATHS_H_
