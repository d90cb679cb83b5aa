// Copyright 2026 The ontobench Authors
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

#ifndef ONTOBENCH_BUNDLED_HPP
#define ONTOBENCH_BUNDLED_HPP

// Copies of the files under data/, compiled into the library so scenarios
// run without locating the source tree.

#include <string_view>

namespace ontobench::bundled {

std::string_view hardy_bench();

/// "path_pair", "shared_particle" or "hardy_source"; throws std::out_of_range otherwise.
std::string_view state(std::string_view name);

/// JSON defaults of a scenario; throws std::out_of_range for unknown names.
std::string_view scenario_config(std::string_view name);

std::string_view density_after_bs();

}  // namespace ontobench::bundled

#endif
