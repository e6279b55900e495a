// Copyright 2026 The tweetpiece Authors
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

#pragma once

#include <map>
#include <string>

namespace tweetpiece {

// Bundled emoji -> English alias table. Aliases are lowercase ASCII words
// separated by single spaces (underscored short names with the underscores
// replaced by spaces). Keys are the emoji UTF-8 sequences, without a
// trailing VS16 unless the symbol requires it.
const std::map<std::string, std::string>& bundled_emoji_aliases();

}  // namespace tweetpiece
