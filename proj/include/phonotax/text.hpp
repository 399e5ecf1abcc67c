// text.hpp
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
//
// Copyright 2026 The phonotax Authors.

#ifndef PHONOTAX_TEXT_HPP_
#define PHONOTAX_TEXT_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

// Small string helpers shared by the file readers.
namespace phonotax::text {

std::vector<std::string_view> split_lines(std::string_view document);
std::vector<std::string_view> split_whitespace(std::string_view s);
std::vector<std::string_view> split(std::string_view s, char sep);
std::string_view trim(std::string_view s);

bool is_skippable(std::string_view line);  // blank or `#` comment

std::string join(const std::vector<std::string>& parts, std::string_view sep);

// Number of UTF-8 code points; used for column alignment.
std::size_t display_width(std::string_view s);

std::string format_double(double value);  // round-trippable (%.17g)

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace phonotax::text

#endif  // PHONOTAX_TEXT_HPP_
