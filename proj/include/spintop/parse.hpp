// Copyright 2026 The spintop Authors
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

#include <charconv>
#include <string>
#include <string_view>
#include <utility>

#include "spintop/common.hpp"

namespace spintop {

namespace detail {

inline bool parse_full(std::string_view text, double& out) {
  if (text.empty()) return false;
  if (text.front() == '+') text.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

}  // namespace detail

/// Parses "a", "bi", "a+bi" or "a-bi" (also "i", "-i", "a+i").
inline Complex parse_complex(std::string_view text) {
  const auto fail = [&] { return InvalidArgument("invalid complex value '" + std::string(text) + "'"); };
  std::string s;
  for (char c : text) {
    if (c != ' ') s.push_back(c);
  }
  if (s.empty()) throw fail();
  if (s.back() != 'i') {
    double re = 0.0;
    if (!detail::parse_full(s, re)) throw fail();
    return {re, 0.0};
  }
  s.pop_back();
  // Split before the last sign that is not a leading sign or an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string re_part = split == std::string::npos ? "" : s.substr(0, split);
  std::string im_part = split == std::string::npos ? s : s.substr(split);
  if (im_part.empty() || im_part == "+" || im_part == "-") im_part += "1";
  double re = 0.0, im = 0.0;
  if ((!re_part.empty() && !detail::parse_full(re_part, re)) || !detail::parse_full(im_part, im)) throw fail();
  return {re, im};
}

/// Parses "NxM" into (n_theta, n_phi).
inline std::pair<int, int> parse_grid_size(std::string_view text) {
  const auto fail = [&] { return InvalidArgument("invalid grid size '" + std::string(text) + "', expected NxM"); };
  const std::size_t x = text.find('x');
  if (x == std::string_view::npos) throw fail();
  int n = 0, m = 0;
  const auto a = std::from_chars(text.data(), text.data() + x, n);
  const auto b = std::from_chars(text.data() + x + 1, text.data() + text.size(), m);
  if (a.ec != std::errc() || a.ptr != text.data() + x || b.ec != std::errc() ||
      b.ptr != text.data() + text.size() || n < 1 || m < 1) {
    throw fail();
  }
  return {n, m};
}

}  // namespace spintop
