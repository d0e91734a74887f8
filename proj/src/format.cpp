// Copyright 2026 The qss Authors
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

#include "qss/format.hpp"

#include <array>
#include <charconv>
#include <stdexcept>

namespace qss {

std::string format_real(double value, int significant) {
    if (value == 0.0) {
        return "0"; // also folds -0
    }
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                   std::chars_format::general, significant);
    if (res.ec != std::errc{}) {
        throw std::runtime_error("format_real: conversion failed");
    }
    return {buf.data(), res.ptr};
}

double round_significant(double value, int significant) {
    const std::string text = format_real(value, significant);
    double out = 0.0;
    std::from_chars(text.data(), text.data() + text.size(), out);
    return out;
}

} // namespace qss
