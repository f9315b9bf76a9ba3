// Copyright 2026 The Motif Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace motif {

/// Domain error carrying a stable machine-readable code alongside the
/// human-readable message. Codes are kebab-case tokens such as
/// "invalid-argument", "degenerate-path" or "corpus-too-small".
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  [[nodiscard]] const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void raise(std::string code, const std::string& message) {
  throw Error(std::move(code), message);
}

}  // namespace motif
