#pragma once

#include <optional>
#include <utility>

#include "pneg/error.hpp"

namespace testutil {

/// Runs f and reports the Errc it throws, if any.
template <typename F>
std::optional<pneg::Errc> thrown_code(F&& f) {
  try {
    std::forward<F>(f)();
  } catch (const pneg::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace testutil
