// Copyright (c) 2026 The PageGuard Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>

namespace pageguard {

// 64-bit FNV-1a. Rolling form: feed chunks through fnv1a_update starting
// from kFnv1aBasis. Used as the transfer checksum of the corruption oracle
// and by the demo table records.
inline constexpr std::uint64_t kFnv1aBasis = 14695981039346656037ull;
inline constexpr std::uint64_t kFnv1aPrime = 1099511628211ull;

inline std::uint64_t fnv1a_update(std::uint64_t state, const void* data,
                                  std::size_t len) noexcept {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    state ^= p[i];
    state *= kFnv1aPrime;
  }
  return state;
}

inline std::uint64_t fnv1a(const void* data, std::size_t len) noexcept {
  return fnv1a_update(kFnv1aBasis, data, len);
}

}  // namespace pageguard
