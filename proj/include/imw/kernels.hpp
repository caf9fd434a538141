#pragma once

// Row-gather comparison kernels. Every structural check in the workbench
// (associativity, homomorphism, partial-map consistency) reduces to comparing
// one table row against a gathered row, so these loops are the only
// data-parallel hot spots. A scalar reference and an AVX2 variant exist;
// the active one is picked once at startup from CPUID.

#include <cstddef>
#include <span>
#include <string_view>

#include "imw/common.hpp"

namespace imw::kernels {

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa);

/// Best ISA supported by both the build and the running CPU.
Isa detected_isa();
/// ISA used by the dispatching entry points below.
Isa active_isa();
/// Override dispatch (tests, benchmarking). Requests for an unsupported ISA
/// fall back to scalar; returns the ISA actually installed.
Isa set_active_isa(Isa isa);

// First i in [0, idx.size()) with direct[i] != base[idx[i]], or idx.size().
// `direct` must have at least idx.size() entries; every idx[i] must be a
// valid offset into `base`.
using GatherMismatchFn = std::size_t (*)(const Elem* direct, const Elem* base,
                                         const Elem* idx, std::size_t n);

// First i with a_base[a_idx[i]] != b_base[b_idx[i]], or n.
using Gather2MismatchFn = std::size_t (*)(const Elem* a_base, const Elem* a_idx,
                                          const Elem* b_base, const Elem* b_idx,
                                          std::size_t n);

namespace scalar {
std::size_t first_gather_mismatch(const Elem* direct, const Elem* base,
                                  const Elem* idx, std::size_t n);
std::size_t first_gather2_mismatch(const Elem* a_base, const Elem* a_idx,
                                   const Elem* b_base, const Elem* b_idx,
                                   std::size_t n);
}  // namespace scalar

#if defined(IMW_HAVE_AVX2)
namespace avx2 {
std::size_t first_gather_mismatch(const Elem* direct, const Elem* base,
                                  const Elem* idx, std::size_t n);
std::size_t first_gather2_mismatch(const Elem* a_base, const Elem* a_idx,
                                   const Elem* b_base, const Elem* b_idx,
                                   std::size_t n);
}  // namespace avx2
#endif

std::size_t first_gather_mismatch(std::span<const Elem> direct,
                                  std::span<const Elem> base,
                                  std::span<const Elem> idx);

std::size_t first_gather2_mismatch(std::span<const Elem> a_base,
                                   std::span<const Elem> a_idx,
                                   std::span<const Elem> b_base,
                                   std::span<const Elem> b_idx);

}  // namespace imw::kernels
