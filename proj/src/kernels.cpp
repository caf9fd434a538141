#include "imw/kernels.hpp"

#include <algorithm>
#include <atomic>

namespace imw::kernels {

namespace scalar {

std::size_t first_gather_mismatch(const Elem* direct, const Elem* base,
                                  const Elem* idx, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (direct[i] != base[idx[i]]) return i;
  }
  return n;
}

std::size_t first_gather2_mismatch(const Elem* a_base, const Elem* a_idx,
                                   const Elem* b_base, const Elem* b_idx,
                                   std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (a_base[a_idx[i]] != b_base[b_idx[i]]) return i;
  }
  return n;
}

}  // namespace scalar

namespace {

struct Dispatch {
  GatherMismatchFn gather;
  Gather2MismatchFn gather2;
  Isa isa;
};

Dispatch make_dispatch(Isa isa) {
#if defined(IMW_HAVE_AVX2)
  if (isa == Isa::avx2) {
    return {avx2::first_gather_mismatch, avx2::first_gather2_mismatch,
            Isa::avx2};
  }
#endif
  (void)isa;
  return {scalar::first_gather_mismatch, scalar::first_gather2_mismatch,
          Isa::scalar};
}

std::atomic<GatherMismatchFn> g_gather{nullptr};
std::atomic<Gather2MismatchFn> g_gather2{nullptr};
std::atomic<Isa> g_isa{Isa::scalar};

void ensure_initialized() {
  if (g_gather.load(std::memory_order_acquire) != nullptr) return;
  set_active_isa(detected_isa());
}

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "unknown";
}

Isa detected_isa() {
#if defined(IMW_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  if (__builtin_cpu_supports("avx2")) return Isa::avx2;
#endif
  return Isa::scalar;
}

Isa active_isa() {
  ensure_initialized();
  return g_isa.load(std::memory_order_acquire);
}

Isa set_active_isa(Isa isa) {
  if (isa == Isa::avx2 && detected_isa() != Isa::avx2) isa = Isa::scalar;
  Dispatch d = make_dispatch(isa);
  g_gather2.store(d.gather2, std::memory_order_release);
  g_isa.store(d.isa, std::memory_order_release);
  g_gather.store(d.gather, std::memory_order_release);
  return d.isa;
}

std::size_t first_gather_mismatch(std::span<const Elem> direct,
                                  std::span<const Elem> base,
                                  std::span<const Elem> idx) {
  ensure_initialized();
  std::size_t n = std::min(direct.size(), idx.size());
  return g_gather.load(std::memory_order_acquire)(direct.data(), base.data(),
                                                  idx.data(), n);
}

std::size_t first_gather2_mismatch(std::span<const Elem> a_base,
                                   std::span<const Elem> a_idx,
                                   std::span<const Elem> b_base,
                                   std::span<const Elem> b_idx) {
  ensure_initialized();
  std::size_t n = std::min(a_idx.size(), b_idx.size());
  return g_gather2.load(std::memory_order_acquire)(
      a_base.data(), a_idx.data(), b_base.data(), b_idx.data(), n);
}

}  // namespace imw::kernels
