// Variant selection: LPC_VOXEL_KERNEL env override, then CPU detection.
#include "voxel/kernels.hpp"

#include <cstdlib>
#include <stdexcept>

namespace voxel::kernels {

namespace {

const Ops* detect() {
  const char* env = std::getenv("LPC_VOXEL_KERNEL");
  std::string want = env ? env : "auto";
  if (want != "auto") {
    const Ops* ops = by_name(want);
    if (ops == nullptr)
      throw std::runtime_error("LPC_VOXEL_KERNEL=" + want + " is not available on this machine");
    return ops;
  }
#if defined(__x86_64__) || defined(_M_X64)
  if (cpu_has_avx2_fma()) return &avx2_ops;
#endif
#if defined(__aarch64__)
  return &neon_ops;
#endif
  return &scalar_ops;
}

}  // namespace

const Ops& active() {
  static const Ops* ops = detect();
  return *ops;
}

const Ops* by_name(const std::string& name) {
  if (name == "scalar") return &scalar_ops;
#if defined(__x86_64__) || defined(_M_X64)
  if (name == "avx2" && cpu_has_avx2_fma()) return &avx2_ops;
#endif
#if defined(__aarch64__)
  if (name == "neon") return &neon_ops;
#endif
  return nullptr;
}

std::vector<const Ops*> available() {
  std::vector<const Ops*> out{&scalar_ops};
#if defined(__x86_64__) || defined(_M_X64)
  if (cpu_has_avx2_fma()) out.push_back(&avx2_ops);
#endif
#if defined(__aarch64__)
  out.push_back(&neon_ops);
#endif
  return out;
}

}  // namespace voxel::kernels
