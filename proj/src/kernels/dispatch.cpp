#include "nrack/kernels/axpy.hpp"

namespace nrack::kernels {

bool cpu_supports_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa best_isa() {
#if defined(NRACK_BUILD_AVX2)
  static const Isa isa = cpu_supports_avx2() ? Isa::Avx2 : Isa::Scalar;
  return isa;
#else
  return Isa::Scalar;
#endif
}

const char* isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

void axpy_mod(Isa isa, std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f, std::uint32_t p,
              std::size_t len) {
  if (isa == Isa::Avx2 && best_isa() == Isa::Avx2)
    axpy_mod_avx2(dst, src, f, p, len);
  else
    axpy_mod_scalar(dst, src, f, p, len);
}

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f, std::uint32_t p, std::size_t len) {
  axpy_mod(best_isa(), dst, src, f, p, len);
}

}  // namespace nrack::kernels
