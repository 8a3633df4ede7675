#include "nrack/kernels/axpy.hpp"

namespace nrack::kernels {

void axpy_mod_scalar(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f, std::uint32_t p, std::size_t len) {
  for (std::size_t k = 0; k < len; ++k)
    dst[k] = static_cast<std::uint32_t>((dst[k] + static_cast<std::uint64_t>(f) * src[k]) % p);
}

}  // namespace nrack::kernels
