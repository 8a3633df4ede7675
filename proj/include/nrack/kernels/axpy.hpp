#pragma once

#include <cstddef>
#include <cstdint>

namespace nrack::kernels {

// dst[k] = (dst[k] + f * src[k]) mod p for k < len. Requires p < 2^26, f < p and entries < p.
void axpy_mod_scalar(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f, std::uint32_t p, std::size_t len);
void axpy_mod_avx2(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f, std::uint32_t p, std::size_t len);

enum class Isa { Scalar, Avx2 };

bool cpu_supports_avx2();
// AVX2 when both compiled in and supported by the CPU.
Isa best_isa();
const char* isa_name(Isa isa);

// Dispatches to the selected variant; `isa` defaults to best_isa().
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f, std::uint32_t p, std::size_t len);
void axpy_mod(Isa isa, std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f, std::uint32_t p,
              std::size_t len);

}  // namespace nrack::kernels
