#pragma once

#include "aniso/spectral_field.hpp"
#include "aniso/transform.hpp"

namespace aniso {

/// Direct O(N^4) evaluation of f(x_j) = sum_k c_k exp(i xi_k . x_j), with the
/// Nyquist modes ignored. Independent of the FFT backend.
PhysicalField dft_to_physical(const SpectralField& f);
/// c_k = N^-2 sum_j f(x_j) exp(-i xi_k . x_j), Nyquist modes set to zero.
SpectralField dft_to_spectral(const PhysicalField& f);

}  // namespace aniso
