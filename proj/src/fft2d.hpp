#pragma once

#include <fftw3.h>

#include <complex>
#include <mutex>

namespace slepian::detail {

// In-place 2D complex transform on an ny-by-nx row-major buffer. The planner
// is not re-entrant, so plan creation is serialized.
class Fft2D {
 public:
  Fft2D(int nx, int ny);
  ~Fft2D();
  Fft2D(const Fft2D&) = delete;
  Fft2D& operator=(const Fft2D&) = delete;

  std::complex<double>* data() { return reinterpret_cast<std::complex<double>*>(buf_); }
  void forward() { fftw_execute(fwd_); }
  void backward() { fftw_execute(bwd_); }
  int nx() const { return nx_; }
  int ny() const { return ny_; }

 private:
  int nx_, ny_;
  fftw_complex* buf_;
  fftw_plan fwd_, bwd_;
};

}  // namespace slepian::detail
