#include "fft2d.hpp"

#include <new>

namespace slepian::detail {
namespace {
std::mutex planner_mutex;
}

Fft2D::Fft2D(int nx, int ny) : nx_(nx), ny_(ny) {
  std::lock_guard lock(planner_mutex);
  buf_ = fftw_alloc_complex(static_cast<std::size_t>(nx) * ny);
  if (!buf_) throw std::bad_alloc();
  fwd_ = fftw_plan_dft_2d(ny, nx, buf_, buf_, FFTW_FORWARD, FFTW_ESTIMATE);
  bwd_ = fftw_plan_dft_2d(ny, nx, buf_, buf_, FFTW_BACKWARD, FFTW_ESTIMATE);
}

Fft2D::~Fft2D() {
  std::lock_guard lock(planner_mutex);
  fftw_destroy_plan(fwd_);
  fftw_destroy_plan(bwd_);
  fftw_free(buf_);
}

}  // namespace slepian::detail
